#pragma once

#include "cartanjet/rational.hpp"

namespace cartanjet {

/// Ring extension R[t]/(t^2). Used to differentiate jet-group expressions
/// formally in a flow parameter: coefficients stay exact, products of two
/// t-parts vanish.
template <class R>
struct Dual {
    R re{};
    R du{};

    Dual() = default;
    Dual(R r) : re(std::move(r)) {}
    Dual(R r, R d) : re(std::move(r)), du(std::move(d)) {}

    friend Dual operator+(const Dual& a, const Dual& b) { return {a.re + b.re, a.du + b.du}; }
    friend Dual operator-(const Dual& a, const Dual& b) { return {a.re - b.re, a.du - b.du}; }
    friend Dual operator-(const Dual& a) { return {-a.re, -a.du}; }
    friend Dual operator*(const Dual& a, const Dual& b)
    {
        return {a.re * b.re, a.re * b.du + a.du * b.re};
    }
    friend bool operator==(const Dual& a, const Dual& b) { return a.re == b.re && a.du == b.du; }
    friend bool operator!=(const Dual& a, const Dual& b) { return !(a == b); }
};

// ---- ring helpers shared by the templated jet code ----
// "like" variants derive contextual data (e.g. a symbol table) from a sample
// element; for plain rationals they ignore the sample.

inline Rat ring_zero_like(const Rat&) { return Rat(0); }
inline Rat ring_one_like(const Rat&) { return Rat(1); }
inline Rat ring_inverse(const Rat& r) { return r.inverse(); }
inline Rat ring_scale(const Rat& r, const Rat& s) { return r * s; }
inline bool ring_is_zero(const Rat& r) { return r.is_zero(); }

template <class R>
Dual<R> ring_zero_like(const Dual<R>& s)
{
    return {ring_zero_like(s.re), ring_zero_like(s.re)};
}

template <class R>
Dual<R> ring_one_like(const Dual<R>& s)
{
    return {ring_one_like(s.re), ring_zero_like(s.re)};
}

template <class R>
Dual<R> ring_inverse(const Dual<R>& x)
{
    // (a + bt)^-1 = a^-1 - a^-1 b a^-1 t
    R ai = ring_inverse(x.re);
    return {ai, -(ai * x.du * ai)};
}

template <class R>
Dual<R> ring_scale(const Dual<R>& x, const Rat& s)
{
    return {ring_scale(x.re, s), ring_scale(x.du, s)};
}

template <class R>
bool ring_is_zero(const Dual<R>& x)
{
    return ring_is_zero(x.re) && ring_is_zero(x.du);
}

} // namespace cartanjet
