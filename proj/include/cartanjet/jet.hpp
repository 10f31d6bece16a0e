#pragma once

#include "cartanjet/dual.hpp"
#include "cartanjet/rational.hpp"
#include "cartanjet/symidx.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace cartanjet {

// 2-jets and 3-jets of local diffeomorphism germs of R^n, in the coefficient
// normalization of the polynomial representative
//
//     f^mu(u) = base^mu + e1^mu_a u^a + e2^mu_ab u^a u^b (+ e3^mu_abc u^a u^b u^c)
//
// with e2 (e3) stored packed over sorted index pairs (triples). The group
// operations below are exact over any commutative coefficient ring R that
// provides the ring_* helpers (rationals, dual numbers, symbolic
// expressions).

template <class R>
struct Jet2T {
    int dim = 0;
    std::vector<R> base; // [n]
    std::vector<R> e1;   // [n*n], e1[mu*n + a]
    std::vector<R> e2;   // [n*sym2_size(n)]

    const R& c1(int mu, int a) const { return e1[mu * dim + a]; }
    R& c1(int mu, int a) { return e1[mu * dim + a]; }
    const R& c2(int mu, int a, int b) const
    {
        return e2[mu * sym2_size(dim) + sym2_offset(dim, a, b)];
    }
    R& c2(int mu, int a, int b) { return e2[mu * sym2_size(dim) + sym2_offset(dim, a, b)]; }

    friend bool operator==(const Jet2T& a, const Jet2T& b)
    {
        return a.dim == b.dim && a.base == b.base && a.e1 == b.e1 && a.e2 == b.e2;
    }
};

template <class R>
struct Jet3T {
    int dim = 0;
    std::vector<R> base;
    std::vector<R> e1;
    std::vector<R> e2;
    std::vector<R> e3; // [n*sym3_size(n)]

    const R& c1(int mu, int a) const { return e1[mu * dim + a]; }
    R& c1(int mu, int a) { return e1[mu * dim + a]; }
    const R& c2(int mu, int a, int b) const
    {
        return e2[mu * sym2_size(dim) + sym2_offset(dim, a, b)];
    }
    R& c2(int mu, int a, int b) { return e2[mu * sym2_size(dim) + sym2_offset(dim, a, b)]; }
    const R& c3(int mu, int a, int b, int c) const
    {
        return e3[mu * sym3_size(dim) + sym3_offset(dim, a, b, c)];
    }
    R& c3(int mu, int a, int b, int c)
    {
        return e3[mu * sym3_size(dim) + sym3_offset(dim, a, b, c)];
    }

    friend bool operator==(const Jet3T& a, const Jet3T& b)
    {
        return a.dim == b.dim && a.base == b.base && a.e1 == b.e1 && a.e2 == b.e2 && a.e3 == b.e3;
    }
};

using Jet2 = Jet2T<Rat>;
using Jet3 = Jet3T<Rat>;

namespace detail {

template <class R>
std::vector<R> filled(int count, const R& zero)
{
    return std::vector<R>(static_cast<size_t>(count), zero);
}

} // namespace detail

template <class R>
Jet2T<R> jet2_zero_like(int n, const R& sample)
{
    R z = ring_zero_like(sample);
    return {n, detail::filled(n, z), detail::filled(n * n, z), detail::filled(n * sym2_size(n), z)};
}

template <class R>
Jet3T<R> jet3_zero_like(int n, const R& sample)
{
    R z = ring_zero_like(sample);
    return {n, detail::filled(n, z), detail::filled(n * n, z), detail::filled(n * sym2_size(n), z),
            detail::filled(n * sym3_size(n), z)};
}

template <class R>
Jet2T<R> jet2_identity_like(int n, const R& sample)
{
    Jet2T<R> j = jet2_zero_like(n, sample);
    R one = ring_one_like(sample);
    for (int i = 0; i < n; ++i) j.c1(i, i) = one;
    return j;
}

template <class R>
Jet3T<R> jet3_identity_like(int n, const R& sample)
{
    Jet3T<R> j = jet3_zero_like(n, sample);
    R one = ring_one_like(sample);
    for (int i = 0; i < n; ++i) j.c1(i, i) = one;
    return j;
}

inline Jet2 jet2_identity(int n) { return jet2_identity_like(n, Rat(0)); }
inline Jet3 jet3_identity(int n) { return jet3_identity_like(n, Rat(0)); }

/// 2-jet of the translation u -> x + u: (x, delta, 0).
inline Jet2 natural_frame(const std::vector<Rat>& x)
{
    Jet2 j = jet2_identity(static_cast<int>(x.size()));
    j.base = x;
    return j;
}

template <class R>
bool jet_has_origin_base(const std::vector<R>& base)
{
    for (const R& v : base)
        if (!ring_is_zero(v)) return false;
    return true;
}

namespace detail {

inline void check_dims(int a, int b)
{
    if (a != b) throw std::invalid_argument("jet: dimension mismatch");
}

template <class J>
void check_group_factor(const J& g)
{
    if (!jet_has_origin_base(g.base))
        throw std::invalid_argument("jet: right factor of a composition must be based at the origin");
}

/// Inverse of an n x n matrix (row-major) by Gauss-Jordan elimination.
/// Pivots are inverted with ring_inverse; throws std::domain_error when no
/// usable pivot exists (singular matrix).
template <class R>
std::vector<R> mat_inverse(int n, const std::vector<R>& m)
{
    R zero = ring_zero_like(m[0]);
    R one = ring_one_like(m[0]);
    std::vector<R> a = m;
    std::vector<R> inv = filled(n * n, zero);
    for (int i = 0; i < n; ++i) inv[i * n + i] = one;

    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row) {
            if (!ring_is_zero(a[row * n + col])) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) throw std::domain_error("jet: singular first-order part");
        for (int k = 0; k < n; ++k) {
            std::swap(a[pivot * n + k], a[col * n + k]);
            std::swap(inv[pivot * n + k], inv[col * n + k]);
        }
        R pi = ring_inverse(a[col * n + col]);
        for (int k = 0; k < n; ++k) {
            a[col * n + k] = pi * a[col * n + k];
            inv[col * n + k] = pi * inv[col * n + k];
        }
        for (int row = 0; row < n; ++row) {
            if (row == col) continue;
            R f = a[row * n + col];
            if (ring_is_zero(f)) continue;
            for (int k = 0; k < n; ++k) {
                a[row * n + k] = a[row * n + k] - f * a[col * n + k];
                inv[row * n + k] = inv[row * n + k] - f * inv[col * n + k];
            }
        }
    }
    return inv;
}

} // namespace detail

/// Chain rule at order 2: jet of f composed with g, g based at the origin.
template <class R>
Jet2T<R> compose2(const Jet2T<R>& f, const Jet2T<R>& g)
{
    detail::check_dims(f.dim, g.dim);
    detail::check_group_factor(g);
    const int n = f.dim;
    Jet2T<R> out = jet2_zero_like(n, f.e1[0]);
    out.base = f.base;
    for (int mu = 0; mu < n; ++mu) {
        for (int p = 0; p < n; ++p) {
            R acc = ring_zero_like(f.e1[0]);
            for (int a = 0; a < n; ++a) acc = acc + f.c1(mu, a) * g.c1(a, p);
            out.c1(mu, p) = acc;
        }
        for (int p = 0; p < n; ++p) {
            for (int q = p; q < n; ++q) {
                R acc = ring_zero_like(f.e1[0]);
                for (int a = 0; a < n; ++a) {
                    for (int b = 0; b < n; ++b)
                        acc = acc + f.c2(mu, a, b) * g.c1(a, p) * g.c1(b, q);
                    acc = acc + f.c1(mu, a) * g.c2(a, p, q);
                }
                out.c2(mu, p, q) = acc;
            }
        }
    }
    return out;
}

/// Chain rule at order 3. The order-3 coefficient is the symmetrized
/// expansion of f(g(u)); it agrees with brute-force polynomial composition
/// (see oracle.hpp and the tests).
template <class R>
Jet3T<R> compose3(const Jet3T<R>& f, const Jet3T<R>& g)
{
    detail::check_dims(f.dim, g.dim);
    detail::check_group_factor(g);
    const int n = f.dim;
    const Rat two_thirds(2, 3);
    Jet3T<R> out = jet3_zero_like(n, f.e1[0]);
    out.base = f.base;
    for (int mu = 0; mu < n; ++mu) {
        for (int p = 0; p < n; ++p) {
            R acc = ring_zero_like(f.e1[0]);
            for (int a = 0; a < n; ++a) acc = acc + f.c1(mu, a) * g.c1(a, p);
            out.c1(mu, p) = acc;
        }
        for (int p = 0; p < n; ++p) {
            for (int q = p; q < n; ++q) {
                R acc = ring_zero_like(f.e1[0]);
                for (int a = 0; a < n; ++a) {
                    for (int b = 0; b < n; ++b)
                        acc = acc + f.c2(mu, a, b) * g.c1(a, p) * g.c1(b, q);
                    acc = acc + f.c1(mu, a) * g.c2(a, p, q);
                }
                out.c2(mu, p, q) = acc;
            }
        }
        for (int p = 0; p < n; ++p) {
            for (int q = p; q < n; ++q) {
                for (int r = q; r < n; ++r) {
                    R acc = ring_zero_like(f.e1[0]);
                    for (int a = 0; a < n; ++a) {
                        acc = acc + f.c1(mu, a) * g.c3(a, p, q, r);
                        for (int b = 0; b < n; ++b) {
                            R sym = g.c1(a, p) * g.c2(b, q, r) + g.c1(a, q) * g.c2(b, p, r) +
                                    g.c1(a, r) * g.c2(b, p, q);
                            acc = acc + ring_scale(f.c2(mu, a, b) * sym, two_thirds);
                            for (int c = 0; c < n; ++c)
                                acc = acc + f.c3(mu, a, b, c) * g.c1(a, p) * g.c1(b, q) * g.c1(c, r);
                        }
                    }
                    out.c3(mu, p, q, r) = acc;
                }
            }
        }
    }
    return out;
}

/// Recentres the polynomial representative at eps: returns the jet of
/// w -> f(eps + w). Exact as an operation on the cubic representative.
template <class R>
Jet3T<R> taylor_shift(const Jet3T<R>& f, const std::vector<R>& eps)
{
    const int n = f.dim;
    if (static_cast<int>(eps.size()) != n) throw std::invalid_argument("taylor_shift: bad offset size");
    Jet3T<R> out = f;
    for (int mu = 0; mu < n; ++mu) {
        R b = f.base[mu];
        for (int a = 0; a < n; ++a) {
            b = b + f.c1(mu, a) * eps[a];
            for (int bb = 0; bb < n; ++bb) {
                b = b + f.c2(mu, a, bb) * eps[a] * eps[bb];
                for (int c = 0; c < n; ++c) b = b + f.c3(mu, a, bb, c) * eps[a] * eps[bb] * eps[c];
            }
        }
        out.base[mu] = b;
        for (int p = 0; p < n; ++p) {
            R v = f.c1(mu, p);
            for (int b2 = 0; b2 < n; ++b2) {
                v = v + ring_scale(f.c2(mu, p, b2) * eps[b2], Rat(2));
                for (int c = 0; c < n; ++c)
                    v = v + ring_scale(f.c3(mu, p, b2, c) * eps[b2] * eps[c], Rat(3));
            }
            out.c1(mu, p) = v;
        }
        for (int p = 0; p < n; ++p) {
            for (int q = p; q < n; ++q) {
                R v = f.c2(mu, p, q);
                for (int c = 0; c < n; ++c)
                    v = v + ring_scale(f.c3(mu, p, q, c) * eps[c], Rat(3));
                out.c2(mu, p, q) = v;
            }
        }
    }
    return out;
}

/// Composition f.g for a right factor with arbitrary base point, by
/// recentring f at g's base. Used for conjugation with infinitesimal flows.
template <class R>
Jet3T<R> compose3_shifted(const Jet3T<R>& f, const Jet3T<R>& g)
{
    detail::check_dims(f.dim, g.dim);
    Jet3T<R> fs = taylor_shift(f, g.base);
    Jet3T<R> g0 = g;
    R z = ring_zero_like(g.e1[0]);
    for (R& v : g0.base) v = z;
    Jet3T<R> out = compose3(fs, g0);
    out.base = fs.base;
    return out;
}

/// Inverse 2-jet: first order is the matrix inverse, second order is
///   e^a_{mn} = - e^l_{bc} e^b_m e^c_n e^a_l.
/// The base label is kept; compose with the base cleared to round-trip.
template <class R>
Jet2T<R> inverse2(const Jet2T<R>& f)
{
    const int n = f.dim;
    Jet2T<R> out = jet2_zero_like(n, f.e1[0]);
    out.base = f.base;
    out.e1 = detail::mat_inverse(n, f.e1);
    for (int a = 0; a < n; ++a) {
        for (int m = 0; m < n; ++m) {
            for (int nu = m; nu < n; ++nu) {
                R acc = ring_zero_like(f.e1[0]);
                for (int l = 0; l < n; ++l)
                    for (int b = 0; b < n; ++b)
                        for (int c = 0; c < n; ++c)
                            acc = acc + f.c2(l, b, c) * out.e1[b * n + m] * out.e1[c * n + nu] *
                                          out.e1[a * n + l];
                out.c2(a, m, nu) = -acc;
            }
        }
    }
    return out;
}

template <class R>
Jet2T<R> jet2_of(const Jet3T<R>& f)
{
    return {f.dim, f.base, f.e1, f.e2};
}

/// Lifts a 2-jet to a 3-jet with vanishing third-order part.
template <class R>
Jet3T<R> jet3_zero_pad(const Jet2T<R>& f)
{
    Jet3T<R> out = jet3_zero_like(f.dim, f.e1[0]);
    out.base = f.base;
    out.e1 = f.e1;
    out.e2 = f.e2;
    return out;
}

/// Inverse 3-jet: orders 1-2 from inverse2, order 3 solved so that the
/// composition with f is the identity through order 3.
template <class R>
Jet3T<R> inverse3(const Jet3T<R>& f)
{
    const int n = f.dim;
    Jet2T<R> inv2 = inverse2(jet2_of(f));
    Jet3T<R> h = jet3_zero_pad(inv2);
    R z = ring_zero_like(f.e1[0]);
    for (R& v : h.base) v = z;

    Jet3T<R> r = compose3(f, h);
    // (f o h)_3 = e1 . h3 + (terms already in r): subtract via e1^{-1}.
    Jet3T<R> out = h;
    out.base = f.base;
    for (int a = 0; a < n; ++a) {
        for (int p = 0; p < n; ++p) {
            for (int q = p; q < n; ++q) {
                for (int s = q; s < n; ++s) {
                    R acc = ring_zero_like(f.e1[0]);
                    for (int mu = 0; mu < n; ++mu)
                        acc = acc + inv2.e1[a * n + mu] * r.c3(mu, p, q, s);
                    out.c3(a, p, q, s) = -acc;
                }
            }
        }
    }
    return out;
}

/// Decomposition of a group 2-jet g = (g1, g2) into (g1, 0) . (delta, g1^{-1} g2).
template <class R>
std::pair<Jet2T<R>, Jet2T<R>> semidirect_split(const Jet2T<R>& g)
{
    detail::check_group_factor(g);
    const int n = g.dim;
    Jet2T<R> lin = jet2_zero_like(n, g.e1[0]);
    lin.e1 = g.e1;
    Jet2T<R> nil = jet2_identity_like(n, g.e1[0]);
    std::vector<R> inv1 = detail::mat_inverse(n, g.e1);
    for (int a = 0; a < n; ++a)
        for (int p = 0; p < n; ++p)
            for (int q = p; q < n; ++q) {
                R acc = ring_zero_like(g.e1[0]);
                for (int b = 0; b < n; ++b) acc = acc + inv1[a * n + b] * g.c2(b, p, q);
                nil.c2(a, p, q) = acc;
            }
    return {lin, nil};
}

/// Entry-wise ring change, e.g. lifting rational jets into dual numbers.
template <class S, class F>
auto jet3_map(const Jet3T<S>& f, F&& fn) -> Jet3T<decltype(fn(f.e1[0]))>
{
    using R = decltype(fn(f.e1[0]));
    Jet3T<R> out;
    out.dim = f.dim;
    auto conv = [&](const std::vector<S>& v) {
        std::vector<R> o;
        o.reserve(v.size());
        for (const S& x : v) o.push_back(fn(x));
        return o;
    };
    out.base = conv(f.base);
    out.e1 = conv(f.e1);
    out.e2 = conv(f.e2);
    out.e3 = conv(f.e3);
    return out;
}

} // namespace cartanjet
