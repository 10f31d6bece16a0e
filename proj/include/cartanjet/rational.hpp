#pragma once

#include <gmp.h>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cartanjet {

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Always kept canonical: lowest terms, denominator > 0, zero is 0/1.
/// Backed by GMP's mpq layer; this wrapper adds value semantics and the
/// small surface the rest of the library needs.
class Rat {
public:
    Rat() { mpq_init(q_); }
    Rat(long n) { mpq_init(q_); mpq_set_si(q_, n, 1); }
    Rat(int n) : Rat(static_cast<long>(n)) {}
    Rat(long num, long den);

    /// Parses "p", "-p", or "p/q" (decimal). Throws std::invalid_argument on
    /// malformed input or zero denominator.
    static Rat parse(std::string_view text);

    Rat(const Rat& o) { mpq_init(q_); mpq_set(q_, o.q_); }
    Rat(Rat&& o) noexcept { mpq_init(q_); mpq_swap(q_, o.q_); }
    Rat& operator=(const Rat& o) { mpq_set(q_, o.q_); return *this; }
    Rat& operator=(Rat&& o) noexcept { mpq_swap(q_, o.q_); return *this; }
    ~Rat() { mpq_clear(q_); }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
    int sign() const { return mpq_sgn(q_); }

    Rat& operator+=(const Rat& o) { mpq_add(q_, q_, o.q_); return *this; }
    Rat& operator-=(const Rat& o) { mpq_sub(q_, q_, o.q_); return *this; }
    Rat& operator*=(const Rat& o) { mpq_mul(q_, q_, o.q_); return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a)
    {
        Rat r;
        mpq_neg(r.q_, a.q_);
        return r;
    }

    /// Multiplicative inverse; throws std::domain_error on zero.
    Rat inverse() const;

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) >= 0; }

    /// Canonical rendering: "p" when the denominator is 1, else "p/q".
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    mpq_t q_;
};

inline Rat operator*(const Rat& a, long b) { return a * Rat(b); }
inline Rat operator*(long a, const Rat& b) { return Rat(a) * b; }

} // namespace cartanjet
