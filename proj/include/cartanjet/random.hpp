#pragma once

#include "cartanjet/jet.hpp"
#include "cartanjet/vecjet.hpp"

#include <cstdint>

namespace cartanjet {

/// Deterministic, platform-independent random source (splitmix64). The
/// standard distributions are not reproducible across library
/// implementations, so the property suites use this instead.
class RandomSource {
public:
    explicit RandomSource(uint64_t seed) : state_(seed) {}

    uint64_t next()
    {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi].
    long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1)); }

    /// Small rational with numerator in [-4,4] and denominator in [1,3].
    Rat rat() { return Rat(range(-4, 4), range(1, 3)); }

    /// Small nonzero rational.
    Rat rat_nonzero()
    {
        Rat r = rat();
        while (r.is_zero()) r = rat();
        return r;
    }

    /// Random group 2-jet (origin base, invertible linear part).
    Jet2 group_jet2(int n);

    /// Random group 3-jet.
    Jet3 group_jet3(int n);

    /// Random vector-field 2-jet.
    VecJet vecjet(int n);

private:
    bool invertible(const Jet2& j);
    uint64_t state_;
};

inline bool RandomSource::invertible(const Jet2& j)
{
    try {
        detail::mat_inverse(j.dim, j.e1);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

inline Jet2 RandomSource::group_jet2(int n)
{
    for (;;) {
        Jet2 j = jet2_zero_like(n, Rat(0));
        for (Rat& v : j.e1) v = rat();
        for (Rat& v : j.e2) v = rat();
        if (invertible(j)) return j;
    }
}

inline Jet3 RandomSource::group_jet3(int n)
{
    Jet3 j = jet3_zero_pad(group_jet2(n));
    for (Rat& v : j.e3) v = rat();
    return j;
}

inline VecJet RandomSource::vecjet(int n)
{
    VecJet x = vecjet_zero(n);
    for (Rat& v : x.m1) v = rat();
    for (Rat& v : x.x0) v = rat();
    for (Rat& v : x.x1) v = rat();
    return x;
}

} // namespace cartanjet
