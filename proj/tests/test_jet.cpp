#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cartanjet/jet.hpp"
#include "cartanjet/oracle.hpp"
#include "cartanjet/random.hpp"

using namespace cartanjet;

namespace {

Jet2 j2(const Rat& base, const Rat& e1, const Rat& e2)
{
    Jet2 f = jet2_zero_like(1, Rat(0));
    f.base[0] = base;
    f.e1[0] = e1;
    f.e2[0] = e2;
    return f;
}

Jet3 j3(const Rat& base, const Rat& e1, const Rat& e2, const Rat& e3)
{
    Jet3 f = jet3_zero_like(1, Rat(0));
    f.base[0] = base;
    f.e1[0] = e1;
    f.e2[0] = e2;
    f.e3[0] = e3;
    return f;
}

Jet2 cleared(Jet2 f)
{
    for (Rat& v : f.base) v = Rat(0);
    return f;
}

Jet3 cleared(Jet3 f)
{
    for (Rat& v : f.base) v = Rat(0);
    return f;
}

} // namespace

TEST_CASE("symmetric packing round trip")
{
    for (int n : {1, 2, 3}) {
        int k = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b) CHECK(sym2_offset(n, a, b) == k++);
        CHECK(k == sym2_size(n));
        k = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b)
                for (int c = b; c < n; ++c) CHECK(sym3_offset(n, a, b, c) == k++);
        CHECK(k == sym3_size(n));
        CHECK(sym2_offset(n, n - 1, 0) == sym2_offset(n, 0, n - 1));
        CHECK(sym3_offset(n, n - 1, 0, n - 1) == sym3_offset(n, 0, n - 1, n - 1));
    }
}

TEST_CASE("compose2 chain rule examples")
{
    // 2(u+u^2) + 3(u+u^2)^2 truncated at order 2
    CHECK(compose2(j2(0, 2, 3), j2(0, 1, 1)) == j2(0, 2, 5));
    // identity on either side
    Jet2 f = j2(0, 2, 3);
    CHECK(compose2(f, jet2_identity(1)) == f);
    CHECK(compose2(jet2_identity(1), f) == f);
    CHECK(compose2(j2(0, 1, 0), j2(0, 3, -1)) == j2(0, 3, -1));
}

TEST_CASE("compose2 preconditions")
{
    CHECK_THROWS_AS(compose2(j2(0, 2, 3), j2(1, 1, 0)), std::invalid_argument);
    Jet2 f = j2(0, 1, 0);
    Jet2 g = jet2_identity(2);
    CHECK_THROWS_AS(compose2(f, g), std::invalid_argument);
}

TEST_CASE("compose3 frozen examples against the polynomial oracle")
{
    // (u+u^2) + (u+u^2)^3 truncated at order 3 is u + u^2 + u^3
    Jet3 f = j3(0, 1, 0, 1);
    Jet3 g = j3(0, 1, 1, 0);
    Jet3 expect = j3(0, 1, 1, 1);
    CHECK(compose3(f, g) == expect);
    CHECK(oracle::compose3_ref(f, g) == expect);

    CHECK(compose3(jet3_identity(1), g) == g);
    CHECK(compose3(j3(0, 2, 0, 0), j3(0, 1, 0, 1)) == j3(0, 2, 0, 2));
}

TEST_CASE("compose agrees with the brute-force oracle on random jets")
{
    RandomSource rng(7);
    for (int n : {1, 2, 3}) {
        for (int i = 0; i < 60; ++i) {
            Jet3 f = rng.group_jet3(n);
            Jet3 g = rng.group_jet3(n);
            CHECK(compose3(f, g) == oracle::compose3_ref(f, g));
            Jet2 f2 = jet2_of(f), g2 = jet2_of(g);
            CHECK(compose2(f2, g2) == oracle::compose2_ref(f2, g2));
        }
    }
}

TEST_CASE("group axioms")
{
    RandomSource rng(11);
    for (int n : {1, 2, 3}) {
        for (int i = 0; i < 25; ++i) {
            Jet3 a = rng.group_jet3(n), b = rng.group_jet3(n), c = rng.group_jet3(n);
            CHECK(compose3(compose3(a, b), c) == compose3(a, compose3(b, c)));
            Jet2 a2 = jet2_of(a), b2 = jet2_of(b), c2 = jet2_of(c);
            CHECK(compose2(compose2(a2, b2), c2) == compose2(a2, compose2(b2, c2)));

            Jet3 id = jet3_identity(n);
            CHECK(compose3(a, id) == a);
            CHECK(compose3(id, a) == a);

            Jet3 ai = inverse3(a);
            CHECK(compose3(a, ai) == id);
            CHECK(compose3(ai, a) == id);
        }
    }
}

TEST_CASE("compose3 restricted to order 2 equals compose2")
{
    RandomSource rng(13);
    for (int n : {1, 2, 3})
        for (int i = 0; i < 20; ++i) {
            Jet3 f = rng.group_jet3(n), g = rng.group_jet3(n);
            CHECK(jet2_of(compose3(f, g)) == compose2(jet2_of(f), jet2_of(g)));
        }
}

TEST_CASE("inverse2 closed form")
{
    CHECK(inverse2(j2(0, 2, 3)) == j2(0, Rat(1, 2), Rat(-3, 8)));
    CHECK(inverse2(jet2_identity(1)) == jet2_identity(1));
    CHECK(inverse2(j2(0, 1, 5)) == j2(0, 1, -5));
    CHECK_THROWS_AS(inverse2(j2(0, 0, 1)), std::domain_error);
}

TEST_CASE("inverse round trips")
{
    RandomSource rng(17);
    for (int n : {1, 2, 3}) {
        for (int i = 0; i < 25; ++i) {
            Jet2 g = rng.group_jet2(n);
            CHECK(compose2(g, inverse2(g)) == jet2_identity(n));
            CHECK(compose2(inverse2(g), g) == jet2_identity(n));
        }
    }
}

TEST_CASE("inverse recentres at the image point")
{
    // f(u) = x + 2u + 3u^2 has inverse germ centred over x; composing with
    // the base cleared gives back the translation jet u -> x + u.
    Jet2 f = j2(5, 2, 3);
    Jet2 inv = inverse2(f);
    CHECK(inv.base[0] == Rat(5));
    CHECK(compose2(f, cleared(inv)) == natural_frame({Rat(5)}));

    Jet3 f3 = j3(5, 2, 3, 0);
    Jet3 inv3 = inverse3(f3);
    CHECK(inv3.base[0] == Rat(5));
    Jet3 r = compose3(f3, cleared(inv3));
    Jet3 expect = jet3_identity(1);
    expect.base[0] = Rat(5);
    CHECK(r == expect);
}

TEST_CASE("inverse3 series reversion values")
{
    CHECK(inverse3(jet3_identity(1)) == jet3_identity(1));
    CHECK(inverse3(j3(0, 1, 0, 1)) == j3(0, 1, 0, -1));
    // reversion of 2u + 3u^2: third coefficient (2 b^2 - a c)/a^5 = 9/16
    Jet3 inv = inverse3(j3(0, 2, 3, 0));
    CHECK(inv == j3(0, Rat(1, 2), Rat(-3, 8), Rat(9, 16)));
}

TEST_CASE("taylor shift is polynomial recentring")
{
    // f(u) = u + u^3, eps = 1: f(1+w) = 2 + 4w + 3w^2 + w^3
    Jet3 f = j3(0, 1, 0, 1);
    Jet3 s = taylor_shift(f, {Rat(1)});
    CHECK(s == j3(2, 4, 3, 1));
}

TEST_CASE("taylor shift matches the oracle in higher dimension")
{
    RandomSource rng(29);
    for (int n : {2, 3}) {
        for (int i = 0; i < 15; ++i) {
            Jet3 f = rng.group_jet3(n);
            std::vector<Rat> eps(n);
            for (Rat& v : eps) v = rng.rat();

            // substitute u_a -> eps_a + u_a into the cubic representative
            auto fp = oracle::polys_of_jet3(f);
            std::vector<oracle::Poly> args;
            for (int a = 0; a < n; ++a) {
                oracle::Poly p = oracle::poly_zero(n, 3);
                p.add({}, eps[a]);
                p.add({a}, Rat(1));
                args.push_back(std::move(p));
            }
            std::vector<oracle::Poly> shifted;
            std::vector<Rat> base;
            for (int mu = 0; mu < n; ++mu) {
                oracle::Poly q = oracle::substitute(fp[mu], args);
                base.push_back(q.get({}));
                shifted.push_back(std::move(q));
            }
            CHECK(taylor_shift(f, eps) == oracle::jet3_of_polys(shifted, base));
        }
    }
}

TEST_CASE("composition with a based right factor matches plain substitution")
{
    RandomSource rng(31);
    for (int n : {1, 2}) {
        for (int i = 0; i < 15; ++i) {
            Jet3 f = rng.group_jet3(n);
            Jet3 g = rng.group_jet3(n);
            for (Rat& v : g.base) v = rng.rat();

            auto fp = oracle::polys_of_jet3(f);
            auto gp = oracle::polys_of_jet3(g);
            std::vector<oracle::Poly> comp;
            std::vector<Rat> base;
            for (int mu = 0; mu < n; ++mu) {
                oracle::Poly q = oracle::substitute(fp[mu], gp);
                base.push_back(q.get({}));
                comp.push_back(std::move(q));
            }
            CHECK(compose3_shifted(f, g) == oracle::jet3_of_polys(comp, base));
        }
    }
}

TEST_CASE("natural frame")
{
    CHECK(natural_frame({Rat(0)}) == jet2_identity(1));
    CHECK(natural_frame({Rat(7)}) == j2(7, 1, 0));
    Jet2 nf = natural_frame({Rat(1), Rat(2)});
    Jet2 expect = jet2_identity(2);
    expect.base = {Rat(1), Rat(2)};
    CHECK(nf == expect);
}

TEST_CASE("semidirect split")
{
    auto [lin, nil] = semidirect_split(j2(0, 2, 6));
    CHECK(lin == j2(0, 2, 0));
    CHECK(nil == j2(0, 1, 3));
    CHECK(compose2(lin, nil) == j2(0, 2, 6));

    auto [l2, n2] = semidirect_split(j2(0, 5, 0));
    CHECK(l2 == j2(0, 5, 0));
    CHECK(n2 == jet2_identity(1));

    auto [l3, n3] = semidirect_split(j2(0, 1, 4));
    CHECK(l3 == jet2_identity(1));
    CHECK(n3 == j2(0, 1, 4));

    RandomSource rng(23);
    for (int n : {1, 2, 3})
        for (int i = 0; i < 20; ++i) {
            Jet2 g = rng.group_jet2(n);
            auto [a, b] = semidirect_split(g);
            CHECK(compose2(a, b) == g);
            for (const Rat& v : a.e2) CHECK(v.is_zero());
            CHECK(jet2_of(jet3_zero_pad(b)).e1 == jet2_identity(n).e1);
        }
}
