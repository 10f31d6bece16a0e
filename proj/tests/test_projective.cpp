#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cartanjet/projective.hpp"
#include "cartanjet/random.hpp"

using namespace cartanjet;
using namespace cartanjet::proj;

TEST_CASE("sl(2) embedding")
{
    CHECK(embed_sl2({Rat(1), Rat(0), Rat(0)}) == jet2_identity(1));
    Jet2 j = embed_sl2({Rat(1), Rat(0), Rat(1)});
    CHECK(j.e1[0] == Rat(1));
    CHECK(j.e2[0] == Rat(-1));
    CHECK_THROWS_AS(embed_sl2({Rat(0), Rat(0), Rat(1)}), std::domain_error);
    CHECK_THROWS_AS(embed_sl2({Rat(1), Rat(1), Rat(0)}), std::invalid_argument);
}

TEST_CASE("moebius jets compose like the matrices")
{
    RandomSource rng(5);
    for (int i = 0; i < 40; ++i) {
        Sl2Element m1{rng.rat_nonzero(), Rat(0), rng.rat()};
        Sl2Element m2{rng.rat_nonzero(), Rat(0), rng.rat()};
        CHECK(compose2(embed_sl2(m1), embed_sl2(m2)) == embed_sl2(sl2_mul(m1, m2)));
        // the 3-jets compose as well
        Jet3 a = mobius_jet3(m1.a, m1.c), b = mobius_jet3(m2.a, m2.c);
        Sl2Element mm = sl2_mul(m1, m2);
        CHECK(compose3(a, b) == mobius_jet3(mm.a, mm.c));
    }
}

TEST_CASE("third-order lift")
{
    CHECK(lift3(ProjFrame2{Rat(0), Rat(1), Rat(0)}).e3[0].is_zero());
    CHECK(lift3(ProjFrame2{Rat(0), Rat(2), Rat(4)}).e3[0] == Rat(8));
    CHECK_THROWS_AS(lift3(ProjFrame2{Rat(0), Rat(0), Rat(1)}), std::domain_error);

    RandomSource rng(9);
    for (int i = 0; i < 60; ++i) {
        Jet3 mob = mobius_jet3(rng.rat_nonzero(), rng.rat(), rng.rat());
        CHECK(lift3(jet2_of(mob)) == mob);
    }
}

TEST_CASE("schwarzian")
{
    RandomSource rng(13);
    for (int i = 0; i < 60; ++i) {
        CHECK(schwarzian(mobius_jet3(rng.rat_nonzero(), rng.rat(), rng.rat())).is_zero());
        Jet3 j = rng.group_jet3(1);
        if (j.e3[0] * j.e1[0] != j.e2[0] * j.e2[0]) CHECK(!schwarzian(j).is_zero());
    }
    Jet3 cubic = jet3_zero_like(1, Rat(0));
    cubic.e1[0] = Rat(1);
    cubic.e3[0] = Rat(1);
    CHECK(schwarzian(cubic) == Rat(6));
    Jet3 sing = jet3_zero_like(1, Rat(0));
    CHECK_THROWS_AS(schwarzian(sing), std::domain_error);
}

TEST_CASE("schwarzian cocycle on random 3-jets")
{
    RandomSource rng(17);
    for (int i = 0; i < 120; ++i) {
        Jet3 f = rng.group_jet3(1), g = rng.group_jet3(1);
        CHECK(schwarzian(compose3(f, g)) == schwarzian(f) * g.e1[0] * g.e1[0] + schwarzian(g));
    }
}

TEST_CASE("schwarzian of polynomials at a point")
{
    // x + x^3 at 0: f''' / f' = 6
    CHECK(schwarzian_at({Rat(0), Rat(1), Rat(0), Rat(1)}, Rat(0)) == Rat(6));
    // truncation of a projective map stays in the kernel at the base point
    Jet3 mob = mobius_jet3(Rat(2), Rat(3));
    CHECK(schwarzian_at({mob.base[0], mob.e1[0], mob.e2[0], mob.e3[0]}, Rat(0)).is_zero());
    CHECK_THROWS_AS(schwarzian_at({Rat(0), Rat(0), Rat(1)}, Rat(0)), std::domain_error);
}

TEST_CASE("frame transforms")
{
    ProjFrame2 f{Rat(3), Rat(1), Rat(0)};
    Jet3 ident = jet3_identity(1);
    ident.base[0] = Rat(3);
    CHECK(transform_frame(f, ident) == ProjFrame2{Rat(3), Rat(1), Rat(0)});

    RandomSource rng(19);
    for (int i = 0; i < 40; ++i) {
        ProjFrame2 fr = {rng.rat(), rng.rat_nonzero(), rng.rat()};
        Jet3 phi = rng.group_jet3(1);
        ProjFrame2 t = transform_frame(fr, phi);
        Jet2 via = compose2(jet2_of(phi), frame_jet({Rat(0), fr.e, fr.e2}));
        CHECK(t.e == via.e1[0]);
        CHECK(t.e2 == via.e2[0]);
    }
}

TEST_CASE("the full projective suite passes")
{
    verify::SuiteOptions opt;
    opt.samples = 40;
    auto checks = projective_checks(opt);
    CHECK(checks.size() >= 18);
    for (const auto& c : checks) {
        INFO(c.id, ": ", c.residual);
        CHECK(c.pass);
    }
}
