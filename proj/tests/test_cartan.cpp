#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cartanjet/cartanconn.hpp"

using namespace cartanjet;
using namespace cartanjet::cartan;

TEST_CASE("solder forms at the natural frame")
{
    BundleContext B;
    std::map<symba::GenId, Expr> nat{{B.e, B.c(Rat(1))}, {B.e2, B.c(Rat(0))}};
    CHECK(substitute(B.solder_m1(), nat) == B.g(B.dx));
    CHECK(substitute(B.solder_0(), nat) == B.g(B.de));
}

TEST_CASE("torsion-free condition is an exact identity")
{
    BundleContext B;
    Expr res = B.d(B.solder_m1()) + B.solder_0() * B.solder_m1();
    CHECK(res.is_zero());
}

TEST_CASE("graded bracket antisymmetry on the weight triple")
{
    BundleContext B;
    GTriple a{B.g(B.dx), B.g(B.de), B.g(B.w1)}; // odd coefficients
    GTriple b{B.g(B.de2), B.g(B.de3), B.g(B.de)};
    // both odd: [a,b] = +[b,a]
    CHECK((gbracket(a, b) - gbracket(b, a)).is_zero());

    GTriple even{B.g(B.e), B.g(B.e2), B.g(B.e3)};
    // odd-even: [a,even] = -[even,a]
    CHECK((gbracket(a, even) + gbracket(even, a)).is_zero());
}

TEST_CASE("weight-slot bracket agrees with the vector-field bracket on even coefficients")
{
    BundleContext B;
    GTriple a{B.g(B.e), B.g(B.e2), B.g(B.e3)};
    GTriple b{B.g(B.e2), B.g(B.e, 2), B.c(Rat(5))};
    GTriple viaraw = to_weight_slots(bracket_vf(to_raw_slots(a), to_raw_slots(b)));
    CHECK((viaraw - gbracket(a, b)).is_zero());
}

TEST_CASE("the full bundle suite passes")
{
    auto checks = bundle_checks();
    CHECK(checks.size() >= 10);
    for (const auto& c : checks) {
        INFO(c.id, ": ", c.residual);
        CHECK(c.pass);
    }
}
