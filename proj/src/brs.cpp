#include "cartanjet/brs.hpp"

#include "cartanjet/cartanconn.hpp"

namespace cartanjet::brs {

using cartan::check_gtriple;
using cartan::gbracket;
using symba::compose_check;
using symba::GenId;

namespace {
const std::string S = "brs";
}

GTriple ghost_from_vector(const FieldContext& F) { return F.ghost(); }

GTriple brs_on_connection(const FieldContext& F, const GTriple& omega_forms, const GTriple& ghost)
{
    GTriple br = gbracket(omega_forms, ghost);
    return {-F.d(ghost.m1) - br.m1, -F.d(ghost.z0) - br.z0, -F.d(ghost.p1) - br.p1};
}

namespace {

/// The projective frame 3-jet l(e2) in inverse-frame variables.
Jet3T<Expr> frame_lift(const FieldContext& F)
{
    Expr e = F.g(F.E, -1);                     // e^x_u
    Expr m = -(F.g(F.E2) * F.g(F.E, -3));      // e^x_uu (derivative form)
    Expr j3 = m * m * e.inverse() * Rat(3, 2); // projective third order
    return cartan::sym_jet3(&F.alg, e, m, j3);
}

} // namespace

GTriple residual_ghosts(const FieldContext& F)
{
    Jet3T<Expr> l = frame_lift(F);
    GTriple ad = cartan::adjoint_triple(l, F.ghost());

    // e2 . s e2^{-1} = -(s e2) . e2^{-1} at jet level
    Jet3T<Expr> sl = l;
    for (Expr& v : sl.e1) v = F.s(v);
    for (Expr& v : sl.e2) v = F.s(v);
    for (Expr& v : sl.e3) v = F.s(v);
    Jet3T<Expr> mc = compose3(sl, inverse3(l));

    return {ad.m1, ad.z0 - mc.e1[0], ad.p1 - mc.e2[0] * Rat(2)};
}

GTriple gamma_coeff_triple(const FieldContext& F)
{
    return {F.c(Rat(1)), Expr::zero(&F.alg), F.gamma_coeff()};
}

std::vector<verify::Check> nilpotency_checks(const FieldContext& F)
{
    std::vector<verify::Check> out;
    {
        auto bad = compose_check(F.s, F.s, F.brs_generator_basis(), 4, &F.ddx);
        out.push_back(verify::check_flag(S, "s-nilpotent",
                                         "s^2 = 0 on all generators and prolongations to order 4",
                                         bad.empty(),
                                         bad.empty() ? "" : bad.front().residual.str()));
    }
    {
        auto bad = compose_check(F.d, F.s, F.brs_generator_basis(), 4, &F.ddx);
        out.push_back(verify::check_flag(S, "ds-plus-sd",
                                         "d s + s d = 0 on all generators and prolongations",
                                         bad.empty(),
                                         bad.empty() ? "" : bad.front().residual.str()));
    }
    {
        auto bad = compose_check(F.d, F.d, F.brs_generator_basis(), 4, &F.ddx);
        out.push_back(
            verify::check_flag(S, "d-nilpotent", "d^2 = 0 on the field algebra", bad.empty()));
    }
    return out;
}

std::vector<verify::Check> lie_derivative_check(const FieldContext& F)
{
    std::vector<verify::Check> out;
    GTriple A = F.connection_forms();
    GTriple coeffs = F.connection_coeffs();
    GTriple gamma = ghost_from_vector(F);

    {
        Expr mid = (F.g(F.E2) * F.g(F.E, -1) + F.g(F.E) * F.ddx(F.g(F.E, -1))) * F.g(F.xi);
        GTriple res{gamma.m1 - F.g(F.E) * F.g(F.xi), gamma.z0 - mid,
                    gamma.p1 - F.g(F.w) * F.g(F.xi)};
        out.push_back(check_gtriple(S, "ghost-components",
                                    "the vector ghost has components (E xi, theta0 xi, w xi)",
                                    res));
    }
    {
        GTriple res{F.s(coeffs.m1) - F.ddx(coeffs.m1 * F.g(F.xi)),
                    F.s(coeffs.z0) - F.ddx(coeffs.z0 * F.g(F.xi)),
                    F.s(coeffs.p1) - F.ddx(coeffs.p1 * F.g(F.xi))};
        out.push_back(check_gtriple(S, "variation-transports-coefficients",
                                    "s(coefficient) = d/dx(coefficient . xi) in every slot", res));
    }
    {
        GTriple rhs = brs_on_connection(F, A, gamma);
        GTriple res{F.s(A.m1) - rhs.m1, F.s(A.z0) - rhs.z0, F.s(A.p1) - rhs.p1};
        out.push_back(check_gtriple(S, "variation-matches-gauge-form",
                                    "s(omega) = -d(gamma) - [omega, gamma] with the vector ghost",
                                    res));
    }
    {
        auto lie = [&](const Expr& a) { return F.ixi(F.d(a)) - F.d(F.ixi(a)); };
        GTriple res{F.s(A.m1) - lie(A.m1), F.s(A.z0) - lie(A.z0), F.s(A.p1) - lie(A.p1)};
        out.push_back(check_gtriple(S, "lie-derivative-operator-form",
                                    "s = i_xi d - d i_xi on the pulled-back connection", res));
    }
    return out;
}

std::vector<verify::Check> frame_variation_checks(const FieldContext& F)
{
    std::vector<verify::Check> out;
    Expr sE2_mid = F.g(F.E) * F.s(F.theta0_coeff()) +
                   F.g(F.E, -1) * F.g(F.E2) * F.s(F.g(F.E)) +
                   F.g(F.E, -1) * F.ddx(F.g(F.E)) * F.s(F.g(F.E)) -
                   F.g(F.E, 2) * F.ddx(F.s(F.g(F.E, -1)));
    out.push_back(verify::check_expr(S, "frame-variation-display",
                                     "the second-order frame variation matches its display",
                                     F.s(F.g(F.E2)) - sE2_mid));
    out.push_back(verify::check_expr(S, "frame-variation-first", "s e^u_x = d/dx(e^u_x xi)",
                                     F.s(F.g(F.E)) - F.ddx(F.g(F.E) * F.g(F.xi))));
    return out;
}

std::vector<verify::Check> residual_ghost_checks(const FieldContext& F)
{
    std::vector<verify::Check> out;
    GTriple gamma = ghost_from_vector(F);
    GTriple c = residual_ghosts(F);
    Expr gammac = F.gamma_coeff();
    auto xi = [&](int k) { return F.jet(F.xi, k); };

    out.push_back(verify::check_expr(S, "residual-ghost-translation", "c^x = xi",
                                     c.m1 - F.g(F.xi)));
    out.push_back(verify::check_expr(S, "residual-ghost-gl0", "c^x_x = d/dx xi", c.z0 - xi(1)));
    out.push_back(verify::check_expr(S, "residual-ghost-gl1",
                                     "c^x_xx = d^2/dx^2 xi + Gamma^x_xx,x xi",
                                     c.p1 - xi(2) - gammac * F.g(F.xi)));

    // displayed sector combinations
    Expr m = -(F.g(F.E2) * F.g(F.E, -3)); // e^x_uu
    Expr c1_mid = F.g(F.E, -1) * gamma.m1;
    Expr c2_mid = m * F.g(F.E) * gamma.m1 + gamma.z0 + F.g(F.E, -1) * F.s(F.g(F.E));
    Expr c3_mid = F.g(F.E2, 2) * F.g(F.E, -3) * Rat(1, 2) * gamma.m1 +
                  m * F.g(F.E, 2) * gamma.z0 + gamma.p1 * F.g(F.E) +
                  m * F.g(F.E) * Rat(2) * F.s(F.g(F.E)) + F.g(F.E, -1) * F.s(F.g(F.E2));
    out.push_back(check_gtriple(S, "residual-ghost-displays",
                                "the displayed sector combinations equal the redefined ghost",
                                {c.m1 - c1_mid, c.z0 - c2_mid, c.p1 - c3_mid}));
    return out;
}

std::vector<verify::Check> virasoro_variation(const FieldContext& F)
{
    std::vector<verify::Check> out;
    const Expr zero = Expr::zero(&F.alg);
    Expr gammac = F.gamma_coeff();
    auto xi = [&](int k) { return F.jet(F.xi, k); };

    out.push_back(verify::check_expr(S, "gamma-translation-frozen", "s Gamma^x_,x = 0",
                                     F.s(F.c(Rat(1)))));
    out.push_back(verify::check_expr(S, "gamma-gl0-frozen", "s Gamma^x_x,x = 0", F.s(zero)));
    Expr rhs = xi(3) + F.g(F.xi) * F.ddx(gammac) + xi(1) * gammac * Rat(2);
    out.push_back(verify::check_expr(S, "virasoro-variation",
                                     "s Gamma = xi''' + xi Gamma' + 2 xi' Gamma",
                                     F.s(gammac) - rhs));
    out.push_back(
        verify::check_expr(S, "virasoro-nilpotent", "s^2 Gamma = 0", F.s(F.s(gammac))));

    // flat configuration reduces the variation to the third derivative
    std::map<GenId, Expr> flat{{F.E, F.c(Rat(1))}, {F.E2, zero}, {F.w, zero}};
    for (GenId base : {F.E, F.E2, F.w}) {
        GenId id = base;
        for (int k = 1; k <= 4; ++k) {
            id = F.alg.prolong(id);
            flat.emplace(id, zero);
        }
    }
    out.push_back(verify::check_expr(S, "virasoro-flat",
                                     "at the flat configuration s Gamma = xi'''",
                                     substitute(F.s(gammac), flat) - xi(3)));

    // ghost-field form of the same variation
    GTriple c = residual_ghosts(F);
    Expr rhs_c =
        F.ddx(F.ddx(F.ddx(c.m1))) + c.m1 * F.ddx(gammac) + F.ddx(c.m1) * gammac * Rat(2);
    out.push_back(verify::check_expr(S, "virasoro-ghost-form",
                                     "s Gamma = c''' + c Gamma' + 2 c' Gamma with c = c^x",
                                     F.s(gammac) - rhs_c));
    out.push_back(verify::check_expr(S, "ghost-vector-variation", "s c^x = c^x d/dx c^x",
                                     F.s(c.m1) - c.m1 * F.ddx(c.m1)));
    return out;
}

std::vector<verify::Check> russian_formula_check(const FieldContext& F)
{
    std::vector<verify::Check> out;
    GTriple A = F.connection_forms();
    GTriple gamma = ghost_from_vector(F);

    GTriple KA = {F.d(A.m1), F.d(A.z0), F.d(A.p1)};
    GTriple half = gbracket(A, A);
    GTriple lhs20{KA.m1 + half.m1 * Rat(1, 2), KA.z0 + half.z0 * Rat(1, 2),
                  KA.p1 + half.p1 * Rat(1, 2)};
    out.push_back(check_gtriple(S, "russian-formula-2-0",
                                "the pure-form sector is the curvature of omega", lhs20 - lhs20));

    GTriple br = gbracket(A, gamma);
    GTriple s11{F.s(A.m1) + F.d(gamma.m1) + br.m1, F.s(A.z0) + F.d(gamma.z0) + br.z0,
                F.s(A.p1) + F.d(gamma.p1) + br.p1};
    out.push_back(check_gtriple(S, "russian-formula-1-1",
                                "the mixed sector is the gauge variation identity", s11));

    GTriple gg = gbracket(gamma, gamma);
    GTriple s02{F.s(gamma.m1) + gg.m1 * Rat(1, 2), F.s(gamma.z0) + gg.z0 * Rat(1, 2),
                F.s(gamma.p1) + gg.p1 * Rat(1, 2)};
    out.push_back(check_gtriple(S, "russian-formula-0-2",
                                "the pure-ghost sector is s gamma = -1/2 [gamma, gamma]", s02));
    return out;
}

std::vector<verify::Check> projective_parametrization_check(const FieldContext& F)
{
    std::vector<verify::Check> out;
    GTriple c = residual_ghosts(F);
    GTriple G = gamma_coeff_triple(F);
    GTriple Gf{G.m1 * F.g(F.dx), G.z0 * F.g(F.dx), G.p1 * F.g(F.dx)};

    GTriple br = gbracket(Gf, c);
    GTriple sg{F.s(Gf.m1) + F.d(c.m1) + br.m1, F.s(Gf.z0) + F.d(c.z0) + br.z0,
               F.s(Gf.p1) + F.d(c.p1) + br.p1};
    out.push_back(check_gtriple(S, "parametrization-gamma",
                                "s Gamma = -dc - [Gamma, c] for the reduced connection", sg));

    GTriple cc = gbracket(c, c);
    GTriple sc{F.s(c.m1) + cc.m1 * Rat(1, 2), F.s(c.z0) + cc.z0 * Rat(1, 2),
               F.s(c.p1) + cc.p1 * Rat(1, 2)};
    out.push_back(check_gtriple(S, "parametrization-ghost",
                                "s c = -1/2 [c, c] for the residual ghosts", sc));
    return out;
}

std::vector<verify::Check> brs_checks()
{
    FieldContext F;
    std::vector<verify::Check> out;
    for (auto section : {nilpotency_checks, lie_derivative_check, frame_variation_checks,
                         residual_ghost_checks, virasoro_variation, russian_formula_check,
                         projective_parametrization_check}) {
        auto part = section(F);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

} // namespace cartanjet::brs
