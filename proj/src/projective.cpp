#include "cartanjet/projective.hpp"

#include "cartanjet/random.hpp"

#include <stdexcept>

namespace cartanjet::proj {

using cartan::BundleContext;
using cartan::FieldContext;
using symba::GenId;

Jet2 frame_jet(const ProjFrame2& f)
{
    if (f.e.is_zero()) throw std::domain_error("ProjFrame2: singular frame");
    Jet2 j = jet2_zero_like(1, Rat(0));
    j.base[0] = f.x;
    j.e1[0] = f.e;
    j.e2[0] = f.e2;
    return j;
}

ProjFrame2 frame_of_jet(const Jet2& j)
{
    if (j.dim != 1) throw std::invalid_argument("ProjFrame2: one-dimensional frames only");
    return {j.base[0], j.e1[0], j.e2[0]};
}

Jet2 embed_sl2(const Sl2Element& m)
{
    if (!m.b.is_zero())
        throw std::invalid_argument("embed_sl2: translation part must vanish");
    if (m.a.is_zero()) throw std::domain_error("embed_sl2: a = 0");
    // Taylor coefficients of a u/(c u + 1/a) = a^2 u - a^3 c u^2 + ...
    Jet2 j = jet2_zero_like(1, Rat(0));
    j.e1[0] = m.a * m.a;
    j.e2[0] = -(m.a * m.a * m.a * m.c);
    return j;
}

Sl2Element sl2_mul(const Sl2Element& m1, const Sl2Element& m2)
{
    if (!m1.b.is_zero() || !m2.b.is_zero())
        throw std::invalid_argument("sl2_mul: lower-triangular elements only");
    // (a1 0; c1 1/a1)(a2 0; c2 1/a2) = (a1 a2, 0; c1 a2 + c2/a1, 1/(a1 a2))
    return {m1.a * m2.a, Rat(0), m1.c * m2.a + m2.c / m1.a};
}

Jet3 mobius_jet3(const Rat& a, const Rat& c, const Rat& x)
{
    if (a.is_zero()) throw std::domain_error("mobius_jet3: a = 0");
    Jet3 j = jet3_zero_like(1, Rat(0));
    Rat a2 = a * a;
    j.base[0] = x;
    j.e1[0] = a2;
    j.e2[0] = -(a2 * a * c);
    j.e3[0] = a2 * a2 * c * c;
    return j;
}

Derivs3 derivs_of_jet(const Jet3& j)
{
    if (j.dim != 1) throw std::invalid_argument("derivs_of_jet: one-dimensional jets only");
    return {j.e1[0], j.e2[0] * Rat(2), j.e3[0] * Rat(6)};
}

Jet3 jet_of_derivs(const Rat& x, const Derivs3& d)
{
    Jet3 j = jet3_zero_like(1, Rat(0));
    j.base[0] = x;
    j.e1[0] = d.f1;
    j.e2[0] = d.f2 * Rat(1, 2);
    j.e3[0] = d.f3 * Rat(1, 6);
    return j;
}

Jet3 lift3(const ProjFrame2& f)
{
    if (f.e.is_zero()) throw std::domain_error("lift3: singular frame");
    // third-order condition f''' = (3/2) f''^2 / f', routed through the
    // derivative <-> coefficient converter
    Derivs3 d{f.e, f.e2 * Rat(2), Rat(0)};
    d.f3 = d.f2 * d.f2 / d.f1 * Rat(3, 2);
    return jet_of_derivs(f.x, d);
}

Jet3 lift3(const Jet2& j) { return lift3(frame_of_jet(j)); }

Rat schwarzian(const Jet3& f)
{
    Derivs3 d = derivs_of_jet(f);
    if (d.f1.is_zero()) throw std::domain_error("schwarzian: vanishing first derivative");
    Rat r = d.f2 / d.f1;
    return d.f3 / d.f1 - r * r * Rat(3, 2);
}

Rat schwarzian_at(const std::vector<Rat>& coeffs, const Rat& point)
{
    auto deriv = [](const std::vector<Rat>& c) {
        std::vector<Rat> out;
        for (size_t k = 1; k < c.size(); ++k) out.push_back(c[k] * Rat(static_cast<long>(k)));
        return out;
    };
    auto eval = [](const std::vector<Rat>& c, const Rat& t) {
        Rat acc(0);
        for (size_t k = c.size(); k-- > 0;) acc = acc * t + c[k];
        return acc;
    };
    std::vector<Rat> d1 = deriv(coeffs), d2 = deriv(d1), d3 = deriv(d2);
    Rat f1 = eval(d1, point);
    if (f1.is_zero()) throw std::domain_error("schwarzian_at: vanishing first derivative");
    Rat f2 = eval(d2, point), f3 = eval(d3, point);
    Rat r = f2 / f1;
    return f3 / f1 - r * r * Rat(3, 2);
}

ProjFrame2 transform_frame(const ProjFrame2& f, const Jet3& phi)
{
    if (phi.dim != 1) throw std::invalid_argument("transform_frame: one-dimensional jets only");
    if (phi.e1[0].is_zero()) throw std::domain_error("transform_frame: singular coordinate change");
    Rat p1 = phi.e1[0], p2 = phi.e2[0];
    return {phi.base[0], p1 * f.e, p1 * f.e2 + p2 * f.e * f.e};
}

Expr proj_gamma_bundle(const BundleContext& B, const Expr& omega1)
{
    Expr chi = B.chi();
    return B.g(B.e, -1) * omega1 + B.d(chi) - chi * chi * B.g(B.dx) * Rat(1, 2);
}

Expr proj_gamma_field(const FieldContext& F) { return F.gamma_coeff(); }

// ---------------------------------------------------------------------------
// verification suite
// ---------------------------------------------------------------------------

namespace {

ProjFrame2 random_frame(RandomSource& rng)
{
    return {rng.rat(), rng.rat_nonzero(), rng.rat()};
}

} // namespace

std::vector<verify::Check> projective_checks(const verify::SuiteOptions& opt)
{
    std::vector<verify::Check> out;
    RandomSource rng(opt.seed ^ 0x9e3779b9u);
    const std::string S = "projective";
    const int N = opt.samples;

    // --- group embedding ---
    out.push_back(verify::check_flag(S, "embed-identity", "(a,c) = (1,0) embeds to the identity jet",
                                     embed_sl2({Rat(1), Rat(0), Rat(0)}) == jet2_identity(1)));
    {
        Jet2 e11 = embed_sl2({Rat(1), Rat(0), Rat(1)});
        bool ok = e11.e1[0] == Rat(1) && e11.e2[0] == Rat(-1);
        out.push_back(
            verify::check_flag(S, "embed-taylor", "u/(u+1) expands to u - u^2 + O(u^3)", ok));
    }
    {
        bool ok = true;
        for (int i = 0; i < N && ok; ++i) {
            Rat a = rng.rat_nonzero(), c = rng.rat();
            Jet2 j = embed_sl2({a, Rat(0), c});
            // matrix-entry consistency, squared to stay rational:
            // linear entry squares to the jet's first coefficient, and the
            // lower-left entry recovers c from the derivative reading
            ok = j.e1[0] == a * a && j.e2[0] * Rat(2) == Rat(-2) * c * a * a * a;
        }
        out.push_back(verify::check_flag(
            S, "embed-matrix-consistency",
            "embedding matches the square-root matrix identification after squaring", ok));
    }
    {
        bool ok = true;
        for (int i = 0; i < N && ok; ++i) {
            Sl2Element m1{rng.rat_nonzero(), Rat(0), rng.rat()};
            Sl2Element m2{rng.rat_nonzero(), Rat(0), rng.rat()};
            ok = compose2(embed_sl2(m1), embed_sl2(m2)) == embed_sl2(sl2_mul(m1, m2));
        }
        out.push_back(verify::check_flag(
            S, "embed-group-law", "embedding intertwines matrix product and jet product", ok));
    }

    // --- third-order lift ---
    out.push_back(verify::check_flag(S, "lift3-natural-frame",
                                     "the natural frame lifts with vanishing third order",
                                     lift3(ProjFrame2{Rat(0), Rat(1), Rat(0)}).e3[0].is_zero()));
    {
        Jet3 l = lift3(ProjFrame2{Rat(0), Rat(2), Rat(4)});
        out.push_back(verify::check_flag(S, "lift3-value",
                                         "lift of (x, 2, 4) has third coefficient 16/2 = 8",
                                         l.e3[0] == Rat(8), l.e3[0].str()));
    }
    {
        bool ok = true;
        for (int i = 0; i < N && ok; ++i) {
            Jet3 mob = mobius_jet3(rng.rat_nonzero(), rng.rat(), rng.rat());
            ok = lift3(jet2_of(mob)) == mob;
        }
        out.push_back(verify::check_flag(
            S, "lift3-mobius", "jets of projective maps satisfy the third-order lift", ok));
    }

    // --- Schwarzian ---
    {
        bool ok = true;
        for (int i = 0; i < N && ok; ++i) {
            ok = schwarzian(mobius_jet3(rng.rat_nonzero(), rng.rat(), rng.rat())).is_zero() &&
                 schwarzian(lift3(random_frame(rng))).is_zero();
        }
        out.push_back(verify::check_flag(S, "schwarzian-kernel",
                                         "projective jets have vanishing Schwarzian", ok));
    }
    {
        bool ok = true;
        for (int i = 0; i < N && ok; ++i) {
            Jet3 j = rng.group_jet3(1);
            bool off_lift = j.e3[0] * j.e1[0] != j.e2[0] * j.e2[0];
            if (off_lift) ok = !schwarzian(j).is_zero();
        }
        out.push_back(verify::check_flag(
            S, "schwarzian-nonzero", "jets off the projective lift have nonzero Schwarzian", ok));
    }
    {
        Jet3 j = jet3_zero_like(1, Rat(0));
        j.e1[0] = Rat(1);
        j.e3[0] = Rat(1); // f' = 1, f'' = 0, f''' = 6
        out.push_back(verify::check_flag(S, "schwarzian-point-value",
                                         "(f', f'', f''') = (1, 0, 6) has Schwarzian 6",
                                         schwarzian(j) == Rat(6), schwarzian(j).str()));
    }
    {
        bool ok = true;
        for (int i = 0; i < N && ok; ++i) {
            Jet3 f = rng.group_jet3(1), g = rng.group_jet3(1);
            // cocycle at the origin: S(f o g) = S(f) g'(0)^2 + S(g)
            ok = schwarzian(compose3(f, g)) == schwarzian(f) * g.e1[0] * g.e1[0] + schwarzian(g);
        }
        out.push_back(verify::check_flag(
            S, "schwarzian-cocycle", "S(f o g) = (S(f) o g) g'^2 + S(g) on random 3-jets", ok));
    }

    // --- frame transforms ---
    {
        ProjFrame2 f{Rat(3), Rat(1), Rat(0)};
        Jet3 dil = jet3_zero_like(1, Rat(0));
        dil.base[0] = Rat(6);
        dil.e1[0] = Rat(2);
        ProjFrame2 t = transform_frame(f, dil);
        out.push_back(verify::check_flag(S, "frame-transform-dilation",
                                         "x' = 2x sends (x, 1, 0) to (2x, 2, 0)",
                                         t == ProjFrame2{Rat(6), Rat(2), Rat(0)}));
    }
    {
        bool ok = true;
        for (int i = 0; i < N && ok; ++i) {
            ProjFrame2 f = random_frame(rng);
            Jet3 phi = rng.group_jet3(1);
            phi.base[0] = rng.rat();
            ProjFrame2 t = transform_frame(f, phi);
            Jet2 via = compose2(jet2_of(phi), frame_jet(ProjFrame2{Rat(0), f.e, f.e2}));
            ok = t.x == phi.base[0] && t.e == via.e1[0] && t.e2 == via.e2[0];
        }
        out.push_back(verify::check_flag(S, "frame-transform-composition",
                                         "the displayed frame transform is jet composition", ok));
    }

    // --- bundle-level reduction (third Christoffel component) ---
    {
        BundleContext B;
        GTriple omega = B.connection();
        GTriple gamma = cartan::gauge_transform(B.d, omega, B.frame_jet_projective());
        Expr direct = proj_gamma_bundle(B, B.g(B.w1));
        out.push_back(verify::check_expr(S, "gamma-matches-reduction",
                                         "the displayed Gamma^x_xx equals the reduced gauge form",
                                         gamma.p1 - direct));
        out.push_back(cartan::check_gtriple(
            S, "gamma-matrix-shape", "the reduced connection is (dx, 0, Gamma^x_xx)",
            {gamma.m1 - B.g(B.dx), gamma.z0, Expr::zero(&B.alg)}));

        std::map<GenId, Expr> nat{{B.e, B.c(Rat(1))},
                                  {B.e2, B.c(Rat(0))},
                                  {B.de, B.c(Rat(0))},
                                  {B.de2, B.c(Rat(0))}};
        out.push_back(verify::check_expr(S, "gamma-natural-frame",
                                         "at the natural frame Gamma^x_xx reduces to w1",
                                         substitute(direct, nat) - B.g(B.w1)));
        Expr chi = B.chi();
        out.push_back(verify::check_expr(
            S, "gamma-miura-form", "with w1 = 0 the component is d(chi) - 1/2 chi^2 dx",
            proj_gamma_bundle(B, Expr::zero(&B.alg)) - B.d(chi) +
                chi * chi * B.g(B.dx) * Rat(1, 2)));

        // pull back along a frame field: d -> dx d/dx, w1 -> w dx
        FieldContext F;
        std::map<GenId, Expr> pull{
            {B.x, F.g(F.x)},
            {B.dx, F.g(F.dx)},
            {B.e, F.g(F.E, -1)},
            {B.e2, -(F.g(F.E2) * F.g(F.E, -3))},
            {B.w1, F.g(F.w) * F.g(F.dx)},
        };
        pull.emplace(B.de, F.d(pull.at(B.e)));
        pull.emplace(B.de2, F.d(pull.at(B.e2)));
        Expr pulled = symba::transplant(direct, &F.alg, pull);
        out.push_back(verify::check_expr(
            S, "gamma-pullback",
            "pulled back along a frame field, Gamma^x_xx,x = E w + chi' - chi^2/2",
            pulled - F.gamma_coeff() * F.g(F.dx)));
    }

    // --- coordinate-change laws on the base ---
    {
        FieldContext F(true);
        const Expr zero = Expr::zero(&F.alg);
        Expr P = F.g(F.p);
        Expr P1 = F.jet(F.p, 1), P2 = F.jet(F.p, 2);
        Expr E = F.g(F.E), E2 = F.g(F.E2);

        // w transforms by the adjoint of the coordinate-change jet
        Jet3T<Expr> phi = cartan::sym_jet3(&F.alg, P, P1, P2);
        GTriple wAd = cartan::adjoint_triple(phi, {zero, zero, F.g(F.w)});
        out.push_back(cartan::check_gtriple(
            S, "omega1-adjoint-law",
            "Ad of the coordinate change on the gl_{+1} coefficient is w/phi'",
            {wAd.m1, wAd.z0, wAd.p1 - P.inverse() * F.g(F.w)}));

        Expr Ep = P.inverse() * E;
        Expr E2p = P.pow(-2) * E2 - P.pow(-3) * P1 * E;

        // displayed inverse-frame transform agrees with inverting the
        // transformed frame
        Expr m = -(E2 * E.pow(-3));       // e^x_uu in derivative form
        Expr mp = P * m + P1 * E.pow(-2); // transformed frame display
        Expr E2p_via = -(mp * Ep.pow(3));
        out.push_back(verify::check_expr(S, "frame-inverse-display",
                                         "the inverse-frame transform display is consistent",
                                         E2p_via - E2p));

        Expr chi = F.chi();
        Expr chi_p = E2p * Ep.inverse();
        out.push_back(verify::check_expr(S, "chi-affine-law",
                                         "chi transforms as an affine connection",
                                         chi_p * P - chi + P1 * P.inverse()));

        auto dprime = [&](const Expr& a) { return P.inverse() * F.ddx(a); };
        Expr wp = P.inverse() * F.g(F.w);
        Expr gamma_p = Ep * wp + dprime(chi_p) - chi_p * chi_p * Rat(1, 2);
        Expr schw = P2 * P.inverse() - P1 * P1 * P.pow(-2) * Rat(3, 2);
        out.push_back(verify::check_expr(
            S, "gamma-schwarzian-law",
            "Gamma - phi'^2 Gamma' equals the Schwarzian of the coordinate change",
            F.gamma_coeff() - P * P * gamma_p - schw));

        // coordinate changes solving the projective condition drop out
        GenId p2id = F.alg.prolong(F.alg.prolong(F.p));
        std::map<GenId, Expr> mob{{p2id, P1 * P1 * P.inverse() * Rat(3, 2)}};
        out.push_back(
            verify::check_expr(S, "schwarzian-mobius-symbolic",
                               "the Schwarzian vanishes on projective coordinate changes",
                               substitute(schw, mob)));
    }

    return out;
}

} // namespace cartanjet::proj
