#include "cartanjet/cartanconn.hpp"

#include <map>

namespace cartanjet::cartan {

GTriple gbracket(const GTriple& a, const GTriple& b)
{
    return {a.z0 * b.m1 - a.m1 * b.z0, a.p1 * b.m1 - a.m1 * b.p1, a.p1 * b.z0 - a.z0 * b.p1};
}

GTriple to_weight_slots(const VecJetT<Expr>& v)
{
    return {v.m1[0], v.x0[0], v.x1[0] * Rat(2)};
}

VecJetT<Expr> to_raw_slots(const GTriple& t)
{
    VecJetT<Expr> v;
    v.dim = 1;
    v.m1 = {t.m1};
    v.x0 = {t.z0};
    v.x1 = {t.p1 * Rat(1, 2)};
    return v;
}

verify::Check check_gtriple(std::string suite, std::string id, std::string statement,
                            const GTriple& r)
{
    std::string residual =
        r.is_zero() ? "0" : "(" + r.m1.str() + ", " + r.z0.str() + ", " + r.p1.str() + ")";
    return {std::move(suite), std::move(id), std::move(statement), std::move(residual),
            r.is_zero()};
}

BundleContext::BundleContext() : d(&alg, "d", 1, 0)
{
    x = alg.declare({.name = "x"});
    e = alg.declare({.name = "e", .invertible = true});
    e2 = alg.declare({.name = "e2"});
    e3 = alg.declare({.name = "e3"});
    dx = alg.declare({.name = "dx", .form_deg = 1});
    de = alg.declare({.name = "de", .form_deg = 1});
    de2 = alg.declare({.name = "de2", .form_deg = 1});
    de3 = alg.declare({.name = "de3", .form_deg = 1});
    w1 = alg.declare({.name = "w1", .form_deg = 1});
    dw1 = alg.declare({.name = "dw1", .form_deg = 2});

    d.set_image(x, g(dx));
    d.set_image(e, g(de));
    d.set_image(e2, g(de2));
    d.set_image(e3, g(de3));
    d.set_image(w1, g(dw1));
    d.set_image(dx, c(Rat(0)));
    d.set_image(de, c(Rat(0)));
    d.set_image(de2, c(Rat(0)));
    d.set_image(de3, c(Rat(0)));
    d.set_image(dw1, c(Rat(0)));
}

Expr BundleContext::solder_m1() const { return g(e, -1) * g(dx); }

Expr BundleContext::solder_0() const { return g(e, -1) * g(de) - g(e2) * g(e, -2) * g(dx); }

GTriple BundleContext::connection() const { return {solder_m1(), solder_0(), g(w1)}; }

Expr BundleContext::chi() const { return -(g(e2) * g(e, -2)); }

Jet3T<Expr> BundleContext::frame_jet_generic() const
{
    return sym_jet3(&alg, g(e), g(e2), g(e3));
}

Jet3T<Expr> BundleContext::frame_jet_projective() const
{
    // third-order part of a projective frame: j3 = (3/2) j2^2 / j1
    return sym_jet3(&alg, g(e), g(e2), g(e2) * g(e2) * g(e, -1) * Rat(3, 2));
}

Jet3T<Expr> sym_jet3(const Algebra* alg, const Expr& j1, const Expr& j2, const Expr& j3)
{
    Jet3T<Expr> out;
    out.dim = 1;
    out.base = {Expr::zero(alg)};
    out.e1 = {j1};
    out.e2 = {j2 * Rat(1, 2)};
    out.e3 = {j3 * Rat(1, 6)};
    return out;
}

GTriple curvature(const Derivation& d, const GTriple& omega)
{
    GTriple half = gbracket(omega, omega);
    return {d(omega.m1) + half.m1 * Rat(1, 2), d(omega.z0) + half.z0 * Rat(1, 2),
            d(omega.p1) + half.p1 * Rat(1, 2)};
}

GTriple adjoint_triple(const Jet3T<Expr>& g, const GTriple& v)
{
    return to_weight_slots(adjoint_action(g, to_raw_slots(v)));
}

GTriple gauge_transform(const Derivation& d, const GTriple& omega, const Jet3T<Expr>& g)
{
    GTriple ad = adjoint_triple(g, omega);

    // e2 . d e2^{-1} = -(d e2) . e2^{-1} at jet level
    Jet3T<Expr> dg = g;
    for (Expr& v : dg.e1) v = d(v);
    for (Expr& v : dg.e2) v = d(v);
    for (Expr& v : dg.e3) v = d(v);
    Jet3T<Expr> mc = compose3(dg, inverse3(g));

    Expr mc0 = -mc.e1[0];
    Expr mc1 = -(mc.e2[0] * Rat(2)); // raw slot -> weight slot

    return {ad.m1, ad.z0 + mc0, ad.p1 + mc1};
}

// ---------------------------------------------------------------------------
// verification suite
// ---------------------------------------------------------------------------

namespace {

/// The eight-term local display of the third Christoffel component
/// (derivative reading of the frame symbols).
Expr christoffel_p1_display(const BundleContext& B)
{
    Expr E = B.g(B.e, -1);                 // e^u_x
    Expr E2 = -(B.g(B.e2) * B.g(B.e, -3)); // e^u_xx
    Expr th = B.solder_m1();
    Expr th0 = B.solder_0();
    Expr t1 = B.g(B.e3) * th * E * E;
    Expr t2 = B.g(B.e2) * th * E2;
    Expr t3 = B.g(B.e2) * th0 * E * E;
    Expr t4 = B.g(B.e2) * E * th0 * E;
    Expr t5 = B.g(B.e) * th0 * E2;
    Expr t6 = B.g(B.e) * B.g(B.w1) * E * E;
    Expr t7 = B.g(B.e) * B.d(E2);
    Expr t8 = B.g(B.e2) * B.d(E * E);
    return t1 + t2 + t3 + t4 + t5 + t6 + t7 + t8;
}

} // namespace

std::vector<verify::Check> bundle_checks()
{
    std::vector<verify::Check> out;
    BundleContext B;
    const std::string S = "cartan";
    const Expr zero = Expr::zero(&B.alg);

    Expr theta = B.solder_m1();
    Expr theta0 = B.solder_0();
    GTriple omega = B.connection();

    out.push_back(verify::check_expr(S, "torsion-free-solder",
                                     "d(theta) + theta0 ^ theta = 0 on the frame algebra",
                                     B.d(theta) + theta0 * theta));

    GTriple K = curvature(B.d, omega);
    out.push_back(verify::check_expr(S, "curvature-translation-part",
                                     "K_{-1} of the solder connection vanishes (torsion)", K.m1));
    GTriple diag{zero, theta0, zero};
    out.push_back(verify::check_expr(S, "curvature-gl0-abelian",
                                     "[omega_0, omega_0] = 0 in one dimension",
                                     gbracket(diag, diag).z0));
    out.push_back(verify::check_expr(
        S, "curvature-gl0-shape", "K_0 = d(omega_0) + [omega_{-1}, omega_{+1}]_0",
        K.z0 - B.d(theta0) - gbracket({theta, zero, zero}, {zero, zero, B.g(B.w1)}).z0));

    // flat configuration: natural frame section, vanishing gl_{+1} part
    std::map<GenId, Expr> flat{{B.e, B.c(Rat(1))},   {B.e2, B.c(Rat(0))}, {B.e3, B.c(Rat(0))},
                               {B.de, B.c(Rat(0))},  {B.de2, B.c(Rat(0))}, {B.de3, B.c(Rat(0))},
                               {B.w1, B.c(Rat(0))},  {B.dw1, B.c(Rat(0))}};
    out.push_back(check_gtriple(S, "flat-frame-curvature",
                                "curvature vanishes at the natural frame with w1 = 0",
                                {substitute(K.m1, flat), substitute(K.z0, flat),
                                 substitute(K.p1, flat)}));

    GTriple gamma = gauge_transform(B.d, omega, B.frame_jet_generic());
    out.push_back(verify::check_expr(S, "gamma-translation-part",
                                     "Gamma^x = dx for arbitrary e, e2, e3, w1",
                                     gamma.m1 - B.g(B.dx)));
    out.push_back(verify::check_expr(S, "gamma-gl0-part",
                                     "Gamma^x_x = 0 for arbitrary e, e2, e3, w1", gamma.z0));
    out.push_back(verify::check_expr(S, "gamma-gl1-display",
                                     "Gamma^x_xx equals its eight-term local display",
                                     gamma.p1 - christoffel_p1_display(B)));

    // transforming by g then h equals transforming by h.g
    {
        Algebra& A = B.alg;
        GenId f = A.declare({.name = "f", .invertible = true});
        GenId f2 = A.declare({.name = "f2"});
        GenId f3 = A.declare({.name = "f3"});
        GenId df = A.declare({.name = "df", .form_deg = 1});
        GenId df2 = A.declare({.name = "df2", .form_deg = 1});
        GenId df3 = A.declare({.name = "df3", .form_deg = 1});
        B.d.set_image(f, B.g(df));
        B.d.set_image(f2, B.g(df2));
        B.d.set_image(f3, B.g(df3));
        B.d.set_image(df, B.c(Rat(0)));
        B.d.set_image(df2, B.c(Rat(0)));
        B.d.set_image(df3, B.c(Rat(0)));

        Jet3T<Expr> gj = B.frame_jet_generic();
        Jet3T<Expr> hj = sym_jet3(&A, B.g(f), B.g(f2), B.g(f3));
        GTriple lhs = gauge_transform(B.d, gauge_transform(B.d, omega, gj), hj);
        GTriple rhs = gauge_transform(B.d, omega, compose3(hj, gj));
        out.push_back(check_gtriple(S, "gauge-composition",
                                    "transforming by g then h equals transforming by h.g",
                                    lhs - rhs));
    }

    {
        Jet3T<Expr> id = sym_jet3(&B.alg, B.c(Rat(1)), B.c(Rat(0)), B.c(Rat(0)));
        out.push_back(check_gtriple(S, "gauge-identity",
                                    "the identity jet leaves the connection unchanged",
                                    gauge_transform(B.d, omega, id) - omega));
    }

    // curvature equivariance along the projective reduction and for
    // linear frame jets (the families whose conjugation drops nothing)
    {
        Jet3T<Expr> gp = B.frame_jet_projective();
        GTriple lhs = curvature(B.d, gauge_transform(B.d, omega, gp));
        GTriple rhs = adjoint_triple(gp, curvature(B.d, omega));
        out.push_back(check_gtriple(S, "curvature-equivariance-projective",
                                    "K(gauge transform) = Ad(g) K for projective frame jets",
                                    lhs - rhs));

        Jet3T<Expr> gl = sym_jet3(&B.alg, B.g(B.e), B.c(Rat(0)), B.c(Rat(0)));
        GTriple dl = curvature(B.d, gauge_transform(B.d, omega, gl)) -
                     adjoint_triple(gl, curvature(B.d, omega));
        out.push_back(check_gtriple(S, "curvature-equivariance-linear",
                                    "K(gauge transform) = Ad(g) K for linear frame jets", dl));
    }

    return out;
}

} // namespace cartanjet::cartan
