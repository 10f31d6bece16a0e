#include "cartanjet/fieldctx.hpp"

namespace cartanjet::cartan {

FieldContext::FieldContext(bool with_coordinate_change)
    : ddx(&alg, "d/dx", 0, 0), d(&alg, "d", 1, 0), s(&alg, "s", 0, 1), ixi(&alg, "i_xi", -1, 1)
{
    x = alg.declare({.name = "x"});
    E = alg.declare({.name = "E", .invertible = true, .field = true});
    E2 = alg.declare({.name = "E2", .field = true});
    w = alg.declare({.name = "w", .field = true});
    xi = alg.declare({.name = "xi", .ghost_deg = 1, .field = true});
    dx = alg.declare({.name = "dx", .form_deg = 1});
    if (with_coordinate_change) {
        p = alg.declare({.name = "p", .invertible = true, .field = true});
        has_p = true;
    }

    ddx.set_image(x, c(Rat(1)));
    ddx.set_image(dx, c(Rat(0)));
    ddx.set_extension(symba::Derivation::Extension::prolong);

    d.set_image(x, g(dx));
    d.set_image(dx, c(Rat(0)));
    d.set_extension(symba::Derivation::Extension::prolong_dx, nullptr, dx);

    // lifted frame variations: the action of the ghost vector field on the
    // pulled-back frame data, taken as the primitive definition of s
    s.set_image(x, c(Rat(0)));
    s.set_image(dx, c(Rat(0)));
    s.set_image(E, ddx(g(E) * g(xi)));
    s.set_image(E2, jet(E2, 1) * g(xi) + g(E2) * jet(xi, 1) * Rat(2) + g(E) * jet(xi, 2));
    s.set_image(w, ddx(g(w) * g(xi)));
    s.set_image(xi, g(xi) * jet(xi, 1));
    s.set_extension(symba::Derivation::Extension::commute, &ddx);

    ixi.set_image(x, c(Rat(0)));
    ixi.set_image(dx, g(xi));
    ixi.set_extension(symba::Derivation::Extension::vanish);
}

Expr FieldContext::jet(GenId base, int k) const
{
    GenId id = base;
    for (int i = 0; i < k; ++i) id = alg.prolong(id);
    return g(id);
}

Expr FieldContext::theta_coeff() const { return g(E); }

Expr FieldContext::theta0_coeff() const
{
    return g(E2) * g(E, -1) - g(E, -1) * jet(E, 1);
}

Expr FieldContext::chi() const { return g(E2) * g(E, -1); }

Expr FieldContext::gamma_coeff() const
{
    Expr ch = chi();
    return g(E) * g(w) + ddx(ch) - ch * ch * Rat(1, 2);
}

GTriple FieldContext::connection_coeffs() const
{
    return {theta_coeff(), theta0_coeff(), g(w)};
}

GTriple FieldContext::connection_forms() const
{
    GTriple t = connection_coeffs();
    return {t.m1 * g(dx), t.z0 * g(dx), t.p1 * g(dx)};
}

GTriple FieldContext::ghost() const
{
    GTriple t = connection_coeffs();
    return {t.m1 * g(xi), t.z0 * g(xi), t.p1 * g(xi)};
}

std::vector<Expr> FieldContext::brs_generator_basis() const
{
    return {g(x), g(dx), g(E), g(E2), g(w), g(xi)};
}

} // namespace cartanjet::cartan
