#pragma once

#include "cartanjet/jet.hpp"
#include "cartanjet/symba.hpp"
#include "cartanjet/vecjet.hpp"
#include "cartanjet/verify.hpp"

namespace cartanjet::cartan {

using symba::Algebra;
using symba::Derivation;
using symba::Expr;
using symba::GenId;

/// A g-valued object over the one-dimensional frame algebra, stored in
/// weight components (-1, 0, +1). Slots carry the derivative normalization
/// used by the displayed formulas; the raw jet-engine slot differs by a
/// factor 2 in the +1 component (see to_weight_slots / to_raw_slots).
struct GTriple {
    Expr m1, z0, p1;

    friend GTriple operator+(const GTriple& a, const GTriple& b)
    {
        return {a.m1 + b.m1, a.z0 + b.z0, a.p1 + b.p1};
    }
    friend GTriple operator-(const GTriple& a, const GTriple& b)
    {
        return {a.m1 - b.m1, a.z0 - b.z0, a.p1 - b.p1};
    }
    bool is_zero() const { return m1.is_zero() && z0.is_zero() && p1.is_zero(); }
};

/// Graded bracket in weight slots (bilinear over the form/ghost
/// coefficients, Koszul signs carried by the coefficient products):
///   [A,B]_{-1} = A0 B-1 - A-1 B0
///   [A,B]_0    = A1 B-1 - A-1 B1
///   [A,B]_{+1} = A1 B0  - A0 B1
GTriple gbracket(const GTriple& a, const GTriple& b);

GTriple to_weight_slots(const VecJetT<Expr>& v);
VecJetT<Expr> to_raw_slots(const GTriple& t);

verify::Check check_gtriple(std::string suite, std::string id, std::string statement,
                            const GTriple& residual);

/// Coordinate algebra of the second-order frame bundle in one dimension:
/// base coordinate x, frame coordinates e (invertible), e2, a generic
/// third-order coordinate e3, their differentials, and an opaque
/// gl_{+1}-valued connection form w1 with independent differential dw1.
struct BundleContext {
    Algebra alg;
    GenId x, e, e2, e3, dx, de, de2, de3, w1, dw1;
    Derivation d;

    BundleContext();
    BundleContext(const BundleContext&) = delete;
    BundleContext& operator=(const BundleContext&) = delete;

    Expr g(GenId id, int exp = 1) const { return Expr::generator(&alg, id, exp); }
    Expr c(const Rat& v) const { return Expr::constant(&alg, v); }

    /// Solder form theta^u = e^-1 dx.
    Expr solder_m1() const;
    /// Solder form theta^u_u = e^-1 de - e2 e^-2 dx.
    Expr solder_0() const;
    /// The full connection (theta^u, theta^u_u, w1).
    GTriple connection() const;

    /// chi = e^u_xx e^x_u = -e2 e^-2.
    Expr chi() const;

    /// Frame 3-jet with entries (e, e2, e3): unconstrained third order.
    Jet3T<Expr> frame_jet_generic() const;
    /// Frame 3-jet with the projective third-order constraint substituted.
    Jet3T<Expr> frame_jet_projective() const;
};

/// Symbolic group 3-jet from derivative-normalized entries (j1, j2, j3).
Jet3T<Expr> sym_jet3(const Algebra* alg, const Expr& j1, const Expr& j2, const Expr& j3);

/// Curvature K = d omega + 1/2 [omega, omega] of a g-valued 1-form.
GTriple curvature(const Derivation& d, const GTriple& omega);

/// Adjoint action of a symbolic group 3-jet on a g-valued object,
/// computed by the dual-number conjugation engine.
GTriple adjoint_triple(const Jet3T<Expr>& g, const GTriple& v);

/// Local gauge form of the connection: Ad(g) omega - dg . g^{-1}.
/// Applying it with the frame jet produces the generalized Christoffel
/// triple (dx, 0, Gamma^x_xx).
GTriple gauge_transform(const Derivation& d, const GTriple& omega, const Jet3T<Expr>& g);

std::vector<verify::Check> bundle_checks();

} // namespace cartanjet::cartan
