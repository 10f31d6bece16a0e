#pragma once

#include "cartanjet/cartanconn.hpp"
#include "cartanjet/symba.hpp"

namespace cartanjet::cartan {

/// Jet-tower algebra of the pulled-back connection data on the base: the
/// inverse frame field E = e^u_x (invertible), its second-order companion
/// E2 = e^u_xx, the gl_{+1} coefficient w = omega^u_uu,x, the odd ghost
/// vector component xi, the coordinate x and dx. Optionally a coordinate
/// change tower p = dx'/dx. Carries d/dx, d = dx d/dx, the lifted BRS
/// variation s, and the ghost interior product i_xi.
struct FieldContext {
    symba::Algebra alg;
    GenId x, dx, E, E2, w, xi;
    GenId p = 0; // coordinate-change tower, present iff with_coordinate_change
    bool has_p = false;

    symba::Derivation ddx; // jet prolongation
    symba::Derivation d;   // dx * d/dx
    symba::Derivation s;   // BRS variation of the lifted frame data
    symba::Derivation ixi; // insertion of the ghost vector: dx -> xi

    explicit FieldContext(bool with_coordinate_change = false);
    FieldContext(const FieldContext&) = delete;
    FieldContext& operator=(const FieldContext&) = delete;

    Expr g(GenId id, int exp = 1) const { return Expr::generator(&alg, id, exp); }
    Expr c(const Rat& v) const { return Expr::constant(&alg, v); }
    /// k-th prolongation of a tower generator, as an expression.
    Expr jet(GenId base, int k) const;

    /// Pulled-back connection coefficients (theta^u_,x, theta^u_u,x, w).
    Expr theta_coeff() const;  // E
    Expr theta0_coeff() const; // E2/E - E'/E
    Expr chi() const;          // E2/E
    /// The local quadratic-differential coefficient E w + (chi)' - chi^2/2.
    Expr gamma_coeff() const;

    GTriple connection_coeffs() const;
    GTriple connection_forms() const; // coefficients times dx
    /// Ghost triple obtained by inserting xi into the pulled-back
    /// connection: (E xi, theta0 xi, w xi).
    GTriple ghost() const;

    /// Generators whose variations define the lifted action (with towers).
    std::vector<Expr> brs_generator_basis() const;
};

} // namespace cartanjet::cartan
