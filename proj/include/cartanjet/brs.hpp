#pragma once

#include "cartanjet/fieldctx.hpp"
#include "cartanjet/verify.hpp"

namespace cartanjet::brs {

using cartan::FieldContext;
using cartan::GTriple;
using symba::Expr;

/// Ghost field obtained by inserting the ghost vector into the pulled-back
/// connection: (E xi, theta0 xi, w xi).
GTriple ghost_from_vector(const FieldContext& F);

/// Right-hand side of the BRS variation of a g-valued 1-form:
/// -d(gamma) - [omega, gamma], with the graded bracket in weight slots.
GTriple brs_on_connection(const FieldContext& F, const GTriple& omega_forms,
                          const GTriple& ghost);

/// Residual ghosts of the projective parametrization:
/// c = Ad(l(e2)) gamma + e2 . s e2^{-1}, evaluating to (xi, xi', xi'' + Gamma xi).
GTriple residual_ghosts(const FieldContext& F);

/// The reduced connection pulled back to the base, as 0-form coefficients
/// (1, 0, gamma_coeff) of dx.
GTriple gamma_coeff_triple(const FieldContext& F);

// report sections, one per operation of this layer
std::vector<verify::Check> nilpotency_checks(const FieldContext& F);
std::vector<verify::Check> lie_derivative_check(const FieldContext& F);
std::vector<verify::Check> frame_variation_checks(const FieldContext& F);
std::vector<verify::Check> residual_ghost_checks(const FieldContext& F);
std::vector<verify::Check> virasoro_variation(const FieldContext& F);
std::vector<verify::Check> russian_formula_check(const FieldContext& F);
std::vector<verify::Check> projective_parametrization_check(const FieldContext& F);

/// All sections over a fresh context, in report order.
std::vector<verify::Check> brs_checks();

} // namespace cartanjet::brs
