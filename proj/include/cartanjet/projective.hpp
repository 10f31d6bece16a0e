#pragma once

#include "cartanjet/cartanconn.hpp"
#include "cartanjet/fieldctx.hpp"
#include "cartanjet/jet.hpp"
#include "cartanjet/verify.hpp"

namespace cartanjet::proj {

using cartan::GTriple;
using symba::Expr;

/// Projective 2-frame over the line: base point and raw jet coefficients
/// (x, e^x_u, e^x_uu), e nonzero.
struct ProjFrame2 {
    Rat x, e, e2;
    friend bool operator==(const ProjFrame2&, const ProjFrame2&) = default;
};

/// Lower-triangular SL(2) parametrization (a, c) with the translation part
/// b carried separately.
struct Sl2Element {
    Rat a, b, c;
};

Jet2 frame_jet(const ProjFrame2& f);
ProjFrame2 frame_of_jet(const Jet2& j);

/// 2-jet of u -> a u / (c u + 1/a): the group embedding of the
/// lower-triangular part. Requires b = 0 and a != 0.
Jet2 embed_sl2(const Sl2Element& m);

Sl2Element sl2_mul(const Sl2Element& m1, const Sl2Element& m2);

/// 3-jet of the projective map u -> x + a u/(c u + 1/a).
Jet3 mobius_jet3(const Rat& a, const Rat& c, const Rat& x = Rat(0));

// the centralized derivative <-> coefficient conversion
struct Derivs3 {
    Rat f1, f2, f3;
};
Derivs3 derivs_of_jet(const Jet3& j);
Jet3 jet_of_derivs(const Rat& x, const Derivs3& d);

/// Unique third-order lift of a projective 2-frame: the jet solving the
/// projective third-order condition f''' = (3/2) f''^2 / f'.
Jet3 lift3(const ProjFrame2& f);
Jet3 lift3(const Jet2& j);

/// Schwarzian derivative of a 3-jet at its base point:
/// f'''/f' - (3/2)(f''/f')^2. Throws std::domain_error when f' = 0.
Rat schwarzian(const Jet3& f);

/// Schwarzian of a polynomial sum c_k t^k at a point (exact).
Rat schwarzian_at(const std::vector<Rat>& coeffs, const Rat& point);

/// Coordinate transform of a projective frame by a 3-jet phi centred at
/// the frame's base point: (phi(x), phi' e, phi' e2 + phi_2 e^2).
ProjFrame2 transform_frame(const ProjFrame2& f, const Jet3& phi);

/// Gamma^x_xx on the bundle: e^u_x w1 + d(chi) - 1/2 chi^2 dx.
Expr proj_gamma_bundle(const cartan::BundleContext& B, const Expr& omega1);

/// The pulled-back coefficient E w + chi' - chi^2/2 on the base.
Expr proj_gamma_field(const cartan::FieldContext& F);

std::vector<verify::Check> projective_checks(const verify::SuiteOptions& opt);

} // namespace cartanjet::proj
