#pragma once

#include "cartanjet/jet.hpp"
#include "cartanjet/vecjet.hpp"

#include <map>
#include <vector>

namespace cartanjet::oracle {

// Brute-force reference arithmetic on dense truncated polynomials. This is
// deliberately naive and shares no code with the chain-rule implementations
// in jet.hpp / vecjet.hpp: monomials are multisets of variable indices and
// composition is literal substitute-expand-truncate. The verification suites
// compare the fast paths against it term by term.

/// One polynomial component: sorted multi-index (multiset of variables,
/// size 0..max degree) -> coefficient of the expanded monomial.
struct Poly {
    int nvars = 0;
    int maxdeg = 3;
    std::map<std::vector<int>, Rat> coef;

    void add(std::vector<int> mono, const Rat& c);
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const Rat& s) const;
    Poly derivative(int var) const;
    Rat get(const std::vector<int>& mono) const;
};

Poly poly_zero(int nvars, int maxdeg);
Poly poly_const(int nvars, int maxdeg, const Rat& c);

/// Substitutes args[i] for variable i in p, expands and truncates.
Poly substitute(const Poly& p, const std::vector<Poly>& args);

// jets <-> polynomial vectors (raw coefficients; the multiset coefficient of
// a monomial is the tensor entry times the number of distinct orderings)

std::vector<Poly> polys_of_jet2(const Jet2& f);
std::vector<Poly> polys_of_jet3(const Jet3& f);
Jet2 jet2_of_polys(const std::vector<Poly>& p, const std::vector<Rat>& base);
Jet3 jet3_of_polys(const std::vector<Poly>& p, const std::vector<Rat>& base);

/// Reference composition at order 2: substitute the polynomial
/// representative of g into f and truncate.
Jet2 compose2_ref(const Jet2& f, const Jet2& g);

/// Reference composition at order 3.
Jet3 compose3_ref(const Jet3& f, const Jet3& g);

/// Reference bracket: minus the Lie bracket of the polynomial vector fields
/// computed by differentiate-multiply-truncate.
VecJet bracket_ref(const VecJet& X, const VecJet& Y);

/// The defect of the truncated Jacobi identity: the cyclic sum of
/// trunc([X, tail([Y,Z])]) where tail is the cubic part the 2-jet bracket
/// discards. The truncated Jacobi sum equals minus this value exactly.
VecJet jacobi_defect(const VecJet& X, const VecJet& Y, const VecJet& Z);

} // namespace cartanjet::oracle
