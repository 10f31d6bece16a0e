#pragma once

#include "cartanjet/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

namespace cartanjet::symba {

// A free bigraded-commutative algebra over declared generators with exact
// rational coefficients, graded by (de Rham form degree, ghost number).
// Generators of odd total parity anticommute and square to zero; invertible
// generators carry Laurent exponents. Graded derivations extend over
// products with the Koszul sign and can prolong jet towers lazily.

using GenId = uint32_t;

struct Generator {
    std::string name;
    int form_deg = 0;
    int ghost_deg = 0;
    int jet_order = 0;       // number of base-coordinate derivatives applied
    bool invertible = false; // enables negative exponents
    bool field = false;      // lives in a jet tower, prolongable by d/dx
    std::string base;        // tower base name; equals name at jet_order 0

    int parity() const { return (form_deg + ghost_deg) & 1; }
};

/// Append-only generator registry. Reads are lock-shared; the lazy tower
/// extension serializes writers, so expressions may be combined from
/// multiple threads.
class Algebra {
public:
    Algebra() = default;
    Algebra(const Algebra&) = delete;
    Algebra& operator=(const Algebra&) = delete;

    GenId declare(Generator g);
    GenId find(const std::string& name) const;
    bool contains(const std::string& name) const;
    Generator gen(GenId id) const;
    int parity_of(GenId id) const;
    size_t size() const;

    /// Tower successor of a field generator, created on first use.
    GenId prolong(GenId id) const;
    /// Tower predecessor; throws for jet order 0 or non-fields.
    GenId precursor(GenId id) const;

    static std::string tower_name(const std::string& base, int order);

private:
    mutable std::shared_mutex mu_;
    mutable std::vector<Generator> gens_;
    mutable std::map<std::string, GenId> index_;
};

class Expr {
public:
    struct Factor {
        GenId id;
        int exp;
        friend auto operator<=>(const Factor& a, const Factor& b) = default;
    };
    struct Term {
        Rat coeff;
        std::vector<Factor> mono; // sorted by id, exponents nonzero
    };

    Expr() = default; // zero, no algebra attached

    static Expr zero(const Algebra* a) { Expr e; e.alg_ = a; return e; }
    static Expr constant(const Algebra* a, const Rat& c);
    static Expr generator(const Algebra* a, GenId id, int exp = 1);
    /// Builds a normalized expression from raw terms (sorts monomials with
    /// Koszul signs, merges duplicates, enforces homogeneity).
    static Expr from_terms(const Algebra* a, const std::vector<Term>& raw);

    const Algebra* alg() const { return alg_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    /// (form degree, ghost degree); (0,0) for zero.
    std::pair<int, int> bidegree() const;
    int parity() const;

    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a);
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Rat& s);
    friend Expr operator*(const Rat& s, const Expr& a) { return a * s; }

    /// Inverse of a single-term expression in invertible generators.
    Expr inverse() const;
    Expr pow(int k) const;

    bool is_constant() const;
    Rat constant_value() const; // throws unless constant or zero

    friend bool operator==(const Expr& a, const Expr& b);
    friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

    /// Deterministic canonical rendering, e.g. "-3/2*e^-2*de*dx + w*dx".
    std::string str() const;

private:
    const Algebra* alg_ = nullptr;
    std::vector<Term> terms_;

    static const Algebra* common_alg(const Expr& a, const Expr& b);
    void check_homogeneous() const;
};

/// Substitute images for generators (unlisted generators map to themselves).
/// Image parities must match the generators they replace.
Expr substitute(const Expr& e, const std::map<GenId, Expr>& images);

/// Rebuilds an expression over another algebra; every generator occurring
/// in e must be mapped to an image in the target algebra.
Expr transplant(const Expr& e, const Algebra* target, const std::map<GenId, Expr>& images);

/// A graded derivation defined by its images on generators, extended to
/// products by D(ab) = D(a) b + (-1)^{|D||a|} a D(b).
class Derivation {
public:
    /// How images of generators absent from the explicit map are derived.
    enum class Extension {
        none,       // undefined generator image is an error
        prolong,    // field generator -> its tower successor     (d/dx)
        prolong_dx, // field generator g -> dx * g'               (d = dx d/dx)
        commute,    // field generator at order k>0 -> d/dx of the image
                    // of its precursor                           (BRS s)
        vanish,     // field generators -> 0                      (interior product)
    };

    Derivation(const Algebra* a, std::string name, int dform, int dghost)
        : alg_(a), name_(std::move(name)), dform_(dform), dghost_(dghost)
    {
    }

    const std::string& name() const { return name_; }
    int parity() const { return (dform_ + dghost_) & 1; }
    std::pair<int, int> bidegree_shift() const { return {dform_, dghost_}; }

    void set_image(GenId id, Expr img);
    void set_image(const std::string& gen_name, Expr img);
    void set_extension(Extension ext, const Derivation* ddx = nullptr, std::optional<GenId> dx = {});

    /// Image of a generator, resolving the extension rule; throws
    /// std::invalid_argument when undefined.
    Expr image(GenId id) const;

    /// Graded Leibniz application.
    Expr operator()(const Expr& e) const;

private:
    const Algebra* alg_;
    std::string name_;
    int dform_, dghost_;
    std::map<GenId, Expr> images_;
    Extension ext_ = Extension::none;
    const Derivation* ddx_ = nullptr;
    std::optional<GenId> dx_;
    mutable std::mutex cache_mu_;
    mutable std::map<GenId, Expr> cache_;
};

struct CommutatorResidual {
    std::string on;
    Expr residual;
};

/// Evaluates the graded commutator D1 D2 -(-1)^{|D1||D2|} D2 D1 on each
/// basis expression and its jet prolongations (via ddx) up to prolong_to.
/// Returns the nonvanishing residuals; empty means the check passes.
std::vector<CommutatorResidual> compose_check(const Derivation& d1, const Derivation& d2,
                                              const std::vector<Expr>& basis, int prolong_to = 0,
                                              const Derivation* ddx = nullptr);

// ring adaptors so the jet machinery instantiates over Expr
inline Expr ring_zero_like(const Expr& s) { return Expr::zero(s.alg()); }
inline Expr ring_one_like(const Expr& s) { return Expr::constant(s.alg(), Rat(1)); }
inline Expr ring_inverse(const Expr& e) { return e.inverse(); }
inline Expr ring_scale(const Expr& e, const Rat& s) { return e * s; }
inline bool ring_is_zero(const Expr& e) { return e.is_zero(); }

} // namespace cartanjet::symba
