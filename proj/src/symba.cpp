#include "cartanjet/symba.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cartanjet::symba {

// ---------------------------------------------------------------------------
// Algebra
// ---------------------------------------------------------------------------

std::string Algebra::tower_name(const std::string& base, int order)
{
    std::string s = base;
    for (int i = 0; i < order; ++i) s += '\'';
    return s;
}

GenId Algebra::declare(Generator g)
{
    if (g.name.empty()) throw std::invalid_argument("Algebra: generator needs a name");
    if (g.invertible && g.parity() != 0)
        throw std::invalid_argument("Algebra: invertible generators must have even parity");
    if (g.base.empty()) g.base = g.name;
    std::unique_lock lock(mu_);
    auto it = index_.find(g.name);
    if (it != index_.end()) {
        const Generator& old = gens_[it->second];
        if (old.form_deg != g.form_deg || old.ghost_deg != g.ghost_deg ||
            old.jet_order != g.jet_order || old.invertible != g.invertible ||
            old.field != g.field || old.base != g.base)
            throw std::invalid_argument("Algebra: generator '" + g.name +
                                        "' redeclared with different attributes");
        return it->second;
    }
    GenId id = static_cast<GenId>(gens_.size());
    index_.emplace(g.name, id);
    gens_.push_back(std::move(g));
    return id;
}

GenId Algebra::find(const std::string& name) const
{
    std::shared_lock lock(mu_);
    auto it = index_.find(name);
    if (it == index_.end()) throw std::invalid_argument("Algebra: unknown generator '" + name + "'");
    return it->second;
}

bool Algebra::contains(const std::string& name) const
{
    std::shared_lock lock(mu_);
    return index_.count(name) != 0;
}

Generator Algebra::gen(GenId id) const
{
    std::shared_lock lock(mu_);
    return gens_.at(id);
}

int Algebra::parity_of(GenId id) const
{
    std::shared_lock lock(mu_);
    return gens_.at(id).parity();
}

size_t Algebra::size() const
{
    std::shared_lock lock(mu_);
    return gens_.size();
}

GenId Algebra::prolong(GenId id) const
{
    Generator g = gen(id);
    if (!g.field)
        throw std::invalid_argument("Algebra: generator '" + g.name + "' has no jet tower");
    std::string next = tower_name(g.base, g.jet_order + 1);
    std::unique_lock lock(mu_);
    auto it = index_.find(next);
    if (it != index_.end()) return it->second;
    Generator succ = g;
    succ.name = next;
    succ.jet_order = g.jet_order + 1;
    succ.invertible = false; // only the tower base may carry Laurent exponents
    GenId nid = static_cast<GenId>(gens_.size());
    index_.emplace(succ.name, nid);
    gens_.push_back(std::move(succ));
    return nid;
}

GenId Algebra::precursor(GenId id) const
{
    Generator g = gen(id);
    if (!g.field || g.jet_order == 0)
        throw std::invalid_argument("Algebra: generator '" + g.name + "' has no tower precursor");
    return find(tower_name(g.base, g.jet_order - 1));
}

// ---------------------------------------------------------------------------
// Expr
// ---------------------------------------------------------------------------

namespace {

bool mono_less(const std::vector<Expr::Factor>& a, const std::vector<Expr::Factor>& b)
{
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        if (a[i].id != b[i].id) return a[i].id < b[i].id;
        if (a[i].exp != b[i].exp) return a[i].exp > b[i].exp;
    }
    return a.size() < b.size();
}

std::pair<int, int> mono_bidegree(const Algebra& alg, const std::vector<Expr::Factor>& m)
{
    int fd = 0, gd = 0;
    for (const auto& f : m) {
        Generator g = alg.gen(f.id);
        fd += f.exp * g.form_deg;
        gd += f.exp * g.ghost_deg;
    }
    return {fd, gd};
}

/// Merges two normalized monomials with the Koszul sign. Returns the sign
/// (+1/-1) or 0 when an odd generator squares.
int merge_monos(const Algebra& alg, const std::vector<Expr::Factor>& a,
                const std::vector<Expr::Factor>& b, std::vector<Expr::Factor>& out)
{
    out.clear();
    std::vector<int> odd_suffix(a.size() + 1, 0);
    for (size_t i = a.size(); i-- > 0;)
        odd_suffix[i] = odd_suffix[i + 1] + (alg.parity_of(a[i].id) & (a[i].exp & 1));

    int sign = 1;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].id < b[j].id)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].id < a[i].id) {
            if (alg.parity_of(b[j].id) && (odd_suffix[i] & 1)) sign = -sign;
            out.push_back(b[j++]);
        } else {
            const Generator g = alg.gen(a[i].id);
            if (g.parity()) return 0; // odd square
            int exp = a[i].exp + b[j].exp;
            if (exp != 0) out.push_back({a[i].id, exp});
            ++i;
            ++j;
        }
    }
    return sign;
}

void validate_factor(const Algebra& alg, const Expr::Factor& f)
{
    Generator g = alg.gen(f.id);
    if (f.exp < 0 && !g.invertible)
        throw std::domain_error("Expr: negative exponent on non-invertible generator '" + g.name +
                                "'");
    if (g.parity() && f.exp > 1)
        throw std::domain_error("Expr: odd generator '" + g.name + "' squared");
}

} // namespace

Expr Expr::constant(const Algebra* a, const Rat& c)
{
    Expr e = zero(a);
    if (!c.is_zero()) e.terms_.push_back({c, {}});
    return e;
}

Expr Expr::generator(const Algebra* a, GenId id, int exp)
{
    if (exp == 0) return constant(a, Rat(1));
    Expr e = zero(a);
    Factor f{id, exp};
    validate_factor(*a, f);
    e.terms_.push_back({Rat(1), {f}});
    return e;
}

Expr Expr::from_terms(const Algebra* a, const std::vector<Term>& raw)
{
    std::map<std::vector<Factor>, Rat> acc;
    for (const Term& t : raw) {
        if (t.coeff.is_zero()) continue;
        std::vector<Factor> mono;
        Rat c = t.coeff;
        bool dead = false;
        for (const Factor& f : t.mono) {
            if (f.exp == 0) continue;
            validate_factor(*a, f);
            std::vector<Factor> merged;
            int s = merge_monos(*a, mono, {f}, merged);
            if (s == 0) {
                dead = true;
                break;
            }
            if (s < 0) c = -c;
            mono = std::move(merged);
        }
        if (dead) continue;
        auto it = acc.find(mono);
        if (it == acc.end())
            acc.emplace(std::move(mono), c);
        else {
            it->second += c;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
    Expr e = zero(a);
    for (auto& [m, c] : acc) e.terms_.push_back({c, m});
    std::sort(e.terms_.begin(), e.terms_.end(),
              [](const Term& x, const Term& y) { return mono_less(x.mono, y.mono); });
    e.check_homogeneous();
    return e;
}

void Expr::check_homogeneous() const
{
    if (terms_.size() < 2) return;
    auto first = mono_bidegree(*alg_, terms_[0].mono);
    for (size_t i = 1; i < terms_.size(); ++i)
        if (mono_bidegree(*alg_, terms_[i].mono) != first)
            throw std::logic_error("Expr: inhomogeneous sum (bidegrees differ)");
}

std::pair<int, int> Expr::bidegree() const
{
    if (is_zero()) return {0, 0};
    return mono_bidegree(*alg_, terms_[0].mono);
}

int Expr::parity() const
{
    auto [f, g] = bidegree();
    return (f + g) & 1;
}

const Algebra* Expr::common_alg(const Expr& a, const Expr& b)
{
    if (a.alg_ && b.alg_ && a.alg_ != b.alg_)
        throw std::logic_error("Expr: mixing expressions from different algebras");
    return a.alg_ ? a.alg_ : b.alg_;
}

Expr operator+(const Expr& a, const Expr& b)
{
    const Algebra* alg = Expr::common_alg(a, b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::vector<Expr::Term> all = a.terms_;
    all.insert(all.end(), b.terms_.begin(), b.terms_.end());
    return Expr::from_terms(alg, all);
}

Expr operator-(const Expr& a) { return a * Rat(-1); }

Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

Expr operator*(const Expr& a, const Rat& s)
{
    Expr out = a;
    if (s.is_zero()) {
        out.terms_.clear();
        return out;
    }
    for (auto& t : out.terms_) t.coeff *= s;
    return out;
}

Expr operator*(const Expr& a, const Expr& b)
{
    const Algebra* alg = Expr::common_alg(a, b);
    if (a.is_zero() || b.is_zero()) return Expr::zero(alg);
    std::map<std::vector<Expr::Factor>, Rat> acc;
    std::vector<Expr::Factor> merged;
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            int s = merge_monos(*alg, ta.mono, tb.mono, merged);
            if (s == 0) continue;
            Rat c = ta.coeff * tb.coeff;
            if (s < 0) c = -c;
            for (const auto& f : merged) validate_factor(*alg, f);
            auto it = acc.find(merged);
            if (it == acc.end())
                acc.emplace(merged, c);
            else {
                it->second += c;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
    }
    Expr e = Expr::zero(alg);
    for (auto& [m, c] : acc) e.terms_.push_back({c, m});
    std::sort(e.terms_.begin(), e.terms_.end(),
              [](const Expr::Term& x, const Expr::Term& y) { return mono_less(x.mono, y.mono); });
    e.check_homogeneous();
    return e;
}

Expr Expr::inverse() const
{
    if (terms_.size() != 1)
        throw std::domain_error("Expr: only single-term expressions are invertible: " + str());
    const Term& t = terms_[0];
    Expr out = zero(alg_);
    Term inv{t.coeff.inverse(), {}};
    for (const Factor& f : t.mono) {
        Generator g = alg_->gen(f.id);
        if (!g.invertible)
            throw std::domain_error("Expr: factor '" + g.name + "' is not invertible");
        inv.mono.push_back({f.id, -f.exp});
    }
    out.terms_.push_back(std::move(inv));
    return out;
}

Expr Expr::pow(int k) const
{
    if (k == 0) return constant(alg_, Rat(1));
    Expr base = k > 0 ? *this : inverse();
    int reps = k > 0 ? k : -k;
    Expr out = base;
    for (int i = 1; i < reps; ++i) out = out * base;
    return out;
}

bool Expr::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.empty());
}

Rat Expr::constant_value() const
{
    if (is_zero()) return Rat(0);
    if (!is_constant()) throw std::domain_error("Expr: not a constant: " + str());
    return terms_[0].coeff;
}

bool operator==(const Expr& a, const Expr& b)
{
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
        if (!(a.terms_[i].mono == b.terms_[i].mono)) return false;
    }
    return true;
}

std::string Expr::str() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        Rat c = t.coeff;
        bool neg = c.sign() < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (neg) c = -c;
        bool unit = c.is_one() && !t.mono.empty();
        if (!unit) os << c.str();
        bool lead = unit;
        for (const Factor& f : t.mono) {
            if (!lead) os << "*";
            lead = false;
            os << alg_->gen(f.id).name;
            if (f.exp != 1) os << "^" << f.exp;
        }
    }
    return os.str();
}

Expr substitute(const Expr& e, const std::map<GenId, Expr>& images)
{
    if (e.is_zero()) return e;
    const Algebra* alg = e.alg();
    Expr out = Expr::zero(alg);
    for (const auto& t : e.terms()) {
        Expr prod = Expr::constant(alg, t.coeff);
        for (const auto& f : t.mono) {
            auto it = images.find(f.id);
            if (it == images.end()) {
                prod = prod * Expr::generator(alg, f.id, f.exp);
                continue;
            }
            const Expr& img = it->second;
            if (!img.is_zero() && img.parity() != alg->parity_of(f.id))
                throw std::logic_error("substitute: image parity mismatch for generator '" +
                                       alg->gen(f.id).name + "'");
            prod = prod * img.pow(f.exp);
        }
        out = out + prod;
    }
    return out;
}

Expr transplant(const Expr& e, const Algebra* target, const std::map<GenId, Expr>& images)
{
    Expr out = Expr::zero(target);
    for (const auto& t : e.terms()) {
        Expr prod = Expr::constant(target, t.coeff);
        for (const auto& f : t.mono) {
            auto it = images.find(f.id);
            if (it == images.end())
                throw std::invalid_argument("transplant: no image for generator '" +
                                            e.alg()->gen(f.id).name + "'");
            prod = prod * it->second.pow(f.exp);
        }
        out = out + prod;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Derivation
// ---------------------------------------------------------------------------

void Derivation::set_image(GenId id, Expr img) { images_[id] = std::move(img); }

void Derivation::set_image(const std::string& gen_name, Expr img)
{
    set_image(alg_->find(gen_name), std::move(img));
}

void Derivation::set_extension(Extension ext, const Derivation* ddx, std::optional<GenId> dx)
{
    ext_ = ext;
    ddx_ = ddx;
    dx_ = dx;
}

Expr Derivation::image(GenId id) const
{
    auto it = images_.find(id);
    if (it != images_.end()) return it->second;
    {
        std::lock_guard lock(cache_mu_);
        auto c = cache_.find(id);
        if (c != cache_.end()) return c->second;
    }
    Generator g = alg_->gen(id);
    Expr img;
    switch (ext_) {
    case Extension::none:
        throw std::invalid_argument("Derivation " + name_ + ": no image for generator '" + g.name +
                                    "'");
    case Extension::prolong:
        if (!g.field)
            throw std::invalid_argument("Derivation " + name_ + ": no image for generator '" +
                                        g.name + "'");
        img = Expr::generator(alg_, alg_->prolong(id));
        break;
    case Extension::prolong_dx:
        if (!g.field || !dx_)
            throw std::invalid_argument("Derivation " + name_ + ": no image for generator '" +
                                        g.name + "'");
        img = Expr::generator(alg_, *dx_) * Expr::generator(alg_, alg_->prolong(id));
        break;
    case Extension::commute:
        if (!g.field || g.jet_order == 0 || !ddx_)
            throw std::invalid_argument("Derivation " + name_ + ": no image for generator '" +
                                        g.name + "'");
        img = (*ddx_)(image(alg_->precursor(id)));
        break;
    case Extension::vanish:
        if (!g.field)
            throw std::invalid_argument("Derivation " + name_ + ": no image for generator '" +
                                        g.name + "'");
        img = Expr::zero(alg_);
        break;
    }
    std::lock_guard lock(cache_mu_);
    cache_.emplace(id, img);
    return img;
}

Expr Derivation::operator()(const Expr& e) const
{
    if (e.is_zero()) return e;
    const Algebra* alg = e.alg();
    Expr out = Expr::zero(alg);
    const int dpar = parity();
    for (const auto& t : e.terms()) {
        int prefix_parity = 0;
        for (size_t i = 0; i < t.mono.size(); ++i) {
            const auto& f = t.mono[i];
            Generator g = alg->gen(f.id);
            Expr img = image(f.id);
            if (img.is_zero()) {
                prefix_parity ^= g.parity() & (f.exp & 1);
                continue;
            }
            // D(g^k) = k g^{k-1} D(g) for even g; D(g) for odd g (k = 1)
            Expr dpart;
            if (g.parity())
                dpart = img;
            else
                dpart = Expr::generator(alg, f.id, f.exp - 1) * img * Rat(f.exp);

            Rat sign((dpar && prefix_parity) ? -1 : 1);
            Expr piece = Expr::constant(alg, t.coeff * sign);
            for (size_t k = 0; k < i; ++k)
                piece = piece * Expr::generator(alg, t.mono[k].id, t.mono[k].exp);
            piece = piece * dpart;
            for (size_t k = i + 1; k < t.mono.size(); ++k)
                piece = piece * Expr::generator(alg, t.mono[k].id, t.mono[k].exp);
            out = out + piece;
            prefix_parity ^= g.parity() & (f.exp & 1);
        }
    }
    return out;
}

std::vector<CommutatorResidual> compose_check(const Derivation& d1, const Derivation& d2,
                                              const std::vector<Expr>& basis, int prolong_to,
                                              const Derivation* ddx)
{
    std::vector<CommutatorResidual> bad;
    Rat sign((d1.parity() && d2.parity()) ? 1 : -1); // anticommutator when both odd
    for (const Expr& b : basis) {
        Expr cur = b;
        for (int k = 0;; ++k) {
            Expr res = d1(d2(cur)) + sign * d2(d1(cur));
            if (!res.is_zero()) bad.push_back({cur.str(), res});
            if (k == prolong_to || !ddx) break;
            cur = (*ddx)(cur);
        }
    }
    return bad;
}

} // namespace cartanjet::symba
