#include "cartanjet/oracle.hpp"

#include <algorithm>

namespace cartanjet::oracle {

void Poly::add(std::vector<int> mono, const Rat& c)
{
    if (c.is_zero()) return;
    std::sort(mono.begin(), mono.end());
    auto it = coef.find(mono);
    if (it == coef.end()) {
        coef.emplace(std::move(mono), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coef.erase(it);
    }
}

Poly operator+(const Poly& a, const Poly& b)
{
    Poly out = a;
    for (const auto& [m, c] : b.coef) out.add(m, c);
    return out;
}

Poly operator*(const Poly& a, const Poly& b)
{
    Poly out = poly_zero(a.nvars, a.maxdeg);
    for (const auto& [ma, ca] : a.coef) {
        for (const auto& [mb, cb] : b.coef) {
            if (static_cast<int>(ma.size() + mb.size()) > a.maxdeg) continue;
            std::vector<int> m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            out.add(std::move(m), ca * cb);
        }
    }
    return out;
}

Poly Poly::scaled(const Rat& s) const
{
    Poly out = poly_zero(nvars, maxdeg);
    for (const auto& [m, c] : coef) out.add(m, c * s);
    return out;
}

Poly Poly::derivative(int var) const
{
    Poly out = poly_zero(nvars, maxdeg);
    for (const auto& [m, c] : coef) {
        // d/du_var of the monomial: one term per occurrence of var.
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] != var) continue;
            std::vector<int> reduced;
            reduced.reserve(m.size() - 1);
            for (size_t k = 0; k < m.size(); ++k)
                if (k != i) reduced.push_back(m[k]);
            out.add(std::move(reduced), c);
        }
    }
    return out;
}

Rat Poly::get(const std::vector<int>& mono) const
{
    std::vector<int> m = mono;
    std::sort(m.begin(), m.end());
    auto it = coef.find(m);
    return it == coef.end() ? Rat(0) : it->second;
}

Poly poly_zero(int nvars, int maxdeg)
{
    Poly p;
    p.nvars = nvars;
    p.maxdeg = maxdeg;
    return p;
}

Poly poly_const(int nvars, int maxdeg, const Rat& c)
{
    Poly p = poly_zero(nvars, maxdeg);
    p.add({}, c);
    return p;
}

Poly substitute(const Poly& p, const std::vector<Poly>& args)
{
    const int nv = args.empty() ? p.nvars : args[0].nvars;
    const int md = args.empty() ? p.maxdeg : args[0].maxdeg;
    Poly out = poly_zero(nv, md);
    for (const auto& [m, c] : p.coef) {
        Poly term = poly_const(nv, md, c);
        for (int var : m) term = term * args[var];
        out = out + term;
    }
    return out;
}

namespace {

// number of distinct orderings of a sorted multi-index
long orderings(const std::vector<int>& m)
{
    if (m.size() <= 1) return 1;
    if (m.size() == 2) return m[0] == m[1] ? 1 : 2;
    // size 3
    if (m[0] == m[1] && m[1] == m[2]) return 1;
    if (m[0] == m[1] || m[1] == m[2]) return 3;
    return 6;
}

} // namespace

std::vector<Poly> polys_of_jet2(const Jet2& f)
{
    const int n = f.dim;
    std::vector<Poly> out;
    for (int mu = 0; mu < n; ++mu) {
        Poly p = poly_zero(n, 3);
        p.add({}, f.base[mu]);
        for (int a = 0; a < n; ++a) p.add({a}, f.c1(mu, a));
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b) p.add({a, b}, f.c2(mu, a, b) * orderings({a, b}));
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<Poly> polys_of_jet3(const Jet3& f)
{
    const int n = f.dim;
    std::vector<Poly> out = polys_of_jet2(jet2_of(f));
    for (int mu = 0; mu < n; ++mu)
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b)
                for (int c = b; c < n; ++c)
                    out[mu].add({a, b, c}, f.c3(mu, a, b, c) * orderings({a, b, c}));
    return out;
}

Jet2 jet2_of_polys(const std::vector<Poly>& p, const std::vector<Rat>& base)
{
    const int n = static_cast<int>(p.size());
    Jet2 f = jet2_zero_like(n, Rat(0));
    f.base = base;
    for (int mu = 0; mu < n; ++mu) {
        for (int a = 0; a < n; ++a) f.c1(mu, a) = p[mu].get({a});
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b)
                f.c2(mu, a, b) = p[mu].get({a, b}) / Rat(orderings({a, b}));
    }
    return f;
}

Jet3 jet3_of_polys(const std::vector<Poly>& p, const std::vector<Rat>& base)
{
    const int n = static_cast<int>(p.size());
    Jet3 f = jet3_zero_pad(jet2_of_polys(p, base));
    for (int mu = 0; mu < n; ++mu)
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b)
                for (int c = b; c < n; ++c)
                    f.c3(mu, a, b, c) = p[mu].get({a, b, c}) / Rat(orderings({a, b, c}));
    return f;
}

namespace {

template <class JetT, class ToPolys, class FromPolys>
JetT compose_ref_impl(const JetT& f, const JetT& g, ToPolys to_polys, FromPolys from_polys)
{
    std::vector<Poly> fp = to_polys(f);
    std::vector<Poly> gp = to_polys(g);
    // substitution requires the inner map to vanish at the origin
    for (Poly& p : gp) p.coef.erase(std::vector<int>{});
    // drop f's constant so only expansion terms survive, then restore base
    std::vector<Poly> comp;
    for (Poly& p : fp) {
        p.coef.erase(std::vector<int>{});
        comp.push_back(substitute(p, gp));
    }
    return from_polys(comp, f.base);
}

} // namespace

Jet2 compose2_ref(const Jet2& f, const Jet2& g)
{
    detail::check_dims(f.dim, g.dim);
    detail::check_group_factor(g);
    return compose_ref_impl(f, g, polys_of_jet2, jet2_of_polys);
}

Jet3 compose3_ref(const Jet3& f, const Jet3& g)
{
    detail::check_dims(f.dim, g.dim);
    detail::check_group_factor(g);
    return compose_ref_impl(f, g, polys_of_jet3, jet3_of_polys);
}

namespace {

std::vector<Poly> field_components(const VecJet& V, int maxdeg)
{
    const int n = V.dim;
    std::vector<Poly> out;
    for (int a = 0; a < n; ++a) {
        Poly p = poly_zero(n, maxdeg);
        p.add({}, V.m1[a]);
        for (int b = 0; b < n; ++b) p.add({b}, V.v0(a, b));
        for (int b = 0; b < n; ++b)
            for (int c = b; c < n; ++c) p.add({b, c}, V.v1(a, b, c) * orderings({b, c}));
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<Poly> lie_bracket(const std::vector<Poly>& x, const std::vector<Poly>& y)
{
    const int n = static_cast<int>(x.size());
    std::vector<Poly> out;
    for (int a = 0; a < n; ++a) {
        Poly lie = poly_zero(x[0].nvars, x[0].maxdeg);
        for (int b = 0; b < n; ++b)
            lie = lie + x[b] * y[a].derivative(b) + (y[b] * x[a].derivative(b)).scaled(Rat(-1));
        out.push_back(std::move(lie));
    }
    return out;
}

VecJet truncate_fields(const std::vector<Poly>& p)
{
    const int n = static_cast<int>(p.size());
    VecJet out = vecjet_zero(n);
    for (int a = 0; a < n; ++a) {
        out.m1[a] = p[a].get({});
        for (int b = 0; b < n; ++b) out.v0(a, b) = p[a].get({b});
        for (int b = 0; b < n; ++b)
            for (int c = b; c < n; ++c)
                out.v1(a, b, c) = p[a].get({b, c}) / Rat(orderings({b, c}));
    }
    return out;
}

std::vector<Poly> high_tail(const std::vector<Poly>& p)
{
    std::vector<Poly> out;
    for (const Poly& q : p) {
        Poly t = poly_zero(q.nvars, q.maxdeg);
        for (const auto& [m, c] : q.coef)
            if (m.size() >= 3) t.add(m, c);
        out.push_back(std::move(t));
    }
    return out;
}

} // namespace

VecJet bracket_ref(const VecJet& X, const VecJet& Y)
{
    std::vector<Poly> lie = lie_bracket(field_components(X, 2), field_components(Y, 2));
    VecJet out = vecjet_zero(X.dim);
    for (int a = 0; a < X.dim; ++a) {
        Poly neg = lie[a].scaled(Rat(-1)); // algebra bracket is minus the Lie bracket
        out.m1[a] = neg.get({});
        for (int b = 0; b < X.dim; ++b) out.v0(a, b) = neg.get({b});
        for (int b = 0; b < X.dim; ++b)
            for (int c = b; c < X.dim; ++c)
                out.v1(a, b, c) = neg.get({b, c}) / Rat(orderings({b, c}));
    }
    return out;
}

VecJet jacobi_defect(const VecJet& X, const VecJet& Y, const VecJet& Z)
{
    auto one = [&](const VecJet& a, const VecJet& b, const VecJet& c) {
        auto inner = lie_bracket(field_components(b, 3), field_components(c, 3));
        return truncate_fields(lie_bracket(field_components(a, 3), high_tail(inner)));
    };
    return one(X, Y, Z) + one(Y, Z, X) + one(Z, X, Y);
}

} // namespace cartanjet::oracle
