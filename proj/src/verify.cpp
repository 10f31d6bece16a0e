#include "cartanjet/verify.hpp"

#include "cartanjet/brs.hpp"
#include "cartanjet/cartanconn.hpp"
#include "cartanjet/oracle.hpp"
#include "cartanjet/projective.hpp"
#include "cartanjet/random.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace cartanjet::verify {

// ---------------------------------------------------------------------------
// jet-group suite
// ---------------------------------------------------------------------------

std::vector<Check> jet_suite(const SuiteOptions& opt)
{
    std::vector<Check> out;
    const std::string S = "jet";
    RandomSource rng(opt.seed);
    const int N = opt.samples;

    auto j2 = [](long b, const Rat& c1, const Rat& c2) {
        Jet2 f = jet2_zero_like(1, Rat(0));
        f.base[0] = Rat(b);
        f.e1[0] = c1;
        f.e2[0] = c2;
        return f;
    };
    auto j3 = [](long b, const Rat& c1, const Rat& c2, const Rat& c3) {
        Jet3 f = jet3_zero_like(1, Rat(0));
        f.base[0] = Rat(b);
        f.e1[0] = c1;
        f.e2[0] = c2;
        f.e3[0] = c3;
        return f;
    };

    out.push_back(check_flag(S, "compose2-chain-rule",
                             "composition of (0,2,3) with (0,1,1) is (0,2,5)",
                             compose2(j2(0, Rat(2), Rat(3)), j2(0, Rat(1), Rat(1))) ==
                                 j2(0, Rat(2), Rat(5))));
    out.push_back(check_flag(S, "compose3-against-oracle-example",
                             "composition of (0,1,0,1) with (0,1,1,0) is (0,1,1,1)",
                             compose3(j3(0, Rat(1), Rat(0), Rat(1)), j3(0, Rat(1), Rat(1), Rat(0))) ==
                                     j3(0, Rat(1), Rat(1), Rat(1)) &&
                                 oracle::compose3_ref(j3(0, Rat(1), Rat(0), Rat(1)),
                                                      j3(0, Rat(1), Rat(1), Rat(0))) ==
                                     j3(0, Rat(1), Rat(1), Rat(1))));
    out.push_back(check_flag(S, "inverse2-closed-form",
                             "(0,2,3) inverts to (0,1/2,-3/8)",
                             inverse2(j2(0, Rat(2), Rat(3))) == j2(0, Rat(1, 2), Rat(-3, 8))));
    out.push_back(check_flag(S, "inverse3-series-reversion",
                             "(0,2,3,0) inverts to (0,1/2,-3/8,9/16)",
                             inverse3(j3(0, Rat(2), Rat(3), Rat(0))) ==
                                 j3(0, Rat(1, 2), Rat(-3, 8), Rat(9, 16))));
    out.push_back(check_flag(S, "natural-frame",
                             "the translation jet at 7 is (7,1,0)",
                             natural_frame({Rat(7)}) == j2(7, Rat(1), Rat(0))));
    {
        auto [lin, nil] = semidirect_split(j2(0, Rat(2), Rat(6)));
        out.push_back(check_flag(S, "semidirect-split",
                                 "(0,2,6) splits as (0,2,0).(0,1,3)",
                                 lin == j2(0, Rat(2), Rat(0)) && nil == j2(0, Rat(1), Rat(3))));
    }

    bool assoc2 = true, assoc3 = true, ident = true, invs = true, oracle2 = true, oracle3 = true,
         restrict = true, split = true;
    for (int n : {1, 2, 3}) {
        Jet3 id3 = jet3_identity(n);
        Jet2 id2 = jet2_identity(n);
        for (int i = 0; i < N; ++i) {
            Jet3 a = rng.group_jet3(n), b = rng.group_jet3(n), c = rng.group_jet3(n);
            Jet2 a2 = jet2_of(a), b2 = jet2_of(b), c2 = jet2_of(c);
            assoc2 = assoc2 && compose2(compose2(a2, b2), c2) == compose2(a2, compose2(b2, c2));
            assoc3 = assoc3 && compose3(compose3(a, b), c) == compose3(a, compose3(b, c));
            ident = ident && compose3(a, id3) == a && compose3(id3, a) == a &&
                    compose2(a2, id2) == a2 && compose2(id2, a2) == a2;
            Jet3 ai = inverse3(a);
            Jet2 ai2 = inverse2(a2);
            invs = invs && compose3(a, ai) == id3 && compose3(ai, a) == id3 &&
                   compose2(a2, ai2) == id2 && compose2(ai2, a2) == id2;
            oracle2 = oracle2 && compose2(a2, b2) == oracle::compose2_ref(a2, b2);
            oracle3 = oracle3 && compose3(a, b) == oracle::compose3_ref(a, b);
            restrict = restrict && jet2_of(compose3(a, b)) == compose2(a2, b2);
            auto [lin, nil] = semidirect_split(a2);
            split = split && compose2(lin, nil) == a2;
        }
    }
    out.push_back(check_flag(S, "associativity-order-2",
                             "jet composition is associative at order 2 (n = 1,2,3)", assoc2));
    out.push_back(check_flag(S, "associativity-order-3",
                             "jet composition is associative at order 3 (n = 1,2,3)", assoc3));
    out.push_back(check_flag(S, "two-sided-identity",
                             "the identity jet is neutral on both sides", ident));
    out.push_back(check_flag(S, "two-sided-inverse",
                             "inverse jets round-trip to the identity at both orders", invs));
    out.push_back(check_flag(S, "oracle-agreement-order-2",
                             "compose2 equals brute-force polynomial composition", oracle2));
    out.push_back(check_flag(S, "oracle-agreement-order-3",
                             "compose3 equals brute-force polynomial composition", oracle3));
    out.push_back(check_flag(S, "order-3-restricts-to-order-2",
                             "compose3 truncated to order 2 equals compose2", restrict));
    out.push_back(check_flag(S, "semidirect-recomposition",
                             "the semidirect factors recompose to the input", split));

    return out;
}

// ---------------------------------------------------------------------------
// graded Lie algebra suite
// ---------------------------------------------------------------------------

namespace {

VecJet pure_piece(RandomSource& rng, int n, int degree)
{
    VecJet x = vecjet_zero(n);
    bool nonzero = false;
    while (!nonzero) {
        if (degree == -1)
            for (Rat& v : x.m1) nonzero = !(v = rng.rat()).is_zero() || nonzero;
        else if (degree == 0)
            for (Rat& v : x.x0) nonzero = !(v = rng.rat()).is_zero() || nonzero;
        else
            for (Rat& v : x.x1) nonzero = !(v = rng.rat()).is_zero() || nonzero;
    }
    return x;
}

VecJet projective_vecjet(RandomSource& rng, int n)
{
    VecJet x = rng.vecjet(n);
    std::vector<Rat> cov(n);
    for (Rat& v : cov) v = rng.rat();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = b; c < n; ++c) {
                Rat v(0);
                if (a == b) v += cov[c];
                if (a == c) v += cov[b];
                x.v1(a, b, c) = v * Rat(1, 2);
            }
    return x;
}

VecJet deriv_norm(const VecJet& x)
{
    VecJet out = x;
    for (Rat& v : out.x1) v = v * Rat(2);
    return out;
}

} // namespace

std::vector<Check> lie_suite(const SuiteOptions& opt)
{
    std::vector<Check> out;
    const std::string S = "lie";
    RandomSource rng(opt.seed + 1);
    const int N = opt.samples;

    auto v1 = [](const Rat& p, const Rat& q, const Rat& r) {
        VecJet x = vecjet_zero(1);
        x.m1[0] = p;
        x.x0[0] = q;
        x.x1[0] = r;
        return x;
    };

    out.push_back(check_flag(S, "bracket-basis-values",
                             "bracket of the translation and dilatation jets is -translation",
                             bracket_vf(v1(Rat(1), Rat(0), Rat(0)), v1(Rat(0), Rat(1), Rat(0))) ==
                                     v1(Rat(-1), Rat(0), Rat(0)) &&
                                 bracket_vf(v1(Rat(0), Rat(1), Rat(0)),
                                            v1(Rat(0), Rat(0), Rat(1))) ==
                                     v1(Rat(0), Rat(0), Rat(-1))));

    bool antisym = true, jacobi1 = true, jacobi_proj = true, defect = true, orac = true,
         formula_d = true, formula_raw = true;
    for (int n : {1, 2}) {
        for (int i = 0; i < N; ++i) {
            VecJet x = rng.vecjet(n), y = rng.vecjet(n), z = rng.vecjet(n);
            antisym = antisym && vecjet_is_zero(bracket_vf(x, y) + bracket_vf(y, x));
            orac = orac && bracket_vf(x, y) == oracle::bracket_ref(x, y);
            if (n == 1) {
                VecJet jac = bracket_vf(x, bracket_vf(y, z)) + bracket_vf(y, bracket_vf(z, x)) +
                             bracket_vf(z, bracket_vf(x, y));
                jacobi1 = jacobi1 && vecjet_is_zero(jac);
            } else {
                VecJet jac = bracket_vf(x, bracket_vf(y, z)) + bracket_vf(y, bracket_vf(z, x)) +
                             bracket_vf(z, bracket_vf(x, y));
                defect = defect && vecjet_is_zero(jac + oracle::jacobi_defect(x, y, z));
                VecJet px = projective_vecjet(rng, n), py = projective_vecjet(rng, n),
                       pz = projective_vecjet(rng, n);
                VecJet pj = bracket_vf(px, bracket_vf(py, pz)) +
                            bracket_vf(py, bracket_vf(pz, px)) +
                            bracket_vf(pz, bracket_vf(px, py));
                jacobi_proj = jacobi_proj && vecjet_is_zero(pj);
            }
            formula_d = formula_d && bracket_component_formula(deriv_norm(x), deriv_norm(y)) ==
                                         deriv_norm(bracket_vf(x, y));
            VecJet diff = bracket_vf(x, y) - bracket_component_formula(x, y);
            VecJet off = diff;
            off.x0.assign(off.x0.size(), Rat(0));
            bool ok = vecjet_is_zero(off);
            for (int a = 0; a < n && ok; ++a)
                for (int b = 0; b < n && ok; ++b) {
                    Rat mixed(0);
                    for (int c = 0; c < n; ++c)
                        mixed += x.v1(a, b, c) * y.m1[c] - y.v1(a, b, c) * x.m1[c];
                    ok = diff.v0(a, b) == mixed;
                }
            formula_raw = formula_raw && ok;
        }
    }
    out.push_back(check_flag(S, "bracket-antisymmetry", "the bracket is antisymmetric (n = 1,2)",
                             antisym));
    out.push_back(check_flag(S, "bracket-jacobi",
                             "Jacobi identity holds exactly in one dimension", jacobi1));
    out.push_back(check_flag(
        S, "bracket-jacobi-projective-sector",
        "Jacobi identity holds exactly on the projective quadratic sector in n = 2", jacobi_proj));
    out.push_back(check_flag(
        S, "bracket-jacobi-truncation-defect",
        "for unconstrained n = 2 jets the Jacobi sum equals minus the re-entering cubic tail",
        defect));
    out.push_back(check_flag(S, "bracket-against-oracle",
                             "the bracket equals minus the truncated polynomial Lie bracket",
                             orac));
    out.push_back(check_flag(
        S, "bracket-component-formula-derivative",
        "the displayed component formulas hold verbatim in derivative normalization", formula_d));
    out.push_back(check_flag(
        S, "bracket-component-formula-raw-pattern",
        "in coefficient normalization the middle line deviates by exactly one mixed term",
        formula_raw));

    {
        bool ok = true;
        std::string detail;
        for (int n : {1, 2}) {
            for (int k = -1; k <= 1 && ok; ++k)
                for (int l = -1; l <= 1 && ok; ++l)
                    for (int i = 0; i < N / 4 + 1 && ok; ++i) {
                        VecJet x = pure_piece(rng, n, k), y = pure_piece(rng, n, l);
                        try {
                            auto deg = grading_check(x, k, y, l);
                            if (deg && *deg != k + l) ok = false;
                            if (k == -1 && l == -1 && deg) ok = false;
                        } catch (const std::logic_error& err) {
                            ok = false;
                            detail = err.what();
                        }
                    }
        }
        out.push_back(check_flag(S, "grading-table",
                                 "all nine graded bracket sectors land in the expected degree",
                                 ok, detail));
    }

    {
        Jet3 dil = jet3_identity(1);
        dil.e1[0] = Rat(2);
        VecJet t = vecjet_zero(1);
        t.m1[0] = Rat(1);
        VecJet ad = adjoint_action(dil, t);
        out.push_back(check_flag(S, "adjoint-dilatation",
                                 "conjugating the translation jet by u -> 2u doubles it",
                                 ad.m1[0] == Rat(2) && ad.x0[0].is_zero() && ad.x1[0].is_zero()));
    }

    bool hom = true, inv = true, idem = true, formula = true;
    for (int n : {1, 2}) {
        for (int i = 0; i < N; ++i) {
            Jet3 g = rng.group_jet3(n), h = rng.group_jet3(n);
            VecJet x = rng.vecjet(n);
            hom = hom && adjoint_action(compose3(g, h), x) ==
                             adjoint_action(g, adjoint_action(h, x));
            inv = inv && adjoint_action(inverse3(g), adjoint_action(g, x)) == x;
            idem = idem && adjoint_action(jet3_identity(n), x) == x;
            formula = formula && adjoint_component_formula(g, x) == adjoint_action(g, x);
        }
    }
    out.push_back(check_flag(S, "adjoint-homomorphism",
                             "Ad(g.h) = Ad(g) Ad(h) for arbitrary group 3-jets", hom));
    out.push_back(check_flag(S, "adjoint-inverse", "Ad(g^-1) inverts Ad(g)", inv));
    out.push_back(check_flag(S, "adjoint-identity", "Ad(identity) fixes every jet", idem));
    out.push_back(check_flag(
        S, "adjoint-component-formula",
        "the displayed chain-rule components reproduce the conjugation exactly", formula));

    {
        bool lin_ok = true, proj_ok = true;
        for (int n : {1, 2, 3}) {
            for (int i = 0; i < N / 2 + 1; ++i) {
                Jet2 l2 = rng.group_jet2(n);
                for (Rat& v : l2.e2) v = Rat(0);
                Jet3 lin = jet3_zero_pad(l2);
                VecJet x = rng.vecjet(n), y = rng.vecjet(n);
                lin_ok = lin_ok && adjoint_action(lin, bracket_vf(x, y)) ==
                                       bracket_vf(adjoint_action(lin, x), adjoint_action(lin, y));
            }
        }
        for (int i = 0; i < N; ++i) {
            Rat e = rng.rat_nonzero(), e2 = rng.rat();
            Jet3 g = jet3_zero_like(1, Rat(0));
            g.e1[0] = e;
            g.e2[0] = e2;
            g.e3[0] = e2 * e2 / e;
            VecJet x = rng.vecjet(1), y = rng.vecjet(1);
            proj_ok = proj_ok && adjoint_action(g, bracket_vf(x, y)) ==
                                     bracket_vf(adjoint_action(g, x), adjoint_action(g, y));
        }
        out.push_back(check_flag(S, "adjoint-bracket-morphism-linear",
                                 "Ad respects the bracket for linear jets in every dimension",
                                 lin_ok));
        out.push_back(check_flag(
            S, "adjoint-bracket-morphism-projective",
            "Ad respects the bracket on the projective jets e3 = e2^2/e1", proj_ok));

        // the generic deviation, reported rather than hidden
        Jet3 g = jet3_identity(1);
        g.e3[0] = Rat(1);
        VecJet x = vecjet_zero(1), y = vecjet_zero(1);
        x.m1[0] = Rat(1);
        y.x0[0] = Rat(1);
        VecJet lhs = adjoint_action(g, bracket_vf(x, y));
        VecJet rhs = bracket_vf(adjoint_action(g, x), adjoint_action(g, y));
        out.push_back(check_flag(
            S, "adjoint-bracket-generic-deviation",
            "for generic cubic jets the truncation breaks the bracket morphism (witness j3(u+u^3))",
            !(lhs == rhs)));
    }

    return out;
}

// ---------------------------------------------------------------------------
// aggregation and rendering
// ---------------------------------------------------------------------------

std::vector<Check> cartan_suite(const SuiteOptions&) { return cartan::bundle_checks(); }

std::vector<Check> projective_suite(const SuiteOptions& opt)
{
    return proj::projective_checks(opt);
}

std::vector<Check> brs_suite(const SuiteOptions&) { return brs::brs_checks(); }

std::vector<Check> run_suite(const std::string& name, const SuiteOptions& opt)
{
    if (name == "jet") return jet_suite(opt);
    if (name == "lie") return lie_suite(opt);
    if (name == "cartan") return cartan_suite(opt);
    if (name == "projective") return projective_suite(opt);
    if (name == "brs") return brs_suite(opt);
    if (name == "all") {
        std::vector<Check> all;
        for (const char* s : {"jet", "lie", "cartan", "projective", "brs"}) {
            auto part = run_suite(s, opt);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    throw std::invalid_argument("unknown suite '" + name +
                                "' (expected jet, lie, cartan, projective, brs or all)");
}

std::string render_text(const std::vector<Check>& checks)
{
    std::ostringstream os;
    size_t passed = 0;
    for (const Check& c : checks) {
        os << (c.pass ? "ok   " : "FAIL ") << c.suite << "/" << c.id << ": " << c.statement
           << "  [residual " << c.residual << "]\n";
        if (c.pass) ++passed;
    }
    os << passed << "/" << checks.size() << " identities verified\n";
    return os.str();
}

std::string render_json(const std::vector<Check>& checks)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const Check& c : checks) {
        arr.push_back({{"suite", c.suite},
                       {"id", c.id},
                       {"statement", c.statement},
                       {"residual", c.residual},
                       {"pass", c.pass}});
    }
    return arr.dump(2) + "\n";
}

} // namespace cartanjet::verify
