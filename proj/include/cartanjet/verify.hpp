#pragma once

#include "cartanjet/symba.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cartanjet::verify {

/// One verified identity: a law, its canonical residual (which must render
/// as "0"), and the pass flag. Rendering is deterministic so repeated runs
/// are byte-identical.
struct Check {
    std::string suite;
    std::string id;
    std::string statement;
    std::string residual;
    bool pass = false;
};

inline Check check_expr(std::string suite, std::string id, std::string statement,
                        const symba::Expr& residual)
{
    return {std::move(suite), std::move(id), std::move(statement), residual.str(),
            residual.is_zero()};
}

inline Check check_flag(std::string suite, std::string id, std::string statement, bool ok,
                        std::string detail_when_bad = "")
{
    return {std::move(suite), std::move(id), std::move(statement),
            ok ? "0" : (detail_when_bad.empty() ? "nonzero" : detail_when_bad), ok};
}

struct SuiteOptions {
    uint64_t seed = 0;
    int samples = 100;
};

std::vector<Check> jet_suite(const SuiteOptions& opt);
std::vector<Check> lie_suite(const SuiteOptions& opt);
std::vector<Check> cartan_suite(const SuiteOptions& opt);
std::vector<Check> projective_suite(const SuiteOptions& opt);
std::vector<Check> brs_suite(const SuiteOptions& opt);

/// Runs one named suite or "all"; throws std::invalid_argument for an
/// unknown name.
std::vector<Check> run_suite(const std::string& name, const SuiteOptions& opt);

std::string render_text(const std::vector<Check>& checks);
std::string render_json(const std::vector<Check>& checks);

inline bool all_pass(const std::vector<Check>& checks)
{
    for (const Check& c : checks)
        if (!c.pass) return false;
    return true;
}

} // namespace cartanjet::verify
