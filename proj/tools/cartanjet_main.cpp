// Command-line front end: run the verification suites, do exact jet
// arithmetic on JSON jets, evaluate Schwarzians of rational polynomials.
//
// Exit codes: 0 all good, 1 computational/domain error (including failed
// verification), 2 usage error.

#include "cartanjet/jsonio.hpp"
#include "cartanjet/projective.hpp"
#include "cartanjet/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace cartanjet;
using nlohmann::json;

int cmd_verify(const std::string& suite, const std::string& format, uint64_t seed, int samples)
{
    static const std::vector<std::string> known{"jet", "lie", "cartan", "projective", "brs",
                                                "all"};
    if (std::find(known.begin(), known.end(), suite) == known.end()) {
        std::cerr << "unknown suite '" << suite
                  << "' (expected jet, lie, cartan, projective, brs or all)\n";
        return 2;
    }
    verify::SuiteOptions opt;
    opt.seed = seed;
    opt.samples = samples;

    std::vector<std::string> names =
        suite == "all" ? std::vector<std::string>{"jet", "lie", "cartan", "projective", "brs"}
                       : std::vector<std::string>{suite};
    std::vector<verify::Check> checks;
    for (const std::string& name : names) {
        auto t0 = std::chrono::steady_clock::now();
        auto part = verify::run_suite(name, opt);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        // timings go to stderr so stdout stays byte-identical across runs
        std::cerr << "suite " << name << ": " << part.size() << " identities in " << ms << " ms\n";
        checks.insert(checks.end(), part.begin(), part.end());
    }
    std::cout << (format == "json" ? verify::render_json(checks) : verify::render_text(checks));
    return verify::all_pass(checks) ? 0 : 1;
}

json read_stdin_json()
{
    json j;
    try {
        std::cin >> j;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON input: ") + e.what());
    }
    return j;
}

int cmd_jet(const std::string& action)
{
    json in = read_stdin_json();
    json out;
    if (action == "compose") {
        if (!in.is_array() || in.size() != 2)
            throw std::invalid_argument("compose expects a JSON array [f, g]");
        int of = io::jet_order(in[0]), og = io::jet_order(in[1]);
        if (of != og) throw std::invalid_argument("compose: mixed jet orders");
        if (of == 2)
            out = io::jet_to_json(compose2(io::jet2_from_json(in[0]), io::jet2_from_json(in[1])));
        else
            out = io::jet_to_json(compose3(io::jet3_from_json(in[0]), io::jet3_from_json(in[1])));
    } else if (action == "invert") {
        if (io::jet_order(in) == 2)
            out = io::jet_to_json(inverse2(io::jet2_from_json(in)));
        else
            out = io::jet_to_json(inverse3(io::jet3_from_json(in)));
    } else if (action == "lift3") {
        out = io::jet_to_json(proj::lift3(io::frame_from_json(in)));
    } else {
        std::cerr << "unknown jet action '" << action << "' (expected compose, invert or lift3)\n";
        return 2;
    }
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_schwarzian(const std::vector<std::string>& coeff_args, const std::string& at)
{
    std::vector<Rat> coeffs;
    for (const std::string& s : coeff_args) coeffs.push_back(Rat::parse(s));
    Rat point = Rat::parse(at);
    std::cout << proj::schwarzian_at(coeffs, point).str() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact jet calculus and symbolic verification of second-order frame geometry"};
    app.require_subcommand(1);

    std::string suite = "all";
    std::string format = "text";
    uint64_t seed = 0;
    int samples = 100;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "jet, lie, cartan, projective, brs or all")->required();
    verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--seed", seed, "seed for the randomized property checks");
    verify->add_option("--samples", samples, "sample count per property check")
        ->check(CLI::PositiveNumber);

    std::string action;
    CLI::App* jet = app.add_subcommand("jet", "jet arithmetic on JSON input from stdin");
    jet->add_option("action", action, "compose, invert or lift3")->required();

    std::vector<std::string> coeffs;
    std::string at = "0";
    CLI::App* schw =
        app.add_subcommand("schwarzian", "Schwarzian derivative of a rational polynomial");
    schw->add_option("coeffs", coeffs, "polynomial coefficients c0 c1 c2 ... as p/q")->required();
    schw->add_option("--at", at, "evaluation point (default 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(suite, format, seed, samples);
        if (jet->parsed()) return cmd_jet(action);
        if (schw->parsed()) return cmd_schwarzian(coeffs, at);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
