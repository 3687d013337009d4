// Command-line front end: generate double-shuffle relations, verify them
// numerically, dump exact decompositions, and analyze the arrangement
// combinatorics.  All output is deterministic for a fixed configuration.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "mzv/reports.hpp"

namespace {

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) {
        std::cerr << "cannot open output file: " << out_path << "\n";
        return 2;
    }
    os << text;
    if (!os) {
        std::cerr << "write failed: " << out_path << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiple zeta value double-shuffle workbench"};
    app.require_subcommand(1);

    int max_weight = 6;
    double tol = 1e-5;
    long long samples = 1000;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string out_path;

    auto add_common = [&](CLI::App* cmd, bool with_format) {
        cmd->add_option("--seed", seed, "seed for any sampling (default 0)");
        cmd->add_option("--out", out_path, "write the report to a file instead of stdout");
        if (with_format) {
            cmd->add_option("--format", format, "json or tsv")
                ->check(CLI::IsMember({"json", "tsv"}));
        }
    };

    CLI::App* relations = app.add_subcommand("relations", "list double-shuffle relations");
    relations->add_option("--max-weight", max_weight, "largest total weight")
        ->check(CLI::Range(4, 10));
    add_common(relations, true);

    CLI::App* verify = app.add_subcommand("verify", "verify relations numerically");
    verify->add_option("--max-weight", max_weight, "largest total weight")
        ->check(CLI::Range(4, 10));
    verify->add_option("--tol", tol, "pass tolerance (>= 1e-10)");
    add_common(verify, true);

    CLI::App* cartier = app.add_subcommand("cartier", "exact decomposition of a product");
    std::vector<std::string> cartier_args;
    cartier->add_option("tuples", cartier_args, "two compositions, e.g.  2,1 / 2,1")
        ->expected(-1);
    add_common(cartier, false);

    CLI::App* strata = app.add_subcommand("strata", "arrangement poset, schedules, clearance");
    int strata_n = 2;
    strata->add_option("n", strata_n, "ambient dimension (2..4)")->required()->check(CLI::Range(2, 4));
    strata->add_option("--samples", samples, "clearance samples per subset");
    add_common(strata, false);

    CLI::App* coords = app.add_subcommand("coords-check", "pullback and coordinate checks");
    coords->add_option("--max-weight", max_weight, "largest pullback weight")
        ->check(CLI::Range(2, 8));
    coords->add_option("--samples", samples, "random configurations per shape");
    add_common(coords, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (relations->parsed()) {
            return emit(mzv::relations_report(max_weight, format), out_path);
        }
        if (verify->parsed()) {
            if (!(tol >= 1e-10)) {
                std::cerr << "tolerance must be at least 1e-10\n";
                return 2;
            }
            mzv::VerifyOutcome outcome = mzv::verify_report(max_weight, tol, format);
            int rc = emit(outcome.text, out_path);
            if (rc != 0) return rc;
            return outcome.all_passed() ? 0 : 1;
        }
        if (cartier->parsed()) {
            // accept "2,1 / 3" as three tokens or "2,1/3" as one
            std::string joined;
            for (const std::string& a : cartier_args) joined += a;
            auto slash = joined.find('/');
            if (slash == std::string::npos) {
                std::cerr << "usage: cartier K / L   (e.g. cartier 2,1 / 2,1)\n";
                return 2;
            }
            mzv::Composition k = mzv::parse_composition(joined.substr(0, slash));
            mzv::Composition l = mzv::parse_composition(joined.substr(slash + 1));
            if (!k.admissible() || !l.admissible()) {
                std::cerr << "both tuples must be admissible (first entry >= 2)\n";
                return 2;
            }
            return emit(mzv::cartier_report(k, l), out_path);
        }
        if (strata->parsed()) {
            return emit(mzv::strata_report(strata_n, samples, seed), out_path);
        }
        if (coords->parsed()) {
            mzv::CoordsOutcome outcome = mzv::coords_check_report(max_weight, samples, seed);
            int rc = emit(outcome.text, out_path);
            if (rc != 0) return rc;
            return outcome.ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
