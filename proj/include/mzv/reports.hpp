#pragma once

#include <cstdint>
#include <string>

#include "mzv/cartier.hpp"
#include "mzv/numerics.hpp"
#include "mzv/strata.hpp"
#include "mzv/words.hpp"

namespace mzv {

// All report builders return the full artifact as a string; identical inputs
// give byte-identical output.

// Every double-shuffle relation up to the weight bound, as JSON or TSV.
std::string relations_report(int max_weight, const std::string& format);

struct VerifyOutcome {
    int passed = 0;
    int failed = 0;
    std::string text;
    bool all_passed() const { return failed == 0; }
};

// Relation verification stream plus a trailing summary line.
VerifyOutcome verify_report(int max_weight, double tol, const std::string& format);

// Decomposition dump with arrangements and the exactness verdict.
std::string cartier_report(const Composition& k, const Composition& l);

std::string poset_dot(const StratumPoset& poset);

// Poset summary, blow-up schedule, flag partition, and the clearance report
// over every subset with at least two elements; single JSON document with the
// DOT graph embedded as a string field.
std::string strata_report(int n, long long samples, std::uint64_t seed);

struct CoordsOutcome {
    bool ok = false;
    std::string text;
};

// Pullback fixed points up to the weight bound plus coordinate round-trip and
// splitting spot checks on seeded random configurations.
CoordsOutcome coords_check_report(int max_weight, long long samples, std::uint64_t seed);

// Composition literal used on the command line: "2,1".
Composition parse_composition(const std::string& text);

}  // namespace mzv
