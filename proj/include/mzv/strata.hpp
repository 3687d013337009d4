#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mzv/polynomial.hpp"
#include "mzv/smith.hpp"

namespace mzv {

// Labels for the divisors of affine n-space used throughout: A(I) is
// 1 - prod_{i in I} x_i = 0, B0(i) is x_i = 0 and B1(i) is 1 - x_i = 0.
// B1(i) and A({i}) denote the same divisor.
struct DivisorLabel {
    enum class Kind { A, B0, B1 };

    Kind kind;
    std::vector<int> I;  // 1-based coordinate indices, sorted
    int n;

    static DivisorLabel A(std::vector<int> I, int n);
    static DivisorLabel B0(int i, int n);
    static DivisorLabel B1(int i, int n);

    // A({i}) and B1(i) are the same hypersurface.
    bool same_divisor(const DivisorLabel& o) const;
    std::string to_string() const;
};

// Classification of an intersection of divisors A_I: the variety is
// A^s x Gm^{n-s-r} x (product of c_i-torsion conditions), with
// component_count_closure = prod c_i components over the algebraic closure.
struct IntersectionClass {
    int s = 0;
    int r = 0;
    int torus_rank = 0;
    std::vector<long long> invariant_factors;
    long long component_count_closure = 1;
};

// Row i is the characteristic vector of Is[i] (subsets are 1-based).
IntMat char_matrix(const std::vector<std::vector<int>>& Is, int n);

IntersectionClass intersection_type(const std::vector<std::vector<int>>& Is, int n);

// Codimension equals the rank of the normal vectors; computed two ways
// (rational rank vs. Smith rank) and compared.  Distinct subsets required.
bool clean_intersection_check(const std::vector<std::vector<int>>& Is, int n);

// Machine-checkable witness of the torus-times-affine decomposition: the
// Smith data realizing the coordinate change, plus the re-multiplied check.
struct TateCertificate {
    IntersectionClass cls;
    IntMat M, U, V, D;
    std::string model;  // "A^s x Gm^t x {c points}" style description
    bool valid = false;
};

TateCertificate tate_certificate(const std::vector<std::vector<int>>& Is, int n);

// One irreducible component of an intersection of divisors A_I, identified by
// the Hermite basis of its saturated character lattice together with the
// values (in Q/Z) of its torsion character on that basis.
struct StratumNode {
    IntMat lattice;  // HNF rows, basis of the saturated lattice
    std::vector<std::pair<long long, long long>> character;  // num/den in [0,1) per row
    int dim = 0;
    int rank = -1;  // longest-chain rank in the poset
    std::vector<std::vector<int>> family;  // one generating family (first found)
    std::string label;
};

struct StratumPoset {
    int n = 0;
    std::vector<StratumNode> nodes;       // sorted by canonical key
    std::vector<std::vector<bool>> lt;    // lt[a][b]: variety a strictly inside variety b
    bool smooth_ok = false;               // every node smooth (torus model)
    bool clean_ok = false;                // pairwise clean intersections
    bool closure_ok = false;              // pairwise meets decompose into nodes
};

// Enumerates all components of all intersections of the divisors A_I,
// I nonempty subset of {1..n}, deduplicated; guarded to 2 <= n <= 4.
StratumPoset build_poset(int n);

// Rank levels: level j lists the indices of rank-j nodes.  Within a level all
// strata are pairwise incomparable.
std::vector<std::vector<int>> blowup_schedule(const StratumPoset& poset);

// Ordered partition into strictly increasing chains.
struct FlagSchedule {
    std::vector<std::vector<int>> flags;  // node indices, chain from smallest stratum up
};

// Singleton flags in rank order; always valid.
FlagSchedule flag_partition(const StratumPoset& poset);

// Both schedule conditions: the flags partition the node set, each flag is a
// strictly increasing chain, and every node's predecessors are scheduled in
// the same or an earlier flag.
bool validate_flag_schedule(const StratumPoset& poset, const FlagSchedule& fs);

// Standalone strict order for the same validation logic on other posets.
bool validate_flag_schedule(int node_count, const std::vector<std::vector<bool>>& lt,
                            const FlagSchedule& fs);

// The poset of interval strata {x_i = ... = x_j = 1}, 1 <= i <= j <= n;
// node index of [i..j] is returned by interval_node_index.
struct IntervalPoset {
    int n = 0;
    std::vector<std::pair<int, int>> intervals;  // [i..j], 1-based
    std::vector<std::vector<bool>> lt;
};

IntervalPoset interval_poset(int n);
int interval_node_index(const IntervalPoset& p, int i, int j);

// The explicit chain family on interval strata: flag F_i holds
// [i..n] < [i..n-1] < ... < [i..i], for i = 1..n.
FlagSchedule interval_flag_family(const IntervalPoset& p);

// sigma_k(lambda, lambda X_1, ..., lambda X_p)
//   = lambda^k (sigma_{k-1}(X) + sigma_k(X))  for all 1 <= k <= p+1,
// checked over exact polynomial algebra.
bool sigma_identity_check(int p);

struct ClearanceReport {
    bool symbolic_ok = false;   // rewritten product form matches the pullback expression
    bool positive_ok = false;   // strictly positive at every sample
    long long samples = 0;
    std::string min_value;      // smallest sampled value, exact
    bool ok() const { return symbolic_ok && positive_ok; }
};

// Boundary clearance for the divisor A_I after the iterated corner blow-up:
// the defining expression in the blow-up coordinates stays strictly positive
// on the closed cube preimage.  Samples are exact rationals with denominator
// 2^16, rejection-sampled onto the cumulative-product domain; all evaluation
// is exact.
ClearanceReport boundary_clearance_check(const std::vector<int>& I, int n,
                                         long long sample_count, std::uint64_t seed);

// Defining polynomial of A_I in the blow-up coordinates (the bracket with the
// leading cumulative product factored off); strictly positive on the domain.
Polynomial clearance_polynomial(const std::vector<int>& I, int n);

// Codimension gap: a boundary stratum x_{r_1} = ... = x_{r_k} = 1 is never a
// stratum of a nested A-divisor chain whose smallest set has >= 2 elements,
// because any such chain inside {r_1..r_k} has length < k.  Verified
// exhaustively.
bool boundary_codim_gap_check(int n);

}  // namespace mzv
