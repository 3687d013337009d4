#pragma once

#include <map>
#include <string>
#include <vector>

#include "mzv/words.hpp"

namespace mzv {

enum class EvalMethod { Series, SeriesExtrapolated, Quadrature };

const char* eval_method_name(EvalMethod m);

// Floating approximation of a multiple zeta value together with a bound on
// the truncation error: the interval [value - tail_bound, value + tail_bound]
// contains the exact value.
struct MzvValue {
    double value = 0.0;
    double tail_bound = 0.0;
    EvalMethod method = EvalMethod::Series;
};

// Truncated nested sum over n_1 > ... > n_p with n_1 <= N, computed by the
// level-by-level partial-sum dynamic program.  The tail bound is the majorant
//   prod_{j>=2} (k_j >= 2 ? zeta(k_j) : 1 + ln n)  summed against n^{-k_1}
// over n > N, closed off by an exact integral.
MzvValue mzv_series(const Composition& k, long long N);

// Full value of zeta(k): series plus Euler-Maclaurin tail corrections, applied level by level
// from the innermost index outward so that log-growing inner partial sums
// (entries equal to 1) are handled symbolically.  Guarantees
// tail_bound <= tol or throws a budget error.
MzvValue zeta(const Composition& k, double tol);

// Tensor-product Gauss-Legendre approximation of the cube integral of the
// integrand attached to k; the error estimate is the order-halving
// difference.  Guarded to weight(k) <= 6.
MzvValue mzv_cube_quadrature(const Composition& k, int order);

// Gauss-Legendre nodes and weights on [0,1].
void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights);

struct RelationReport {
    ProductKind kind;
    Composition k, l;
    double lhs = 0.0;
    double rhs = 0.0;
    double absdiff = 0.0;
    double bound = 0.0;  // combined evaluation error bound
    double tol = 0.0;
    bool pass = false;   // |lhs - rhs| <= tol + bound
};

// Caches one evaluation per composition; all values produced at the same
// target tolerance.
class MzvEvaluator {
public:
    explicit MzvEvaluator(double eval_tol) : tol_(eval_tol) {}

    const MzvValue& value(const Composition& k);
    double eval_tol() const { return tol_; }

private:
    double tol_;
    std::map<Composition, MzvValue> cache_;
};

RelationReport verify_relation(const Relation& rel, double tol);
RelationReport verify_relation(const Relation& rel, double tol, MzvEvaluator& eval);

// One report per product and per unordered admissible pair with total weight
// at most W, sorted by (total weight, k, l, product).  Independent
// evaluations may fan out over worker threads (MZVWB_THREADS caps the count);
// the report order does not depend on the thread schedule.
std::vector<RelationReport> verify_double_shuffle_up_to(int max_weight, double tol);

// All relations enumerated by verify_double_shuffle_up_to, without values.
std::vector<Relation> double_shuffle_relations_up_to(int max_weight);

}  // namespace mzv
