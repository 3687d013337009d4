#pragma once

#include <string>
#include <vector>

#include "mzv/ratfun.hpp"
#include "mzv/words.hpp"

namespace mzv {

// Cube integrand attached to an index tuple: with partial weights
// w_i = k_1 + ... + k_i and prefix products P_i = v_1...v_{w_i} over the given
// variables,
//   f_k = prod_{i=1..p} P_{i-1} / (1 - P_i),   P_0 = 1.
// Requires exactly weight(k) variables.
RationalFn build_f(const Composition& k, const std::vector<VarId>& vars);

// The three summands of
//   1/((1-a)(1-b)) = a/((1-a)(1-ab)) + b/((1-b)(1-ab)) + 1/(1-ab)
// for monomials a, b over disjoint variable supports, together with the
// result of the exact verification against the left-hand side.
struct KeyIdentity {
    RationalFn lhs;
    RationalFn term_a;   // a/((1-a)(1-ab))
    RationalFn term_b;   // b/((1-b)(1-ab))
    RationalFn term_ab;  // 1/(1-ab)
    bool verified;
};

KeyIdentity key_identity(const Monomial& a, const Monomial& b);

// Variable groups of one stuffle term: group i holds the variables of the
// component at position i; a merged component k_i + l_j carries the k-group
// followed by the l-group.
struct VariableArrangement {
    std::vector<std::vector<VarId>> groups;

    std::vector<VarId> flatten() const;
    std::string to_string() const;  // "(x1,x2 | x3,x4)"
};

// Arrangement for a provenance-tagged stuffle term of (k, l); the second
// group uses ids n..n+m-1 (the primed variables x'_j = x_{n+j}).
VariableArrangement arrangement_for(const ProvenanceWord& sigma,
                                    const Composition& k, const Composition& l);

struct CartierSummand {
    ProvenanceWord provenance;
    Composition sigma;
    VariableArrangement arrangement;
    RationalFn fn;
};

// The decomposition of f_k(x) f_l(x') into one summand per stuffle term,
// assembled by the same three-term recursion as the stuffle product: each
// appended component contributes a factor
//   (product of all previously placed variables) / (1 - product of all placed variables).
// Summands are ordered by their provenance words.
std::vector<CartierSummand> cartier_decompose(const Composition& k, const Composition& l);

// Left-hand side f_k(x_1..x_n) f_l(x_{n+1}..x_{n+m}) of the decomposition.
RationalFn cartier_lhs(const Composition& k, const Composition& l);

// Exact identity check: sum of the summands equals the product of the two
// integrands.
bool cartier_exact(const Composition& k, const Composition& l,
                   const std::vector<CartierSummand>& summands);

}  // namespace mzv
