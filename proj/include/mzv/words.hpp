#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "mzv/formal_sum.hpp"

namespace mzv {

// Index tuple (k_1,...,k_p) of positive integers.  The empty tuple is a legal
// value (it is the base case of the product recursions) but is rejected by
// make_composition and by the relation constructors.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int depth() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // Convergent index tuple: first entry at least 2.
    bool admissible() const { return !parts_.empty() && parts_.front() >= 2; }

    std::string to_string() const;  // "(2,1)"

    auto operator<=>(const Composition& other) const { return parts_ <=> other.parts_; }
    bool operator==(const Composition& other) const { return parts_ == other.parts_; }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// Factory matching the public contract: rejects the empty tuple.
Composition make_composition(const std::vector<int>& parts);

// Word over {0,1}.  The word of an admissible composition starts with 0 and
// ends with 1.
using BinaryWord = std::vector<std::uint8_t>;

std::string word_to_string(const BinaryWord& w);  // "(0,1,1)"

// Block encoding: for each part k_i, k_i-1 zeros then a single 1, blocks in
// part order.  Defined for any composition; admissibility is not required.
BinaryWord composition_to_word(const Composition& c);

// Inverse of composition_to_word; requires a non-empty word ending in 1.
Composition word_to_composition(const BinaryWord& w);

// Recursive interleaving product on words:
//   (e1.E) sh (f1.F) = e1.(E sh (f1.F)) + f1.((e1.E) sh F),  E sh () = E.
// Total coefficient mass is binomial(|u|+|v|, |u|).
FormalSum<BinaryWord> shuffle(const BinaryWord& u, const BinaryWord& v);

// Quasi-shuffle product on index tuples, built by the three-term recursion
//   k*l = (k*(l1..l_{q-1})).l_q + ((k1..k_{p-1})*l).k_p
//         + ((k1..k_{p-1})*(l1..l_{q-1})).(k_p+l_q)
// with k*() = ()*k = k; components are appended at the END of tuples, so the
// leading entries of k and l survive into every term.  Total mass is the
// Delannoy number D(depth k, depth l).
FormalSum<Composition> stuffle(const Composition& k, const Composition& l);

// Origin of one component of a stuffle term: an index into k's parts, an
// index into l's parts, or both when the component is a merged sum.
struct PartOrigin {
    int ki = -1;  // 0-based index into k.parts(), or -1
    int lj = -1;  // 0-based index into l.parts(), or -1

    bool merged() const { return ki >= 0 && lj >= 0; }
    auto operator<=>(const PartOrigin&) const = default;
};

using ProvenanceWord = std::vector<PartOrigin>;

// Same recursion as stuffle but each term keeps the per-component origin.
// Provenance-tagged terms are pairwise distinct, so every coefficient is 1
// and the number of terms equals the Delannoy mass.
FormalSum<ProvenanceWord> stuffle_provenance(const Composition& k, const Composition& l);

// Forget the provenance tags of one term.
Composition provenance_to_composition(const ProvenanceWord& w,
                                      const Composition& k, const Composition& l);

// Permutation of {1..n+m} increasing on {1..n} and on {n+1..n+m}, stored as
// the interleaving pattern: pattern[t] = 0 if slot t is taken by the first
// block, 1 if by the second.
class ShufflePermutation {
public:
    ShufflePermutation(std::vector<std::uint8_t> pattern, int n, int m);

    const std::vector<std::uint8_t>& pattern() const { return pattern_; }
    int n() const { return n_; }
    int m() const { return m_; }

    // sigma(i) for i in 1..n+m (1-based, per the increasing-block convention).
    int sigma(int i) const;

    auto operator<=>(const ShufflePermutation& other) const {
        return pattern_ <=> other.pattern_;
    }
    bool operator==(const ShufflePermutation& other) const {
        return pattern_ == other.pattern_;
    }

private:
    std::vector<std::uint8_t> pattern_;
    int n_ = 0, m_ = 0;
};

enum class ProductKind { Stuffle, Shuffle };

const char* product_kind_name(ProductKind k);

// One double-shuffle relation: zeta(k) zeta(l) = sum of coeff * zeta(term).
struct Relation {
    ProductKind kind;
    Composition k, l;
    FormalSum<Composition> rhs;
};

// Both require admissible inputs; the shuffle variant converts every word of
// shuffle(word k, word l) back to a composition.
Relation stuffle_relation(const Composition& k, const Composition& l);
Relation shuffle_relation(const Composition& k, const Composition& l);

// All admissible compositions of the given weight, in lexicographic order.
std::vector<Composition> admissible_compositions(int weight);

// Delannoy number via the standard recursion; used as the stuffle mass law.
long long delannoy(int p, int q);

long long binomial(int n, int k);

}  // namespace mzv
