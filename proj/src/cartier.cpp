#include "mzv/cartier.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mzv {

RationalFn build_f(const Composition& k, const std::vector<VarId>& vars) {
    if (static_cast<int>(vars.size()) != k.weight()) {
        throw std::invalid_argument("build_f: expected " + std::to_string(k.weight()) +
                                    " variables, got " + std::to_string(vars.size()));
    }
    Polynomial num = Polynomial::one();
    std::vector<Monomial> den;
    Monomial prefix;
    std::size_t used = 0;
    for (int i = 0; i < k.depth(); ++i) {
        if (i > 0) num = num * Polynomial(prefix);
        for (int j = 0; j < k.parts()[static_cast<std::size_t>(i)]; ++j) {
            prefix = prefix * Monomial::var(vars[used++]);
        }
        den.push_back(prefix);
    }
    return RationalFn(std::move(num), den);
}

KeyIdentity key_identity(const Monomial& a, const Monomial& b) {
    std::set<VarId> sa;
    for (VarId v : a.support()) sa.insert(v);
    for (VarId v : b.support()) {
        if (sa.count(v)) {
            throw std::invalid_argument("key identity requires disjoint supports, shared " +
                                        var_name(v));
        }
    }
    Monomial ab = a * b;
    KeyIdentity out{
        RationalFn(Polynomial::one(), {a, b}),
        RationalFn(Polynomial(a), {a, ab}),
        RationalFn(Polynomial(b), {b, ab}),
        RationalFn(Polynomial::one(), {ab}),
        false,
    };
    out.verified = rational_eq(out.lhs, out.term_a + out.term_b + out.term_ab);
    return out;
}

std::vector<VarId> VariableArrangement::flatten() const {
    std::vector<VarId> out;
    for (const auto& g : groups) out.insert(out.end(), g.begin(), g.end());
    return out;
}

std::string VariableArrangement::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < groups.size(); ++i) {
        if (i) os << " | ";
        for (std::size_t j = 0; j < groups[i].size(); ++j) {
            if (j) os << ',';
            os << var_name(groups[i][j]);
        }
    }
    os << ')';
    return os.str();
}

namespace {

// Variables of k's i-th part: x_{w_{i-1}} .. x_{w_i - 1} (0-based ids).
std::vector<VarId> group_of_part(const Composition& c, int part_index, int offset) {
    int start = offset;
    for (int i = 0; i < part_index; ++i) start += c.parts()[static_cast<std::size_t>(i)];
    std::vector<VarId> g;
    for (int j = 0; j < c.parts()[static_cast<std::size_t>(part_index)]; ++j) {
        g.push_back(start + j);
    }
    return g;
}

}  // namespace

VariableArrangement arrangement_for(const ProvenanceWord& sigma,
                                    const Composition& k, const Composition& l) {
    // The provenance must use each part of k and of l exactly once, in order.
    int next_k = 0, next_l = 0;
    VariableArrangement arr;
    for (const PartOrigin& o : sigma) {
        std::vector<VarId> g;
        if (o.ki >= 0) {
            if (o.ki != next_k++) throw std::invalid_argument("provenance does not arise from k");
            auto gk = group_of_part(k, o.ki, 0);
            g.insert(g.end(), gk.begin(), gk.end());
        }
        if (o.lj >= 0) {
            if (o.lj != next_l++) throw std::invalid_argument("provenance does not arise from l");
            auto gl = group_of_part(l, o.lj, k.weight());
            g.insert(g.end(), gl.begin(), gl.end());
        }
        if (g.empty()) throw std::invalid_argument("empty provenance component");
        arr.groups.push_back(std::move(g));
    }
    if (next_k != k.depth() || next_l != l.depth()) {
        throw std::invalid_argument("provenance does not cover all parts of (k, l)");
    }
    return arr;
}

std::vector<CartierSummand> cartier_decompose(const Composition& k, const Composition& l) {
    if (!k.admissible() || !l.admissible()) {
        throw std::invalid_argument("cartier_decompose requires admissible tuples");
    }
    std::vector<CartierSummand> out;
    for (const auto& [prov, coeff] : stuffle_provenance(k, l)) {
        (void)coeff;  // provenance terms are distinct, coefficient is always 1
        CartierSummand s;
        s.provenance = prov;
        s.sigma = provenance_to_composition(prov, k, l);
        s.arrangement = arrangement_for(prov, k, l);
        // Assemble by the composition recursion: appending a component whose
        // group is g multiplies by (previously placed vars) / (1 - placed+g).
        Polynomial num = Polynomial::one();
        std::vector<Monomial> den;
        Monomial placed;
        bool first = true;
        for (const auto& g : s.arrangement.groups) {
            if (!first) num = num * Polynomial(placed);
            first = false;
            placed = placed * Monomial::product_of(g);
            den.push_back(placed);
        }
        s.fn = RationalFn(std::move(num), den);
        out.push_back(std::move(s));
    }
    return out;
}

RationalFn cartier_lhs(const Composition& k, const Composition& l) {
    std::vector<VarId> xs, xps;
    for (int i = 0; i < k.weight(); ++i) xs.push_back(i);
    for (int j = 0; j < l.weight(); ++j) xps.push_back(k.weight() + j);
    return build_f(k, xs) * build_f(l, xps);
}

bool cartier_exact(const Composition& k, const Composition& l,
                   const std::vector<CartierSummand>& summands) {
    if (summands.empty()) return false;
    RationalFn sum(Polynomial::zero());
    for (const CartierSummand& s : summands) sum = sum + s.fn;
    return rational_eq(cartier_lhs(k, l), sum);
}

}  // namespace mzv
