#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "mzv/cartier.hpp"
#include "mzv/ratfun.hpp"

using namespace mzv;

namespace {

Composition C(std::initializer_list<int> parts) { return Composition(std::vector<int>(parts)); }

std::vector<VarId> vars_upto(int n, int offset = 0) {
    std::vector<VarId> v;
    for (int i = 0; i < n; ++i) v.push_back(offset + i);
    return v;
}

Monomial mono(std::initializer_list<VarId> vars) {
    return Monomial::product_of(std::vector<VarId>(vars));
}

// Independent expansion of f_k(x) f_l(x') by repeatedly applying the key
// identity to the largest pure-x and pure-x' denominator factors of each
// fraction, with no reuse of the provenance bookkeeping.
struct Fraction {
    Polynomial num;
    std::map<Monomial, int> den;
};

bool pure_in(const Monomial& m, int lo, int hi) {
    for (VarId v : m.support()) {
        if (v < lo || v >= hi) return false;
    }
    return true;
}

std::vector<Fraction> expand_by_key_identity(const Composition& k, const Composition& l) {
    const int n = k.weight();
    RationalFn lhs = cartier_lhs(k, l);
    Fraction start{lhs.numerator(), {lhs.denominator().begin(), lhs.denominator().end()}};
    std::vector<Fraction> work{start}, done;
    while (!work.empty()) {
        Fraction f = work.back();
        work.pop_back();
        Monomial alpha, beta;
        bool has_alpha = false, has_beta = false;
        for (const auto& [m, mult] : f.den) {
            if (pure_in(m, 0, n)) {
                if (!has_alpha || alpha.degree() < m.degree()) alpha = m;
                has_alpha = true;
            } else if (pure_in(m, n, n + l.weight())) {
                if (!has_beta || beta.degree() < m.degree()) beta = m;
                has_beta = true;
            }
        }
        if (!has_alpha || !has_beta) {
            done.push_back(std::move(f));
            continue;
        }
        Monomial ab = alpha * beta;
        auto base = f.den;
        auto drop = [&](const Monomial& m) {
            auto d = base;
            if (--d[m] == 0) d.erase(m);
            return d;
        };
        Fraction t1{f.num * Polynomial(alpha), drop(beta)};
        t1.den[ab]++;
        Fraction t2{f.num * Polynomial(beta), drop(alpha)};
        t2.den[ab]++;
        auto d3 = drop(alpha);
        if (--d3[beta] == 0) d3.erase(beta);
        d3[ab]++;
        Fraction t3{f.num, d3};
        work.push_back(std::move(t1));
        work.push_back(std::move(t2));
        work.push_back(std::move(t3));
    }
    return done;
}

std::multiset<std::string> fraction_keys(const std::vector<Fraction>& fs) {
    std::multiset<std::string> keys;
    for (const Fraction& f : fs) {
        std::string key = f.num.to_string() + " // ";
        for (const auto& [m, mult] : f.den) {
            for (int i = 0; i < mult; ++i) key += "(1-" + m.to_string() + ")";
        }
        keys.insert(key);
    }
    return keys;
}

std::multiset<std::string> summand_keys(const std::vector<CartierSummand>& ss) {
    std::multiset<std::string> keys;
    for (const CartierSummand& s : ss) {
        std::string key = s.fn.numerator().to_string() + " // ";
        for (const auto& [m, mult] : s.fn.denominator()) {
            for (int i = 0; i < mult; ++i) key += "(1-" + m.to_string() + ")";
        }
        keys.insert(key);
    }
    return keys;
}

}  // namespace

TEST_CASE("cube integrand construction") {
    RationalFn f2 = build_f(C({2}), vars_upto(2));
    CHECK(f2.numerator() == Polynomial::one());
    CHECK(f2.denominator().size() == 1);
    CHECK(f2.denominator().count(mono({0, 1})) == 1);

    RationalFn f22 = build_f(C({2, 2}), vars_upto(4));
    CHECK(f22.numerator() == Polynomial(mono({0, 1})));
    CHECK(f22.denominator().count(mono({0, 1})) == 1);
    CHECK(f22.denominator().count(mono({0, 1, 2, 3})) == 1);

    RationalFn f5 = build_f(C({5}), vars_upto(5));
    CHECK(f5.numerator() == Polynomial::one());
    CHECK(f5.denominator().count(mono({0, 1, 2, 3, 4})) == 1);

    CHECK_THROWS_AS(build_f(C({2}), vars_upto(3)), std::invalid_argument);
}

TEST_CASE("exact evaluation of integrands") {
    RationalFn f2 = build_f(C({2}), vars_upto(2));
    CHECK(f2.eval({Rat(1, 2), Rat(1, 2)}) == Rat(4, 3));
    CHECK_THROWS_AS(f2.eval({Rat(1), Rat(1)}), std::domain_error);

    RationalFn f22 = build_f(C({2, 2}), vars_upto(4));
    CHECK(f22.eval({Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)}) == Rat(16, 45));
}

TEST_CASE("key identity verifies for disjoint monomials") {
    CHECK(key_identity(mono({0, 1}), mono({2, 3})).verified);
    CHECK(key_identity(mono({0}), mono({1})).verified);
    CHECK(key_identity(mono({0, 1, 2}), mono({3})).verified);
    CHECK_THROWS_AS(key_identity(mono({0, 1}), mono({1, 2})), std::invalid_argument);
}

TEST_CASE("rational function equality and representation guards") {
    RationalFn f = build_f(C({2, 1}), vars_upto(3));
    CHECK(rational_eq(f, f));
    CHECK_THROWS_AS(RationalFn(Polynomial::one(), {Monomial::var(0, 2)}), std::invalid_argument);
    KeyIdentity ki = key_identity(mono({0}), mono({1}));
    CHECK(rational_eq(ki.lhs, ki.term_a + ki.term_b + ki.term_ab));
}

TEST_CASE("variable arrangements of stuffle terms") {
    Composition k2 = C({2}), l2 = C({2});
    // merged term (4): one group (x1,x2,x'1,x'2)
    VariableArrangement merged = arrangement_for({PartOrigin{0, 0}}, k2, l2);
    REQUIRE(merged.groups.size() == 1);
    CHECK(merged.groups[0] == std::vector<VarId>{0, 1, 2, 3});

    // (2,2) with k first
    VariableArrangement split = arrangement_for({PartOrigin{0, -1}, PartOrigin{-1, 0}}, k2, l2);
    REQUIRE(split.groups.size() == 2);
    CHECK(split.groups[0] == std::vector<VarId>{0, 1});
    CHECK(split.groups[1] == std::vector<VarId>{2, 3});

    // sigma = (2,4,1) from (2,1)*(4): (x1,x2 | x'1..x'4 | x3)
    Composition k21 = C({2, 1}), l4 = C({4});
    VariableArrangement a =
        arrangement_for({PartOrigin{0, -1}, PartOrigin{-1, 0}, PartOrigin{1, -1}}, k21, l4);
    REQUIRE(a.groups.size() == 3);
    CHECK(a.groups[0] == std::vector<VarId>{0, 1});
    CHECK(a.groups[1] == std::vector<VarId>{3, 4, 5, 6});
    CHECK(a.groups[2] == std::vector<VarId>{2});

    // provenance must consume parts in order
    CHECK_THROWS_AS(arrangement_for({PartOrigin{1, -1}, PartOrigin{0, -1}}, k21, l4),
                    std::invalid_argument);
}

TEST_CASE("decomposition of (2) x (2)") {
    auto summands = cartier_decompose(C({2}), C({2}));
    REQUIRE(summands.size() == 3);
    bool found_merged = false;
    for (const CartierSummand& s : summands) {
        if (s.sigma == C({4})) {
            found_merged = true;
            CHECK(s.fn.numerator() == Polynomial::one());
            CHECK(s.fn.denominator().count(mono({0, 1, 2, 3})) == 1);
            CHECK(s.fn.denominator().size() == 1);
        }
    }
    CHECK(found_merged);
    CHECK(cartier_exact(C({2}), C({2}), summands));
}

TEST_CASE("decomposition of (2,1) x (2,1) contains the inadmissible-form summand") {
    auto summands = cartier_decompose(C({2, 1}), C({2, 1}));
    CHECK(summands.size() == 13);
    // u1..u3 = x-vars 0..2, u4..u6 = x'-vars 3..5: look for numerator u1u2u4u5
    // with denominators (1-u1u2u4u5)(1-u1u2u3u4u5u6)
    bool found = false;
    for (const CartierSummand& s : summands) {
        if (s.fn.numerator() == Polynomial(mono({0, 1, 3, 4})) &&
            s.fn.denominator().count(mono({0, 1, 3, 4})) == 1 &&
            s.fn.denominator().count(mono({0, 1, 2, 3, 4, 5})) == 1 &&
            s.fn.denominator().size() == 2) {
            found = true;
            CHECK(s.sigma == C({4, 2}));
        }
    }
    CHECK(found);
    CHECK(cartier_exact(C({2, 1}), C({2, 1}), summands));
}

TEST_CASE("decomposition of (2) x (3) sums exactly to the product") {
    auto summands = cartier_decompose(C({2}), C({3}));
    CHECK(summands.size() == 3);
    RationalFn sum(Polynomial::zero());
    for (const auto& s : summands) sum = sum + s.fn;
    CHECK(rational_eq(sum, cartier_lhs(C({2}), C({3}))));
}

TEST_CASE("admissibility guard") {
    CHECK_THROWS_AS(cartier_decompose(C({1, 2}), C({2})), std::invalid_argument);
}

TEST_CASE("summands are the integrands of their own tuples") {
    for (const Composition& k : admissible_compositions(3)) {
        for (const Composition& l : admissible_compositions(4)) {
            for (const CartierSummand& s : cartier_decompose(k, l)) {
                RationalFn direct = build_f(s.sigma, s.arrangement.flatten());
                CHECK(s.fn.numerator() == direct.numerator());
                CHECK(s.fn.denominator() == direct.denominator());
            }
        }
    }
}

TEST_CASE("exactness for all admissible pairs of total weight <= 6") {
    for (int wk = 2; wk <= 4; ++wk) {
        for (int wl = wk; wk + wl <= 6; ++wl) {
            for (const Composition& k : admissible_compositions(wk)) {
                for (const Composition& l : admissible_compositions(wl)) {
                    CHECK(cartier_exact(k, l, cartier_decompose(k, l)));
                }
            }
        }
    }
}

TEST_CASE("denominators of every summand stay square-free monomial differences") {
    for (const CartierSummand& s : cartier_decompose(C({2, 1, 1}), C({2, 2}))) {
        for (const auto& [m, mult] : s.fn.denominator()) {
            CHECK(m.squarefree());
            CHECK(mult == 1);
        }
    }
}

TEST_CASE("randomized exact evaluation agreement") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(1, 1023);
    auto random_point = [&](int count) {
        std::vector<Rat> p;
        for (int i = 0; i < count; ++i) {
            Rat v(mpz_class(num(rng)), mpz_class(1024));
            v.canonicalize();
            p.push_back(v);
        }
        return p;
    };
    std::vector<std::pair<Composition, Composition>> cases = {
        {C({2}), C({2})}, {C({2, 1}), C({2})}, {C({2, 2}), C({3})}, {C({2, 1}), C({2, 1})}};
    for (const auto& [k, l] : cases) {
        auto summands = cartier_decompose(k, l);
        RationalFn lhs = cartier_lhs(k, l);
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<Rat> p = random_point(k.weight() + l.weight());
            Rat want = lhs.eval(p);
            Rat got(0);
            for (const auto& s : summands) got += s.fn.eval(p);
            CHECK(want == got);
        }
    }
}

TEST_CASE("decomposition equals repeated key-identity expansion up to weight 6") {
    for (int wk = 2; wk <= 4; ++wk) {
        for (int wl = 2; wk + wl <= 6; ++wl) {
            for (const Composition& k : admissible_compositions(wk)) {
                for (const Composition& l : admissible_compositions(wl)) {
                    auto oracle = expand_by_key_identity(k, l);
                    auto summands = cartier_decompose(k, l);
                    CHECK(oracle.size() == summands.size());
                    CHECK(fraction_keys(oracle) == summand_keys(summands));
                }
            }
        }
    }
}
