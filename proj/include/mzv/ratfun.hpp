#pragma once

#include <map>
#include <string>
#include <vector>

#include "mzv/polynomial.hpp"

namespace mzv {

// Rational function with a sparse numerator and a denominator kept as a
// multiset of factors 1 - M, each M a non-trivial square-free monomial.  The
// denominator is never expanded; equality is decided by clearing the union
// denominator and comparing numerators.
class RationalFn {
public:
    // Multiset of denominator factors, keyed by the monomial M of 1 - M.
    using DenFactors = std::map<Monomial, int>;

    RationalFn() : num_(Polynomial::one()) {}
    explicit RationalFn(Polynomial num) : num_(std::move(num)) {}
    RationalFn(Polynomial num, const std::vector<Monomial>& den_factors);

    static RationalFn one() { return RationalFn(); }

    const Polynomial& numerator() const { return num_; }
    const DenFactors& denominator() const { return den_; }

    RationalFn operator*(const RationalFn& o) const;
    RationalFn operator+(const RationalFn& o) const;

    bool is_zero() const { return num_.is_zero(); }

    // Expanded denominator polynomial (product of the stored factors).
    Polynomial denominator_polynomial() const;

    // Exact evaluation; throws std::domain_error when a denominator factor
    // vanishes at the point.
    Rat eval(const std::vector<Rat>& point) const;

    std::string to_string() const;

    bool operator==(const RationalFn& o) const { return rational_eq(*this, o); }

    // f == g as rational functions: cross-multiply over the union denominator
    // and compare normalized polynomials.
    friend bool rational_eq(const RationalFn& f, const RationalFn& g);

private:
    static void check_factor(const Monomial& m);

    Polynomial num_;
    DenFactors den_;
};

bool rational_eq(const RationalFn& f, const RationalFn& g);

}  // namespace mzv
