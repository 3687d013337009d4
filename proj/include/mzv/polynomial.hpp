#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "mzv/rational.hpp"

namespace mzv {

// Variables are small integer ids.  The canonical naming scheme for a pair of
// weight-n and weight-m tuples is x_1..x_n for the first group and
// x'_1..x'_m == x_{n+1}..x_{n+m} for the second.
using VarId = int;

std::string var_name(VarId v);  // "x1", "x2", ...

// Sparse monomial: sorted (variable, exponent > 0) pairs.  The empty list is
// the unit monomial.
class Monomial {
public:
    Monomial() = default;
    static Monomial var(VarId v, int exp = 1);
    static Monomial product_of(const std::vector<VarId>& vars);

    const std::vector<std::pair<VarId, int>>& factors() const { return f_; }
    bool is_unit() const { return f_.empty(); }
    int degree() const;
    int exponent(VarId v) const;
    bool squarefree() const;

    Monomial operator*(const Monomial& other) const;
    // Exact division; throws std::domain_error if any exponent would go negative.
    Monomial operator/(const Monomial& other) const;
    bool divides(const Monomial& other) const;  // this | other

    Rat eval(const std::vector<Rat>& point) const;  // point[v] = value of var v

    std::vector<VarId> support() const;
    std::string to_string() const;  // "x1^2*x3" or "1"

    auto operator<=>(const Monomial& other) const { return f_ <=> other.f_; }
    bool operator==(const Monomial& other) const { return f_ == other.f_; }

private:
    std::vector<std::pair<VarId, int>> f_;
};

// Sparse multivariate polynomial over the rationals.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rat& c);  // constant
    Polynomial(const Monomial& m);
    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial(Rat(1)); }

    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }
    const std::map<Monomial, Rat>& terms() const { return t_; }

    void add_term(const Monomial& m, const Rat& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);

    Polynomial operator*(const Rat& c) const;

    Rat eval(const std::vector<Rat>& point) const;

    // Elementary symmetric polynomial e_k of the given arguments, with
    // e_0 = 1 and e_k = 0 for k > #arguments.
    static Polynomial elementary_symmetric(int k, const std::vector<Polynomial>& args);

    std::string to_string() const;

    bool operator==(const Polynomial& o) const { return t_ == o.t_; }

private:
    std::map<Monomial, Rat> t_;
};

// 1 - M for a monomial M.
Polynomial one_minus(const Monomial& m);

}  // namespace mzv
