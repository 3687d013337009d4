#pragma once

#include <string>
#include <vector>

namespace mzv {

// Dense integer matrix, sized for arrangement bookkeeping (tens of rows).
class IntMat {
public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

    static IntMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    long long& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    long long at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    IntMat operator*(const IntMat& o) const;
    bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    std::vector<long long> row(int i) const;
    std::string to_string() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<long long> a_;
};

// U * M * V = diag(factors), U and V unimodular, factors non-negative with
// c_1 | c_2 | ... ; vinv is V^{-1} (its first rank rows form a basis of the
// saturation of the row lattice of M).
struct SmithResult {
    IntMat U, V, Vinv, D;
    std::vector<long long> factors;  // nonzero invariant factors
    int rank() const { return static_cast<int>(factors.size()); }
};

SmithResult smith_normal_form(const IntMat& M);

// Rank over the rationals, by fraction-free elimination.  Independent of the
// Smith reduction path.
int rank_rational(const IntMat& M);

// Determinant of a square matrix (Bareiss).
long long determinant(const IntMat& M);

// Row-style Hermite normal form of the row lattice: echelon rows with
// positive pivots and entries above each pivot reduced into [0, pivot).
// Returns only the nonzero rows; canonical for the lattice.
IntMat hermite_normal_form(const IntMat& M);

// Solve t * H = target over the integers for echelon H (as produced by
// hermite_normal_form).  Empty result means no integer solution.
bool hnf_solve(const IntMat& H, const std::vector<long long>& target, std::vector<long long>& t);

}  // namespace mzv
