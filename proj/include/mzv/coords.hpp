#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mzv/rational.hpp"
#include "mzv/words.hpp"

namespace mzv {

using RatVec = std::vector<Rat>;

// Triangular change of variables between simplex and cube: with n variables,
//   t_n = x_1, t_{n-1} = x_1 x_2, ..., t_1 = x_1 ... x_n
// i.e. x_1 = t_n and x_i = t_{n-i+1} / t_{n-i+2}.

// Requires 0 < t_1 < ... < t_n < 1.
RatVec simplicial_to_cubical(const RatVec& t);

// Requires every x_i in (0,1); the output is strictly increasing in (0,1).
RatVec cubical_to_simplicial(const RatVec& x);

// The weight-n iterated-integral form of an admissible tuple: factor i is
// dt_i / (t_i - eps_i), the eps pattern read from the reversed word of k, and
// the global sign (-1)^p stored separately.
struct SymbolicForm {
    std::vector<std::uint8_t> eps;  // eps[i-1] for factor i
    int sign = 1;                   // (-1)^depth
    int weight() const { return static_cast<int>(eps.size()); }
};

SymbolicForm kontsevich_form(const Composition& k);

struct PullbackResult {
    bool equal = false;  // pullback equals the cube integrand as rational functions
    int sign = 1;        // global orientation sign of the change of variables
};

// Substitutes t_i = x_1...x_{n-i+1} into the form, multiplies by the
// triangular Jacobian, and compares exactly with the cube integrand of k (up
// to the reported sign).
PullbackResult pullback_check(const Composition& k);

// A point (0, z_1, ..., z_r, 1, infinity) of the genus-zero moduli space with
// rational marked points; 0, 1, infinity are implicit.
struct MarkedPointConfig {
    RatVec z;

    int size() const { return static_cast<int>(z.size()); }
};

// Checks pairwise distinctness and distinctness from 0 and 1.
MarkedPointConfig make_config(RatVec z);

// (0, z_1..z_n, 1, inf) x (0, z_{n+1}..z_{n+m}, 1, inf).
std::pair<MarkedPointConfig, MarkedPointConfig> beta_map(const MarkedPointConfig& z, int n, int m);

// (0, z_{m+1},...,z_{m+n}, 1, inf) x (0, z_1/z_{m+1},...,z_m/z_{m+1}, 1, inf);
// the right factor is renormalized to its standard representative.  Requires
// z_{m+1} != 0.
std::pair<MarkedPointConfig, MarkedPointConfig> delta_map(const MarkedPointConfig& z, int n, int m);

// True when the marked points satisfy 0 < z_1 < ... < z_r < 1 (the standard
// cell of the real moduli space).
bool in_standard_cell(const MarkedPointConfig& z);

// Cubical coordinates of a configuration in the standard cell.
RatVec config_cubical(const MarkedPointConfig& z);

// The shuffle cell containing z: both halves must be internally ordered, and
// the interleaving of all z_i induces the permutation.  Ties are a boundary
// configuration and rejected.
ShufflePermutation cell_classify(const MarkedPointConfig& z, int n, int m);

}  // namespace mzv
