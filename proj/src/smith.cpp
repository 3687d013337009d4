#include "mzv/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mzv {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    IntMat out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            long long v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) out.at(i, j) += v * o.at(k, j);
        }
    }
    return out;
}

std::vector<long long> IntMat::row(int i) const {
    std::vector<long long> r(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j) r[static_cast<std::size_t>(j)] = at(i, j);
    return r;
}

std::string IntMat::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
    }
    os << "]";
    return os.str();
}

namespace {

struct SnfState {
    IntMat D, U, V, Vinv;

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < D.cols(); ++j) std::swap(D.at(a, j), D.at(b, j));
        for (int j = 0; j < U.cols(); ++j) std::swap(U.at(a, j), U.at(b, j));
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < D.rows(); ++i) std::swap(D.at(i, a), D.at(i, b));
        for (int i = 0; i < V.rows(); ++i) std::swap(V.at(i, a), V.at(i, b));
        // inverse of a swap is the same swap, applied to rows of V^{-1}
        for (int j = 0; j < Vinv.cols(); ++j) std::swap(Vinv.at(a, j), Vinv.at(b, j));
    }
    // row a -= q * row b
    void row_sub(int a, int b, long long q) {
        if (q == 0) return;
        for (int j = 0; j < D.cols(); ++j) D.at(a, j) -= q * D.at(b, j);
        for (int j = 0; j < U.cols(); ++j) U.at(a, j) -= q * U.at(b, j);
    }
    // col a -= q * col b
    void col_sub(int a, int b, long long q) {
        if (q == 0) return;
        for (int i = 0; i < D.rows(); ++i) D.at(i, a) -= q * D.at(i, b);
        for (int i = 0; i < V.rows(); ++i) V.at(i, a) -= q * V.at(i, b);
        // (I + qE_{ba})^{-1} = I - qE_{ba}: row b of V^{-1} gains q * row a
        for (int j = 0; j < Vinv.cols(); ++j) Vinv.at(b, j) += q * Vinv.at(a, j);
    }
    void negate_row(int a) {
        for (int j = 0; j < D.cols(); ++j) D.at(a, j) = -D.at(a, j);
        for (int j = 0; j < U.cols(); ++j) U.at(a, j) = -U.at(a, j);
    }
};

}  // namespace

SmithResult smith_normal_form(const IntMat& M) {
    const int rows = M.rows(), cols = M.cols();
    SnfState s{M, IntMat::identity(rows), IntMat::identity(cols), IntMat::identity(cols)};

    const int nmin = std::min(rows, cols);
    int t = 0;
    while (t < nmin) {
        // locate the minimal nonzero entry of the trailing block
        int pi = -1, pj = -1;
        long long best = 0;
        for (int i = t; i < rows; ++i) {
            for (int j = t; j < cols; ++j) {
                long long v = std::llabs(s.D.at(i, j));
                if (v != 0 && (pi < 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        }
        if (pi < 0) break;  // trailing block is zero
        s.swap_rows(t, pi);
        s.swap_cols(t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = t + 1; i < rows; ++i) {
                if (s.D.at(i, t) == 0) continue;
                long long q = s.D.at(i, t) / s.D.at(t, t);
                s.row_sub(i, t, q);
                if (s.D.at(i, t) != 0) {
                    // remainder became the smaller pivot
                    s.swap_rows(t, i);
                    dirty = true;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (s.D.at(t, j) == 0) continue;
                long long q = s.D.at(t, j) / s.D.at(t, t);
                s.col_sub(j, t, q);
                if (s.D.at(t, j) != 0) {
                    s.swap_cols(t, j);
                    dirty = true;
                }
            }
        }
        if (s.D.at(t, t) < 0) s.negate_row(t);

        // divisibility fix-up: the pivot must divide the trailing block
        bool redo = false;
        for (int i = t + 1; i < rows && !redo; ++i) {
            for (int j = t + 1; j < cols && !redo; ++j) {
                if (s.D.at(i, j) % s.D.at(t, t) != 0) {
                    // fold column j into column t and re-reduce at t
                    s.col_sub(t, j, -1);
                    redo = true;
                }
            }
        }
        if (!redo) ++t;
    }

    SmithResult out;
    out.D = s.D;
    out.U = s.U;
    out.V = s.V;
    out.Vinv = s.Vinv;
    for (int i = 0; i < nmin; ++i) {
        if (s.D.at(i, i) != 0) out.factors.push_back(s.D.at(i, i));
    }
    return out;
}

namespace {

// Fraction-free (Bareiss) elimination; returns rank, and the determinant for
// square input via the final pivot.
int bareiss(IntMat m, long long* det_out) {
    const int rows = m.rows(), cols = m.cols();
    long long prev = 1;
    int rank = 0;
    int sign = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i) {
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
            sign = -sign;
        }
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                m.at(i, j) = (m.at(rank, col) * m.at(i, j) - m.at(i, col) * m.at(rank, j)) / prev;
            }
            m.at(i, col) = 0;
        }
        prev = m.at(rank, col);
        ++rank;
    }
    if (det_out) {
        if (rows != cols) throw std::invalid_argument("determinant of non-square matrix");
        *det_out = rank < rows ? 0 : sign * prev;
    }
    return rank;
}

}  // namespace

int rank_rational(const IntMat& M) {
    return bareiss(M, nullptr);
}

long long determinant(const IntMat& M) {
    long long det = 0;
    bareiss(M, &det);
    return det;
}

IntMat hermite_normal_form(const IntMat& M) {
    IntMat m = M;
    const int rows = m.rows(), cols = m.cols();
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        // gcd out the column below r with row operations
        for (;;) {
            int pivot = -1;
            long long best = 0;
            for (int i = r; i < rows; ++i) {
                long long v = std::llabs(m.at(i, col));
                if (v != 0 && (pivot < 0 || v < best)) {
                    best = v;
                    pivot = i;
                }
            }
            if (pivot < 0) break;
            if (pivot != r) {
                for (int j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
            }
            bool any = false;
            for (int i = r + 1; i < rows; ++i) {
                if (m.at(i, col) == 0) continue;
                long long q = m.at(i, col) / m.at(r, col);
                for (int j = 0; j < cols; ++j) m.at(i, j) -= q * m.at(r, j);
                if (m.at(i, col) != 0) any = true;
            }
            if (!any) break;
        }
        if (m.at(r, col) == 0) continue;
        if (m.at(r, col) < 0) {
            for (int j = 0; j < cols; ++j) m.at(r, j) = -m.at(r, j);
        }
        // reduce the entries above the pivot into [0, pivot)
        for (int i = 0; i < r; ++i) {
            long long q = m.at(i, col) / m.at(r, col);
            if (m.at(i, col) % m.at(r, col) < 0) q -= 1;
            if (q != 0) {
                for (int j = 0; j < cols; ++j) m.at(i, j) -= q * m.at(r, j);
            }
        }
        ++r;
    }
    IntMat out(r, cols);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < cols; ++j) out.at(i, j) = m.at(i, j);
    }
    return out;
}

bool hnf_solve(const IntMat& H, const std::vector<long long>& target, std::vector<long long>& t) {
    if (static_cast<int>(target.size()) != H.cols()) {
        throw std::invalid_argument("target length mismatch");
    }
    std::vector<long long> rem = target;
    t.assign(static_cast<std::size_t>(H.rows()), 0);
    for (int i = 0; i < H.rows(); ++i) {
        int pc = -1;
        for (int j = 0; j < H.cols(); ++j) {
            if (H.at(i, j) != 0) {
                pc = j;
                break;
            }
        }
        if (pc < 0) continue;
        long long num = rem[static_cast<std::size_t>(pc)];
        long long den = H.at(i, pc);
        if (num % den != 0) return false;
        long long c = num / den;
        t[static_cast<std::size_t>(i)] = c;
        if (c != 0) {
            for (int j = 0; j < H.cols(); ++j) rem[static_cast<std::size_t>(j)] -= c * H.at(i, j);
        }
    }
    return std::all_of(rem.begin(), rem.end(), [](long long v) { return v == 0; });
}

}  // namespace mzv
