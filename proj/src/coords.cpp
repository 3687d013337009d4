#include "mzv/coords.hpp"

#include <algorithm>
#include <stdexcept>

#include "mzv/cartier.hpp"
#include "mzv/ratfun.hpp"

namespace mzv {

RatVec simplicial_to_cubical(const RatVec& t) {
    const std::size_t n = t.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!(t[i] > 0 && t[i] < 1)) throw std::domain_error("simplex point not interior");
        if (i > 0 && !(t[i - 1] < t[i])) throw std::domain_error("simplex point not ordered");
    }
    RatVec x(n);
    if (n == 0) return x;
    x[0] = t[n - 1];
    for (std::size_t i = 1; i < n; ++i) x[i] = t[n - i - 1] / t[n - i];
    return x;
}

RatVec cubical_to_simplicial(const RatVec& x) {
    const std::size_t n = x.size();
    for (const Rat& v : x) {
        if (!(v > 0 && v < 1)) throw std::domain_error("cube point not interior");
    }
    RatVec t(n);
    Rat prefix(1);
    for (std::size_t i = 0; i < n; ++i) {
        prefix *= x[i];
        t[n - i - 1] = prefix;
    }
    return t;
}

SymbolicForm kontsevich_form(const Composition& k) {
    if (!k.admissible()) {
        throw std::invalid_argument("form requires an admissible tuple, got " + k.to_string());
    }
    BinaryWord w = composition_to_word(k);
    SymbolicForm form;
    form.eps.assign(w.rbegin(), w.rend());
    form.sign = k.depth() % 2 == 0 ? 1 : -1;
    return form;
}

PullbackResult pullback_check_impl(const Composition& k) {
    const int n = k.weight();
    // Under t_i = P_{n-i+1} with prefix products P_j = x_1...x_j, factor i of
    // the form becomes 1/P_{n-i+1} (eps 0) or -1/(1 - P_{n-i+1}) (eps 1);
    // together with the word indexing this pairs prefix P_j with letter j of
    // the (unreversed) word.  The Jacobian contributes P_1...P_{n-1}.
    BinaryWord w = composition_to_word(k);
    Monomial jacobian, prefix, zero_denoms;
    std::vector<Monomial> one_denoms;
    for (int j = 1; j <= n; ++j) {
        prefix = prefix * Monomial::var(j - 1);
        if (j < n) jacobian = jacobian * prefix;
        if (w[static_cast<std::size_t>(j - 1)] == 0) {
            zero_denoms = zero_denoms * prefix;
        } else {
            one_denoms.push_back(prefix);
        }
    }
    PullbackResult out;
    // sign: (-1)^p from the form, (-1)^p from the eps=1 factors, and the
    // anti-triangular Jacobian determinant sign (-1)^{n(n-1)/2}
    out.sign = (n * (n - 1) / 2) % 2 == 0 ? 1 : -1;
    if (!zero_denoms.divides(jacobian)) {
        out.equal = false;
        return out;
    }
    RationalFn pulled(Polynomial(jacobian / zero_denoms), one_denoms);
    std::vector<VarId> vars;
    for (int i = 0; i < n; ++i) vars.push_back(i);
    out.equal = rational_eq(pulled, build_f(k, vars));
    return out;
}

PullbackResult pullback_check(const Composition& k) {
    if (!k.admissible()) {
        throw std::invalid_argument("pullback requires an admissible tuple");
    }
    if (k.weight() > 8) throw std::range_error("pullback check guarded to weight <= 8");
    return pullback_check_impl(k);
}

MarkedPointConfig make_config(RatVec z) {
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z[i] == 0 || z[i] == 1) {
            throw std::invalid_argument("marked point collides with 0 or 1");
        }
        for (std::size_t j = i + 1; j < z.size(); ++j) {
            if (z[i] == z[j]) throw std::invalid_argument("marked points must be distinct");
        }
    }
    return MarkedPointConfig{std::move(z)};
}

std::pair<MarkedPointConfig, MarkedPointConfig> beta_map(const MarkedPointConfig& z, int n, int m) {
    if (z.size() != n + m) throw std::invalid_argument("configuration size mismatch");
    RatVec left(z.z.begin(), z.z.begin() + n);
    RatVec right(z.z.begin() + n, z.z.end());
    return {MarkedPointConfig{std::move(left)}, MarkedPointConfig{std::move(right)}};
}

std::pair<MarkedPointConfig, MarkedPointConfig> delta_map(const MarkedPointConfig& z, int n, int m) {
    if (z.size() != n + m) throw std::invalid_argument("configuration size mismatch");
    const Rat& pivot = z.z[static_cast<std::size_t>(m)];
    if (pivot == 0) throw std::domain_error("degenerate configuration: z_{m+1} = 0");
    RatVec left(z.z.begin() + m, z.z.end());
    RatVec right(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) right[static_cast<std::size_t>(j)] = z.z[static_cast<std::size_t>(j)] / pivot;
    return {MarkedPointConfig{std::move(left)}, MarkedPointConfig{std::move(right)}};
}

bool in_standard_cell(const MarkedPointConfig& z) {
    Rat prev(0);
    for (const Rat& v : z.z) {
        if (!(prev < v)) return false;
        prev = v;
    }
    return prev < 1;
}

RatVec config_cubical(const MarkedPointConfig& z) {
    if (!in_standard_cell(z)) {
        throw std::domain_error("configuration is outside the standard cell");
    }
    return simplicial_to_cubical(z.z);
}

ShufflePermutation cell_classify(const MarkedPointConfig& z, int n, int m) {
    if (z.size() != n + m) throw std::invalid_argument("configuration size mismatch");
    auto [left, right] = beta_map(z, n, m);
    if (!in_standard_cell(left) || !in_standard_cell(right)) {
        throw std::domain_error("image of the configuration is outside the product cell");
    }
    // merge order of the two increasing halves
    std::vector<std::uint8_t> pattern;
    pattern.reserve(static_cast<std::size_t>(n + m));
    std::size_t i = 0, j = 0;
    while (i < left.z.size() || j < right.z.size()) {
        if (j == right.z.size() || (i < left.z.size() && left.z[i] < right.z[j])) {
            pattern.push_back(0);
            ++i;
        } else if (i == left.z.size() || right.z[j] < left.z[i]) {
            pattern.push_back(1);
            ++j;
        } else {
            throw std::domain_error("tied marked points lie on a cell boundary");
        }
    }
    return ShufflePermutation(std::move(pattern), n, m);
}

}  // namespace mzv
