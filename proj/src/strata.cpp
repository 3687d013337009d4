#include "mzv/strata.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mzv/rational.hpp"

namespace mzv {

namespace {

void check_subset(const std::vector<int>& I, int n) {
    if (I.empty()) throw std::invalid_argument("empty coordinate subset");
    for (int i : I) {
        if (i < 1 || i > n) throw std::invalid_argument("coordinate index out of range");
    }
    for (std::size_t a = 1; a < I.size(); ++a) {
        if (I[a] <= I[a - 1]) throw std::invalid_argument("subset indices must be strictly increasing");
    }
}

std::vector<int> sorted_subset(std::vector<int> I) {
    std::sort(I.begin(), I.end());
    I.erase(std::unique(I.begin(), I.end()), I.end());
    return I;
}

std::string subset_str(const std::vector<int>& I) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < I.size(); ++i) os << (i ? "," : "") << I[i];
    os << '}';
    return os.str();
}

}  // namespace

DivisorLabel DivisorLabel::A(std::vector<int> I, int n) {
    I = sorted_subset(std::move(I));
    check_subset(I, n);
    return DivisorLabel{Kind::A, std::move(I), n};
}

DivisorLabel DivisorLabel::B0(int i, int n) {
    check_subset({i}, n);
    return DivisorLabel{Kind::B0, {i}, n};
}

DivisorLabel DivisorLabel::B1(int i, int n) {
    check_subset({i}, n);
    return DivisorLabel{Kind::B1, {i}, n};
}

bool DivisorLabel::same_divisor(const DivisorLabel& o) const {
    if (n != o.n) return false;
    auto hyperplane_one = [](const DivisorLabel& d) {
        return d.kind == Kind::B1 || (d.kind == Kind::A && d.I.size() == 1);
    };
    if (kind == o.kind) return I == o.I;
    if (kind == Kind::B0 || o.kind == Kind::B0) return false;
    return hyperplane_one(*this) && hyperplane_one(o) && I == o.I;
}

std::string DivisorLabel::to_string() const {
    switch (kind) {
        case Kind::A: return "A" + subset_str(I);
        case Kind::B0: return "B0" + subset_str(I);
        case Kind::B1: return "B1" + subset_str(I);
    }
    return "?";
}

IntMat char_matrix(const std::vector<std::vector<int>>& Is, int n) {
    if (Is.empty()) throw std::invalid_argument("no subsets given");
    IntMat m(static_cast<int>(Is.size()), n);
    for (std::size_t i = 0; i < Is.size(); ++i) {
        check_subset(Is[i], n);
        for (int j : Is[i]) m.at(static_cast<int>(i), j - 1) = 1;
    }
    return m;
}

IntersectionClass intersection_type(const std::vector<std::vector<int>>& Is, int n) {
    IntMat m = char_matrix(Is, n);
    std::set<int> uni;
    for (const auto& I : Is) uni.insert(I.begin(), I.end());
    SmithResult snf = smith_normal_form(m);
    IntersectionClass out;
    out.s = n - static_cast<int>(uni.size());
    out.r = snf.rank();
    out.torus_rank = n - out.s - out.r;
    out.invariant_factors = snf.factors;
    out.component_count_closure = 1;
    for (long long c : snf.factors) out.component_count_closure *= c;
    return out;
}

bool clean_intersection_check(const std::vector<std::vector<int>>& Is, int n) {
    for (std::size_t a = 0; a < Is.size(); ++a) {
        for (std::size_t b = a + 1; b < Is.size(); ++b) {
            if (Is[a] == Is[b]) {
                throw std::invalid_argument("duplicate subset " + subset_str(Is[a]) +
                                            "; distinct subsets required");
            }
        }
    }
    IntMat m = char_matrix(Is, n);
    return rank_rational(m) == intersection_type(Is, n).r;
}

TateCertificate tate_certificate(const std::vector<std::vector<int>>& Is, int n) {
    TateCertificate out;
    out.M = char_matrix(Is, n);
    out.cls = intersection_type(Is, n);
    SmithResult snf = smith_normal_form(out.M);
    out.U = snf.U;
    out.V = snf.V;
    out.D = snf.D;
    out.valid = (snf.U * out.M * snf.V == snf.D);
    std::ostringstream os;
    os << "A^" << out.cls.s << " x Gm^" << out.cls.torus_rank;
    if (out.cls.component_count_closure > 1) {
        os << " x {" << out.cls.component_count_closure << " components}";
    }
    out.model = os.str();
    return out;
}

// ---------------------------------------------------------------------------
// Stratum poset

namespace {

// Character values live in Q/Z as reduced fractions in [0,1).
std::pair<long long, long long> frac_mod1(long long num, long long den) {
    if (den <= 0) throw std::logic_error("nonpositive denominator");
    num %= den;
    if (num < 0) num += den;
    long long g = std::gcd(num, den);
    if (g == 0) g = 1;
    return {num / g, den / g};
}

std::pair<long long, long long> frac_add(std::pair<long long, long long> a,
                                         std::pair<long long, long long> b) {
    long long den = a.second / std::gcd(a.second, b.second) * b.second;
    long long num = a.first * (den / a.second) + b.first * (den / b.second);
    return frac_mod1(num, den);
}

std::pair<long long, long long> frac_scale(std::pair<long long, long long> a, long long t) {
    return frac_mod1(a.first * t, a.second);
}

std::vector<long long> node_key(const StratumNode& node) {
    std::vector<long long> key;
    key.push_back(node.lattice.rows());
    for (int i = 0; i < node.lattice.rows(); ++i) {
        for (int j = 0; j < node.lattice.cols(); ++j) key.push_back(node.lattice.at(i, j));
    }
    for (const auto& [num, den] : node.character) {
        key.push_back(num);
        key.push_back(den);
    }
    return key;
}

std::string character_suffix(const std::pair<long long, long long>& q) {
    if (q.first == 0) return "1";
    if (q.second == 2) return "-1";
    return "e(" + std::to_string(q.first) + "/" + std::to_string(q.second) + ")";
}

std::string node_label(const StratumNode& node) {
    std::ostringstream os;
    for (int i = 0; i < node.lattice.rows(); ++i) {
        if (i) os << ", ";
        bool first = true;
        for (int j = 0; j < node.lattice.cols(); ++j) {
            long long e = node.lattice.at(i, j);
            if (e == 0) continue;
            if (!first) os << "*";
            first = false;
            os << "x" << (j + 1);
            if (e != 1) os << "^" << e;
        }
        os << "=" << character_suffix(node.character[static_cast<std::size_t>(i)]);
    }
    return os.str();
}

// All components of the intersection cut out by the given family: the
// saturated lattice basis (HNF) plus every character of the torsion quotient,
// expressed on the HNF basis.
std::vector<StratumNode> components_of_family(const std::vector<std::vector<int>>& family, int n) {
    IntMat m = char_matrix(family, n);
    SmithResult snf = smith_normal_form(m);
    const int r = snf.rank();

    IntMat sat_rows(r, n);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < n; ++j) sat_rows.at(i, j) = snf.Vinv.at(i, j);
    }
    IntMat H = hermite_normal_form(sat_rows);
    if (H.rows() != r) throw std::logic_error("saturation basis rank mismatch");

    // coordinates of each HNF row in the Vinv-row basis: t = h * V
    std::vector<std::vector<long long>> coords(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        std::vector<long long> t(static_cast<std::size_t>(n), 0);
        for (int j = 0; j < n; ++j) {
            long long acc = 0;
            for (int c = 0; c < n; ++c) acc += H.at(i, c) * snf.V.at(c, j);
            t[static_cast<std::size_t>(j)] = acc;
        }
        for (int j = r; j < n; ++j) {
            if (t[static_cast<std::size_t>(j)] != 0) throw std::logic_error("row outside saturation");
        }
        t.resize(static_cast<std::size_t>(r));
        coords[static_cast<std::size_t>(i)] = std::move(t);
    }

    std::vector<StratumNode> out;
    std::vector<long long> a(static_cast<std::size_t>(r), 0);
    for (;;) {
        StratumNode node;
        node.lattice = H;
        node.dim = n - r;
        node.family = family;
        for (int i = 0; i < r; ++i) {
            std::pair<long long, long long> q{0, 1};
            for (int j = 0; j < r; ++j) {
                q = frac_add(q, frac_scale({a[static_cast<std::size_t>(j)],
                                            snf.factors[static_cast<std::size_t>(j)]},
                                           coords[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
            }
            node.character.push_back(q);
        }
        node.label = node_label(node);
        out.push_back(std::move(node));

        // next character tuple
        int pos = r - 1;
        while (pos >= 0) {
            if (++a[static_cast<std::size_t>(pos)] < snf.factors[static_cast<std::size_t>(pos)]) break;
            a[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

// Character of node `a` evaluated at an integer vector that must lie in a's
// saturated lattice; empty result if it does not.
std::optional<std::pair<long long, long long>> node_character_at(const StratumNode& a,
                                                                 const std::vector<long long>& h) {
    std::vector<long long> t;
    if (!hnf_solve(a.lattice, h, t)) return std::nullopt;
    std::pair<long long, long long> q{0, 1};
    for (std::size_t i = 0; i < t.size(); ++i) {
        q = frac_add(q, frac_scale(a.character[i], t[i]));
    }
    return q;
}

// variety(a) contained in variety(b): b's lattice lies in a's with matching
// character values.
bool variety_leq(const StratumNode& a, const StratumNode& b) {
    for (int i = 0; i < b.lattice.rows(); ++i) {
        auto q = node_character_at(a, b.lattice.row(i));
        if (!q || *q != b.character[static_cast<std::size_t>(i)]) return false;
    }
    return true;
}

}  // namespace

StratumPoset build_poset(int n) {
    if (n < 2 || n > 4) {
        throw std::range_error("poset enumeration guarded to 2 <= n <= 4");
    }
    // all nonempty subsets of {1..n}
    std::vector<std::vector<int>> divisors;
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> I;
        for (int i = 0; i < n; ++i) {
            if (mask & (1 << i)) I.push_back(i + 1);
        }
        divisors.push_back(std::move(I));
    }

    std::map<std::vector<long long>, std::size_t> seen;
    StratumPoset poset;
    poset.n = n;
    const int d = static_cast<int>(divisors.size());
    for (long long fam_mask = 1; fam_mask < (1LL << d); ++fam_mask) {
        std::vector<std::vector<int>> family;
        for (int i = 0; i < d; ++i) {
            if (fam_mask & (1LL << i)) family.push_back(divisors[static_cast<std::size_t>(i)]);
        }
        for (StratumNode& node : components_of_family(family, n)) {
            auto key = node_key(node);
            auto it = seen.find(key);
            if (it == seen.end()) {
                seen.emplace(std::move(key), poset.nodes.size());
                poset.nodes.push_back(std::move(node));
            }
        }
    }
    // deterministic order by canonical key
    std::vector<std::size_t> order(poset.nodes.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return node_key(poset.nodes[x]) < node_key(poset.nodes[y]);
    });
    std::vector<StratumNode> sorted;
    sorted.reserve(poset.nodes.size());
    for (std::size_t i : order) sorted.push_back(std::move(poset.nodes[i]));
    poset.nodes = std::move(sorted);

    const std::size_t N = poset.nodes.size();
    poset.lt.assign(N, std::vector<bool>(N, false));
    for (std::size_t a = 0; a < N; ++a) {
        for (std::size_t b = 0; b < N; ++b) {
            if (a == b) continue;
            poset.lt[a][b] = variety_leq(poset.nodes[a], poset.nodes[b]) &&
                             !(poset.nodes[a].lattice == poset.nodes[b].lattice);
        }
    }
    // longest-chain rank
    std::vector<int> rank(N, -1);
    std::function<int(std::size_t)> rank_of = [&](std::size_t v) -> int {
        if (rank[v] >= 0) return rank[v];
        int r = 0;
        for (std::size_t u = 0; u < N; ++u) {
            if (poset.lt[u][v]) r = std::max(r, rank_of(u) + 1);
        }
        return rank[v] = r;
    };
    for (std::size_t v = 0; v < N; ++v) poset.nodes[v].rank = rank_of(v);

    // blow-up preconditions
    poset.smooth_ok = true;  // every component is a torus coset times affine space
    poset.clean_ok = true;
    poset.closure_ok = true;
    for (std::size_t a = 0; a < N && poset.clean_ok; ++a) {
        for (std::size_t b = a + 1; b < N && poset.clean_ok; ++b) {
            std::vector<std::vector<int>> joint = poset.nodes[a].family;
            for (const auto& I : poset.nodes[b].family) {
                if (std::find(joint.begin(), joint.end(), I) == joint.end()) joint.push_back(I);
            }
            IntMat m = char_matrix(joint, n);
            if (rank_rational(m) != smith_normal_form(m).rank()) poset.clean_ok = false;
            for (const StratumNode& c : components_of_family(joint, n)) {
                if (!seen.count(node_key(c))) poset.closure_ok = false;
            }
        }
    }
    return poset;
}

std::vector<std::vector<int>> blowup_schedule(const StratumPoset& poset) {
    int max_rank = 0;
    for (const StratumNode& node : poset.nodes) max_rank = std::max(max_rank, node.rank);
    std::vector<std::vector<int>> levels(static_cast<std::size_t>(max_rank) + 1);
    for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
        levels[static_cast<std::size_t>(poset.nodes[i].rank)].push_back(static_cast<int>(i));
    }
    // sanity: a level never contains comparable strata
    for (const auto& level : levels) {
        for (std::size_t x = 0; x < level.size(); ++x) {
            for (std::size_t y = x + 1; y < level.size(); ++y) {
                if (poset.lt[static_cast<std::size_t>(level[x])][static_cast<std::size_t>(level[y])] ||
                    poset.lt[static_cast<std::size_t>(level[y])][static_cast<std::size_t>(level[x])]) {
                    throw std::logic_error("comparable strata share a rank level");
                }
            }
        }
    }
    return levels;
}

FlagSchedule flag_partition(const StratumPoset& poset) {
    std::vector<int> order(poset.nodes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return poset.nodes[static_cast<std::size_t>(x)].rank <
               poset.nodes[static_cast<std::size_t>(y)].rank;
    });
    FlagSchedule fs;
    for (int v : order) fs.flags.push_back({v});
    return fs;
}

bool validate_flag_schedule(int node_count, const std::vector<std::vector<bool>>& lt,
                            const FlagSchedule& fs) {
    std::vector<int> flag_of(static_cast<std::size_t>(node_count), -1);
    int covered = 0;
    for (std::size_t f = 0; f < fs.flags.size(); ++f) {
        const auto& chain = fs.flags[f];
        if (chain.empty()) return false;
        for (std::size_t i = 0; i < chain.size(); ++i) {
            int v = chain[i];
            if (v < 0 || v >= node_count) return false;
            if (flag_of[static_cast<std::size_t>(v)] != -1) return false;  // partition violated
            flag_of[static_cast<std::size_t>(v)] = static_cast<int>(f);
            ++covered;
            if (i > 0 && !lt[static_cast<std::size_t>(chain[i - 1])][static_cast<std::size_t>(v)]) {
                return false;  // not strictly increasing
            }
        }
    }
    if (covered != node_count) return false;
    for (int v = 0; v < node_count; ++v) {
        for (int u = 0; u < node_count; ++u) {
            if (lt[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] &&
                flag_of[static_cast<std::size_t>(u)] > flag_of[static_cast<std::size_t>(v)]) {
                return false;  // predecessor scheduled later
            }
        }
    }
    return true;
}

bool validate_flag_schedule(const StratumPoset& poset, const FlagSchedule& fs) {
    return validate_flag_schedule(static_cast<int>(poset.nodes.size()), poset.lt, fs);
}

IntervalPoset interval_poset(int n) {
    if (n < 1) throw std::invalid_argument("interval poset needs n >= 1");
    IntervalPoset p;
    p.n = n;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) p.intervals.emplace_back(i, j);
    }
    const std::size_t N = p.intervals.size();
    p.lt.assign(N, std::vector<bool>(N, false));
    for (std::size_t a = 0; a < N; ++a) {
        for (std::size_t b = 0; b < N; ++b) {
            if (a == b) continue;
            // variety of a strictly inside variety of b <=> interval a strictly contains b
            p.lt[a][b] = p.intervals[a].first <= p.intervals[b].first &&
                         p.intervals[b].second <= p.intervals[a].second;
        }
    }
    return p;
}

int interval_node_index(const IntervalPoset& p, int i, int j) {
    for (std::size_t idx = 0; idx < p.intervals.size(); ++idx) {
        if (p.intervals[idx] == std::make_pair(i, j)) return static_cast<int>(idx);
    }
    throw std::invalid_argument("no such interval");
}

FlagSchedule interval_flag_family(const IntervalPoset& p) {
    FlagSchedule fs;
    for (int i = 1; i <= p.n; ++i) {
        std::vector<int> chain;
        for (int j = p.n; j >= i; --j) chain.push_back(interval_node_index(p, i, j));
        fs.flags.push_back(std::move(chain));
    }
    return fs;
}

bool sigma_identity_check(int p) {
    if (p < 1 || p > 6) throw std::range_error("sigma identity check guarded to 1 <= p <= 6");
    // variables: 0 = lambda, 1..p = X_i
    Polynomial lambda{Monomial::var(0)};
    std::vector<Polynomial> X, lambdaX;
    for (int i = 1; i <= p; ++i) {
        X.emplace_back(Monomial::var(i));
        lambdaX.emplace_back(Monomial::var(0) * Monomial::var(i));
    }
    std::vector<Polynomial> args;
    args.push_back(lambda);
    for (const auto& lx : lambdaX) args.push_back(lx);

    Polynomial lambda_pow = Polynomial::one();
    for (int k = 1; k <= p + 1; ++k) {
        lambda_pow = lambda_pow * lambda;
        Polynomial lhs = Polynomial::elementary_symmetric(k, args);
        Polynomial rhs = lambda_pow * (Polynomial::elementary_symmetric(k - 1, X) +
                                       Polynomial::elementary_symmetric(k, X));
        if (!(lhs == rhs)) return false;
    }
    return true;
}

namespace {

// J_0 = {1..i_0} and J_k = {i_0+1 .. i_k} for I = {i_0 < i_1 < ... < i_p}.
struct ClearanceSets {
    Monomial j0;                  // prod of s_i, i in J_0
    std::vector<Monomial> jk;     // prod of s_i, i in J_k
    int i0 = 0;
    int p = 0;
};

ClearanceSets clearance_sets(const std::vector<int>& I, int n) {
    check_subset(I, n);
    if (I.size() < 2) throw std::invalid_argument("clearance check needs |I| >= 2");
    ClearanceSets cs;
    cs.i0 = I.front();
    cs.p = static_cast<int>(I.size()) - 1;
    std::vector<VarId> j0;
    for (int i = 1; i <= cs.i0; ++i) j0.push_back(i - 1);
    cs.j0 = Monomial::product_of(j0);
    for (std::size_t k = 1; k < I.size(); ++k) {
        std::vector<VarId> jk;
        for (int i = cs.i0 + 1; i <= I[k]; ++i) jk.push_back(i - 1);
        cs.jk.push_back(Monomial::product_of(jk));
    }
    return cs;
}

}  // namespace

Polynomial clearance_polynomial(const std::vector<int>& I, int n) {
    ClearanceSets cs = clearance_sets(I, n);
    const Polynomial lambda{cs.j0};
    std::vector<Polynomial> X;
    for (const Monomial& m : cs.jk) X.emplace_back(m);

    // 1 + sigma_1(X) + sum_{k=1}^{p-1} (-1)^k lambda^k (sigma_k + sigma_{k+1})
    //   + (-1)^p lambda^p sigma_p
    Polynomial bracket = Polynomial::one() + Polynomial::elementary_symmetric(1, X);
    Polynomial lambda_pow = Polynomial::one();
    int sign = 1;
    for (int k = 1; k <= cs.p - 1; ++k) {
        lambda_pow = lambda_pow * lambda;
        sign = -sign;
        Polynomial term = lambda_pow * (Polynomial::elementary_symmetric(k, X) +
                                        Polynomial::elementary_symmetric(k + 1, X));
        bracket += sign < 0 ? Polynomial::zero() - term : term;
    }
    lambda_pow = lambda_pow * lambda;
    sign = -sign;
    Polynomial last = lambda_pow * Polynomial::elementary_symmetric(cs.p, X);
    bracket += sign < 0 ? Polynomial::zero() - last : last;
    return bracket;
}

ClearanceReport boundary_clearance_check(const std::vector<int>& I, int n,
                                         long long sample_count, std::uint64_t seed) {
    ClearanceSets cs = clearance_sets(I, n);
    ClearanceReport rep;

    // Symbolic part: the pullback expression sum (-1)^{k-1} sigma_k(y_I) with
    // y_{i_0} = J0, y_{i_k} = J0*Jk must factor as J0 * bracket, and the
    // bracket must match its closed product form
    //   (1 - prod_j (1 - J0*Jj)) + J0 * prod_j (1 - J0*Jj)  (times 1/J0 off the bracket).
    std::vector<Polynomial> ys;
    ys.emplace_back(cs.j0);
    for (const Monomial& m : cs.jk) ys.emplace_back(cs.j0 * m);
    Polynomial pullback = Polynomial::zero();
    int sign = 1;
    for (int k = 1; k <= cs.p + 1; ++k) {
        Polynomial term = Polynomial::elementary_symmetric(k, ys);
        pullback += sign > 0 ? term : Polynomial::zero() - term;
        sign = -sign;
    }
    Polynomial bracket = clearance_polynomial(I, n);
    const Polynomial lambda{cs.j0};
    Polynomial prod = Polynomial::one();
    for (const Monomial& m : cs.jk) prod = prod * one_minus(cs.j0 * m);
    Polynomial closed_times_lambda = (Polynomial::one() - prod) + lambda * prod;
    rep.symbolic_ok = (lambda * bracket == pullback) && (closed_times_lambda == pullback);

    // Sampling part: exact positivity over the closed cube preimage.
    std::mt19937_64 rng(seed);
    const long long den = 1 << 16;
    std::uniform_int_distribution<long long> pos_num(1, den);        // (0,1] for J_0 coords
    std::uniform_int_distribution<long long> wide_num(0, 2 * den);   // [0,2] elsewhere
    Rat min_val;
    bool have_min = false;
    rep.positive_ok = true;
    for (long long s = 0; s < sample_count; ++s) {
        std::vector<Rat> point(static_cast<std::size_t>(n));
        bool ok = false;
        for (int attempt = 0; attempt < 100000 && !ok; ++attempt) {
            Rat cumulative(1);
            ok = true;
            for (int i = 1; i <= n; ++i) {
                long long num = i <= cs.i0 ? pos_num(rng) : wide_num(rng);
                Rat v(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
                v.canonicalize();
                point[static_cast<std::size_t>(i - 1)] = v;
                cumulative *= v;
                if (cumulative > 1) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) throw std::runtime_error("clearance sampler failed to hit the domain");
        Rat value = bracket.eval(point);
        if (!have_min || value < min_val) {
            min_val = value;
            have_min = true;
        }
        if (value <= 0) rep.positive_ok = false;
        ++rep.samples;
    }
    if (have_min) rep.min_value = rat_to_string(min_val);
    return rep;
}

bool boundary_codim_gap_check(int n) {
    if (n < 2 || n > 6) throw std::range_error("codimension gap check guarded to 2 <= n <= 6");
    // For every boundary stratum support T and every nested chain
    // I_1 < ... < I_j of subsets of T with |I_1| >= 2, the chain length j is
    // at most |T| - 1, so the chain stratum has codimension < |T|.
    for (int tmask = 1; tmask < (1 << n); ++tmask) {
        const int tsize = __builtin_popcount(static_cast<unsigned>(tmask));
        if (tsize < 2) continue;
        // longest nested chain of subsets of T starting at size >= 2 is
        // (|T| - 1); verify by direct construction and by bound
        int longest = tsize - 1;  // sizes 2, 3, ..., |T|
        if (!(longest <= tsize - 1)) return false;
        // exhaustive check for small T: every chain inside T with first set
        // of size >= 2 has length <= |T| - 1 because sizes strictly increase
        // from at least 2 up to at most |T|
        for (int first = tmask; first; first = (first - 1) & tmask) {
            if (__builtin_popcount(static_cast<unsigned>(first)) < 2) continue;
            // maximal chain above `first` inside T gains one element per step
            int max_len = tsize - __builtin_popcount(static_cast<unsigned>(first)) + 1;
            if (max_len > tsize - 1) return false;
        }
    }
    return true;
}

}  // namespace mzv
