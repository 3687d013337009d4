#include "mzv/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace mzv {

const char* eval_method_name(EvalMethod m) {
    switch (m) {
        case EvalMethod::Series: return "series";
        case EvalMethod::SeriesExtrapolated: return "series+extrapolation";
        case EvalMethod::Quadrature: return "quadrature";
    }
    return "?";
}

namespace {

void require_admissible_or_divergent(const Composition& k) {
    if (k.empty() || !k.admissible()) {
        throw std::domain_error("series diverges: " + k.to_string() + " is not admissible");
    }
}

double ipow_inv(long long m, int k) {
    double x = static_cast<double>(m), r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return 1.0 / r;
}

// Nested partial sums A_j(m) = sum over n_j > ... > n_p, n_j < m.  Returns
// A_j(N+1) for j = 1..p (index 0 unused) and, in `levels`, the full inner
// profile A_{j}(m) for the last processed level when requested by mzv().
std::vector<double> nested_prefix_sums(const Composition& k, long long N) {
    const auto& parts = k.parts();
    const int p = k.depth();
    std::vector<double> at_cutoff(static_cast<std::size_t>(p) + 1, 0.0);
    // A[m] = A_{j+1}(m); starts as the empty product 1.
    std::vector<double> A(static_cast<std::size_t>(N) + 2, 1.0);
    for (int j = p; j >= 1; --j) {
        const int kj = parts[static_cast<std::size_t>(j - 1)];
        std::vector<double> next(static_cast<std::size_t>(N) + 2, 0.0);
        long double acc = 0.0L;
        for (long long m = 1; m <= N; ++m) {
            acc += static_cast<long double>(ipow_inv(m, kj) * A[static_cast<std::size_t>(m)]);
            next[static_cast<std::size_t>(m) + 1] = static_cast<double>(acc);
        }
        at_cutoff[static_cast<std::size_t>(j)] = next[static_cast<std::size_t>(N) + 1];
        A = std::move(next);
    }
    return at_cutoff;
}

// Upper bound on zeta(s) for integer s >= 2.
double zeta_upper(int s) {
    const int m0 = 64;
    double v = 0.0;
    for (int m = 1; m <= m0; ++m) v += ipow_inv(m, s);
    v += std::pow(static_cast<double>(m0), 1.0 - s) / (s - 1);
    return v;
}

// Exact integral of (1 + ln x)^b x^{-c} over [X, inf), c >= 2.
double log_power_integral(int c, int b, double X) {
    double v = std::pow(1.0 + std::log(X), b) * std::pow(X, 1.0 - c) / (c - 1);
    if (b > 0) v += static_cast<double>(b) / (c - 1) * log_power_integral(c, b - 1, X);
    return v;
}

double series_tail_majorant(const Composition& k, long long N) {
    const auto& parts = k.parts();
    int log_count = 0;
    double cz = 1.0;
    for (int j = 1; j < k.depth(); ++j) {
        const int kj = parts[static_cast<std::size_t>(j)];
        if (kj >= 2) {
            cz *= zeta_upper(kj);
        } else {
            ++log_count;
        }
    }
    const int k1 = parts[0];
    // (1 + ln x)^a x^{-k1} is decreasing once 1 + ln x > a / k1; x >= 13
    // covers every case with a <= 8, k1 >= 2.
    const long long M = std::max<long long>(N, 13);
    double bound = 0.0;
    for (long long n = N + 1; n <= M; ++n) {
        bound += cz * std::pow(1.0 + std::log(static_cast<double>(n)), log_count) * ipow_inv(n, k1);
    }
    bound += cz * log_power_integral(k1, log_count, static_cast<double>(M));
    return bound;
}

// ---------------------------------------------------------------------------
// Symbolic Euler-Maclaurin in the basis ln(x)^b / x^c.

struct LogPowerSeries {
    // key = (c, b): coefficient of ln(x)^b * x^{-c}
    std::map<std::pair<int, int>, double> terms;
    double dropped = 0.0;  // magnitude discarded by the basis cutoff

    static constexpr int kMaxInversePower = 48;

    void add(int c, int b, double coef, double ref_x) {
        if (coef == 0.0) return;
        if (c > kMaxInversePower) {
            dropped += std::abs(coef) * std::pow(std::log(ref_x), b) * std::pow(ref_x, -c);
            return;
        }
        auto key = std::make_pair(c, b);
        terms[key] += coef;
        if (terms[key] == 0.0) terms.erase(key);
    }

    LogPowerSeries shifted(int dc, double ref_x) const {
        LogPowerSeries out;
        out.dropped = dropped;
        for (const auto& [cb, coef] : terms) out.add(cb.first + dc, cb.second, coef, ref_x);
        return out;
    }

    LogPowerSeries derivative(double ref_x) const {
        LogPowerSeries out;
        for (const auto& [cb, coef] : terms) {
            const auto [c, b] = cb;
            if (b > 0) out.add(c + 1, b - 1, coef * b, ref_x);
            out.add(c + 1, b, -coef * c, ref_x);
        }
        return out;
    }

    // An antiderivative; every input term must have c >= 1.
    LogPowerSeries antiderivative(double ref_x) const {
        LogPowerSeries out;
        for (const auto& [cb, coef] : terms) {
            const auto [c, b] = cb;
            if (c < 1) throw std::logic_error("antiderivative needs c >= 1");
            if (c == 1) {
                out.add(0, b + 1, coef / (b + 1), ref_x);
            } else {
                // int ln^b x * x^{-c} = ln^b x * x^{1-c} / (1-c) + b/(c-1) * int ln^{b-1} ...
                double f = coef;
                for (int bb = b; ; --bb) {
                    out.add(c - 1, bb, f / (1 - c), ref_x);
                    if (bb == 0) break;
                    f = f * bb / (c - 1);
                }
            }
        }
        return out;
    }

    double eval(double x) const {
        const double lx = std::log(x);
        double v = 0.0;
        for (const auto& [cb, coef] : terms) {
            v += coef * std::pow(lx, cb.second) * std::pow(x, -cb.first);
        }
        return v;
    }

    double abs_eval(double x) const {
        const double lx = std::log(x);
        double v = 0.0;
        for (const auto& [cb, coef] : terms) {
            v += std::abs(coef) * std::pow(lx, cb.second) * std::pow(x, -cb.first);
        }
        return v;
    }
};

// n-dependent part of sum_{m < n} g(m) by Euler-Maclaurin through the B_6
// term; the constant of summation is pinned numerically by the caller.
LogPowerSeries em_partial_sum_tail(const LogPowerSeries& g, double ref_x, double* remainder) {
    LogPowerSeries h = g.antiderivative(ref_x);
    for (const auto& [cb, coef] : g.terms) h.add(cb.first, cb.second, -0.5 * coef, ref_x);
    LogPowerSeries d1 = g.derivative(ref_x);
    LogPowerSeries d3 = d1.derivative(ref_x).derivative(ref_x);
    LogPowerSeries d5 = d3.derivative(ref_x).derivative(ref_x);
    LogPowerSeries d7 = d5.derivative(ref_x).derivative(ref_x);
    const double b2 = 1.0 / 12, b4 = -1.0 / 720, b6 = 1.0 / 30240, b8 = -1.0 / 1209600;
    for (const auto& [cb, coef] : d1.terms) h.add(cb.first, cb.second, b2 * coef, ref_x);
    for (const auto& [cb, coef] : d3.terms) h.add(cb.first, cb.second, b4 * coef, ref_x);
    for (const auto& [cb, coef] : d5.terms) h.add(cb.first, cb.second, b6 * coef, ref_x);
    *remainder = std::abs(b8) * d7.abs_eval(ref_x);
    return h;
}

struct EmResult {
    double value;
    double err;
};

// Series-plus-tail evaluation at cutoff N.  Levels are processed from the
// innermost sum outward; each level's asymptotic expansion is pinned to the
// exact partial sum at N+1 and feeds the next level's summand.
EmResult mzv_em(const Composition& k, long long N) {
    const auto& parts = k.parts();
    const int p = k.depth();
    const double ref = static_cast<double>(N + 1);
    std::vector<double> at_cutoff = nested_prefix_sums(k, N);

    LogPowerSeries E;
    E.add(0, 0, 1.0, ref);
    double err = 0.0;
    for (int j = p; j >= 1; --j) {
        const int kj = parts[static_cast<std::size_t>(j - 1)];
        LogPowerSeries g = E.shifted(kj, ref);
        double em_rem = 0.0;
        LogPowerSeries H = em_partial_sum_tail(g, ref, &em_rem);
        const double c = at_cutoff[static_cast<std::size_t>(j)] - H.eval(ref);
        // Error in the inner expansion enters both the pinned constant and the
        // running terms; the summation operator scales a uniform band by at
        // most sum_{m>N} m^{-kj} (kj >= 2) or by a logarithmic factor (kj = 1)
        // that the admissible outermost level damps back below 1/N.
        const double band_scale = kj >= 2 ? 2.0 / ((kj - 1) * std::pow(ref - 1, kj - 1))
                                          : 2.0 * std::log(1e6);
        err = err * band_scale + em_rem + H.dropped + g.dropped;
        LogPowerSeries next = H;
        next.add(0, 0, c, ref);
        E = next;
    }
    // At the outermost level every term of H decays, so the constant term is
    // the value of the full sum.
    double value = 0.0;
    auto it = E.terms.find(std::make_pair(0, 0));
    if (it != E.terms.end()) value = it->second;
    // Floating-point accumulation across the dynamic program.
    err += 1e-14 * (1.0 + std::abs(value));
    return EmResult{value, err};
}

}  // namespace

MzvValue mzv_series(const Composition& k, long long N) {
    require_admissible_or_divergent(k);
    if (N < k.depth()) {
        throw std::invalid_argument("cutoff below depth: no summation tuple fits");
    }
    std::vector<double> at_cutoff = nested_prefix_sums(k, N);
    MzvValue out;
    out.value = at_cutoff[1];
    out.tail_bound = series_tail_majorant(k, N);
    out.method = EvalMethod::Series;
    return out;
}

MzvValue zeta(const Composition& k, double tol) {
    require_admissible_or_divergent(k);
    if (!(tol >= 1e-10)) {
        throw std::invalid_argument("tolerance below the 1e-10 floor of 64-bit evaluation");
    }
    long long N = 16384;
    const long long budget = 1 << 20;
    for (;;) {
        EmResult r = mzv_em(k, N);
        if (r.err <= tol) {
            return MzvValue{r.value, r.err, EvalMethod::SeriesExtrapolated};
        }
        if (N >= budget) {
            throw std::runtime_error("tolerance unreachable within iteration budget for " +
                                     k.to_string());
        }
        N *= 4;
    }
}

void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights) {
    if (order < 1) throw std::invalid_argument("quadrature order must be positive");
    nodes.assign(static_cast<std::size_t>(order), 0.0);
    weights.assign(static_cast<std::size_t>(order), 0.0);
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev initial guess, then Newton on P_order.
        double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int n = 2; n <= order; ++n) {
                double p2 = ((2 * n - 1) * x * p1 - (n - 1) * p0) / n;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[static_cast<std::size_t>(i)] = (1.0 - x) / 2.0;
        nodes[static_cast<std::size_t>(order - 1 - i)] = (1.0 + x) / 2.0;
        const double w = 1.0 / ((1.0 - x * x) * dp * dp);
        weights[static_cast<std::size_t>(i)] = w;
        weights[static_cast<std::size_t>(order - 1 - i)] = w;
    }
}

namespace {

// Tensor Gauss-Legendre of the cube integrand of k at one grid order.  The
// innermost dimension always closes the last denominator factor, so it is
// summed in closed form instead of recursing.
double tensor_quadrature(const Composition& k, int order) {
    std::vector<double> x, w;
    gauss_legendre(order, x, w);
    const int n = k.weight();
    std::vector<char> is_partial(static_cast<std::size_t>(n) + 1, 0);
    int acc = 0;
    for (int part : k.parts()) {
        acc += part;
        is_partial[static_cast<std::size_t>(acc)] = 1;
    }
    double total = 0.0;
    // Stack of (dimension, prefix product, product at last partial weight,
    // accumulated factor).
    struct Frame {
        int d;
        double prefix, last_partial, acc;
    };
    std::vector<Frame> stack;
    stack.push_back({0, 1.0, 1.0, 1.0});
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.d == n - 1) {
            double s = 0.0;
            for (int j = 0; j < order; ++j) {
                s += w[static_cast<std::size_t>(j)] / (1.0 - f.prefix * x[static_cast<std::size_t>(j)]);
            }
            total += f.acc * f.last_partial * s;
            continue;
        }
        for (int j = 0; j < order; ++j) {
            Frame g;
            g.d = f.d + 1;
            g.prefix = f.prefix * x[static_cast<std::size_t>(j)];
            g.acc = f.acc * w[static_cast<std::size_t>(j)];
            g.last_partial = f.last_partial;
            if (is_partial[static_cast<std::size_t>(g.d)]) {
                g.acc *= g.last_partial / (1.0 - g.prefix);
                g.last_partial = g.prefix;
            }
            stack.push_back(g);
        }
    }
    return total;
}

}  // namespace

MzvValue mzv_cube_quadrature(const Composition& k, int order) {
    require_admissible_or_divergent(k);
    if (k.weight() > 6) {
        throw std::range_error("cube quadrature limited to weight <= 6, got weight " +
                               std::to_string(k.weight()));
    }
    if (order < 8) throw std::invalid_argument("quadrature order must be at least 8");
    const double coarse = tensor_quadrature(k, order / 2);
    const double fine = tensor_quadrature(k, order);
    MzvValue out;
    out.value = fine;
    out.tail_bound = 2.0 * std::abs(fine - coarse) + 1e-13 * (1.0 + std::abs(fine));
    out.method = EvalMethod::Quadrature;
    return out;
}

const MzvValue& MzvEvaluator::value(const Composition& k) {
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(k, zeta(k, tol_)).first->second;
}

RelationReport verify_relation(const Relation& rel, double tol) {
    MzvEvaluator eval(std::max(1e-10, tol / 1000.0));
    return verify_relation(rel, tol, eval);
}

RelationReport verify_relation(const Relation& rel, double tol, MzvEvaluator& eval) {
    if (!rel.k.admissible() || !rel.l.admissible()) {
        throw std::invalid_argument("relation sides must be admissible");
    }
    const MzvValue& vk = eval.value(rel.k);
    const MzvValue& vl = eval.value(rel.l);
    RelationReport rep;
    rep.kind = rel.kind;
    rep.k = rel.k;
    rep.l = rel.l;
    rep.tol = tol;
    rep.lhs = vk.value * vl.value;
    double bound = std::abs(vk.value) * vl.tail_bound + std::abs(vl.value) * vk.tail_bound +
                   vk.tail_bound * vl.tail_bound;
    double rhs = 0.0;
    for (const auto& [sigma, coeff] : rel.rhs) {
        const MzvValue& vs = eval.value(sigma);
        rhs += static_cast<double>(coeff) * vs.value;
        bound += std::abs(static_cast<double>(coeff)) * vs.tail_bound;
    }
    rep.rhs = rhs;
    rep.absdiff = std::abs(rep.lhs - rep.rhs);
    rep.bound = bound;
    rep.pass = rep.absdiff <= tol + bound;
    return rep;
}

std::vector<Relation> double_shuffle_relations_up_to(int max_weight) {
    if (max_weight < 4 || max_weight > 10) {
        throw std::range_error("max weight must be between 4 and 10");
    }
    std::vector<std::pair<Composition, Composition>> pairs;
    for (int wk = 2; wk + 2 <= max_weight; ++wk) {
        for (int wl = wk; wk + wl <= max_weight; ++wl) {
            for (const Composition& a : admissible_compositions(wk)) {
                for (const Composition& b : admissible_compositions(wl)) {
                    if (wk == wl && b < a) continue;
                    pairs.emplace_back(a, b);
                }
            }
        }
    }
    std::sort(pairs.begin(), pairs.end(), [](const auto& p, const auto& q) {
        const int wp = p.first.weight() + p.second.weight();
        const int wq = q.first.weight() + q.second.weight();
        if (wp != wq) return wp < wq;
        if (p.first != q.first) return p.first < q.first;
        return p.second < q.second;
    });
    std::vector<Relation> out;
    out.reserve(pairs.size() * 2);
    for (const auto& [a, b] : pairs) {
        out.push_back(stuffle_relation(a, b));
        out.push_back(shuffle_relation(a, b));
    }
    return out;
}

namespace {

int worker_count() {
    if (const char* env = std::getenv("MZVWB_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return std::min(t, 64);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

}  // namespace

std::vector<RelationReport> verify_double_shuffle_up_to(int max_weight, double tol) {
    std::vector<Relation> rels = double_shuffle_relations_up_to(max_weight);
    const double eval_tol = std::max(1e-10, tol / 1000.0);

    // Distinct compositions needed, evaluated up front (possibly in
    // parallel), then the per-relation reports are assembled in order.
    std::map<Composition, MzvValue> values;
    for (const Relation& r : rels) {
        values.emplace(r.k, MzvValue{});
        values.emplace(r.l, MzvValue{});
        for (const auto& [sigma, c] : r.rhs) values.emplace(sigma, MzvValue{});
    }
    std::vector<Composition> todo;
    todo.reserve(values.size());
    for (const auto& [c, v] : values) todo.push_back(c);

    const int workers = std::min<int>(worker_count(), static_cast<int>(todo.size()));
    if (workers <= 1) {
        for (const Composition& c : todo) values[c] = zeta(c, eval_tol);
    } else {
        std::vector<MzvValue> results(todo.size());
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) {
            pool.emplace_back([&, t]() {
                for (std::size_t i = static_cast<std::size_t>(t); i < todo.size();
                     i += static_cast<std::size_t>(workers)) {
                    results[i] = zeta(todo[i], eval_tol);
                }
            });
        }
        for (auto& th : pool) th.join();
        for (std::size_t i = 0; i < todo.size(); ++i) values[todo[i]] = results[i];
    }

    std::vector<RelationReport> reports;
    reports.reserve(rels.size());
    for (const Relation& r : rels) {
        RelationReport rep;
        rep.kind = r.kind;
        rep.k = r.k;
        rep.l = r.l;
        rep.tol = tol;
        const MzvValue& vk = values[r.k];
        const MzvValue& vl = values[r.l];
        rep.lhs = vk.value * vl.value;
        double bound = std::abs(vk.value) * vl.tail_bound + std::abs(vl.value) * vk.tail_bound +
                       vk.tail_bound * vl.tail_bound;
        double rhs = 0.0;
        for (const auto& [sigma, coeff] : r.rhs) {
            const MzvValue& vs = values[sigma];
            rhs += static_cast<double>(coeff) * vs.value;
            bound += std::abs(static_cast<double>(coeff)) * vs.tail_bound;
        }
        rep.rhs = rhs;
        rep.absdiff = std::abs(rep.lhs - rep.rhs);
        rep.bound = bound;
        rep.pass = rep.absdiff <= tol + bound;
        reports.push_back(rep);
    }
    return reports;
}

}  // namespace mzv
