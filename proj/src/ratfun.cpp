#include "mzv/ratfun.hpp"

#include <sstream>
#include <stdexcept>

namespace mzv {

void RationalFn::check_factor(const Monomial& m) {
    if (m.is_unit()) throw std::invalid_argument("denominator factor 1 - 1 vanishes");
    if (!m.squarefree()) {
        throw std::invalid_argument("denominator factor is not a square-free monomial difference: 1 - " +
                                    m.to_string());
    }
}

RationalFn::RationalFn(Polynomial num, const std::vector<Monomial>& den_factors)
    : num_(std::move(num)) {
    for (const Monomial& m : den_factors) {
        check_factor(m);
        den_[m]++;
    }
}

RationalFn RationalFn::operator*(const RationalFn& o) const {
    RationalFn out;
    out.num_ = num_ * o.num_;
    out.den_ = den_;
    for (const auto& [m, mult] : o.den_) out.den_[m] += mult;
    return out;
}

namespace {

// Product of (1 - M)^mult over the given factor multiset.
Polynomial factor_product(const RationalFn::DenFactors& fs) {
    Polynomial p = Polynomial::one();
    for (const auto& [m, mult] : fs) {
        Polynomial f = one_minus(m);
        for (int i = 0; i < mult; ++i) p = p * f;
    }
    return p;
}

// Union (max multiplicity) and the two complements union \ a, union \ b.
void split_union(const RationalFn::DenFactors& a, const RationalFn::DenFactors& b,
                 RationalFn::DenFactors& uni,
                 RationalFn::DenFactors& comp_a, RationalFn::DenFactors& comp_b) {
    uni = a;
    for (const auto& [m, mult] : b) {
        auto it = uni.find(m);
        if (it == uni.end() || it->second < mult) uni[m] = mult;
    }
    for (const auto& [m, mult] : uni) {
        auto ia = a.find(m);
        int have_a = ia == a.end() ? 0 : ia->second;
        if (mult > have_a) comp_a[m] = mult - have_a;
        auto ib = b.find(m);
        int have_b = ib == b.end() ? 0 : ib->second;
        if (mult > have_b) comp_b[m] = mult - have_b;
    }
}

}  // namespace

RationalFn RationalFn::operator+(const RationalFn& o) const {
    DenFactors uni, ca, cb;
    split_union(den_, o.den_, uni, ca, cb);
    RationalFn out;
    out.num_ = num_ * factor_product(ca) + o.num_ * factor_product(cb);
    out.den_ = std::move(uni);
    return out;
}

Polynomial RationalFn::denominator_polynomial() const {
    return factor_product(den_);
}

Rat RationalFn::eval(const std::vector<Rat>& point) const {
    Rat d(1);
    for (const auto& [m, mult] : den_) {
        Rat f = Rat(1) - m.eval(point);
        if (f == 0) throw std::domain_error("pole: denominator factor 1 - " + m.to_string() + " vanishes");
        for (int i = 0; i < mult; ++i) d *= f;
    }
    return num_.eval(point) / d;
}

std::string RationalFn::to_string() const {
    std::ostringstream os;
    os << '(' << num_.to_string() << ')';
    if (!den_.empty()) {
        os << " / ";
        for (const auto& [m, mult] : den_) {
            for (int i = 0; i < mult; ++i) os << "(1-" << m.to_string() << ')';
        }
    }
    return os.str();
}

bool rational_eq(const RationalFn& f, const RationalFn& g) {
    RationalFn::DenFactors uni, cf, cg;
    split_union(f.den_, g.den_, uni, cf, cg);
    return f.num_ * factor_product(cf) == g.num_ * factor_product(cg);
}

}  // namespace mzv
