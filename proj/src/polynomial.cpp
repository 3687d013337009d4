#include "mzv/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mzv {

std::string var_name(VarId v) {
    return "x" + std::to_string(v + 1);
}

Monomial Monomial::var(VarId v, int exp) {
    Monomial m;
    if (exp < 0) throw std::invalid_argument("negative exponent");
    if (exp > 0) m.f_.emplace_back(v, exp);
    return m;
}

Monomial Monomial::product_of(const std::vector<VarId>& vars) {
    Monomial m;
    for (VarId v : vars) m = m * var(v);
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : f_) d += e;
    return d;
}

int Monomial::exponent(VarId v) const {
    for (const auto& [w, e] : f_) {
        if (w == v) return e;
    }
    return 0;
}

bool Monomial::squarefree() const {
    return std::all_of(f_.begin(), f_.end(), [](const auto& p) { return p.second == 1; });
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    out.f_.reserve(f_.size() + other.f_.size());
    auto a = f_.begin(), b = other.f_.begin();
    while (a != f_.end() || b != other.f_.end()) {
        if (b == other.f_.end() || (a != f_.end() && a->first < b->first)) {
            out.f_.push_back(*a++);
        } else if (a == f_.end() || b->first < a->first) {
            out.f_.push_back(*b++);
        } else {
            out.f_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
    Monomial out;
    auto a = f_.begin(), b = other.f_.begin();
    while (a != f_.end() || b != other.f_.end()) {
        if (b == other.f_.end() || (a != f_.end() && a->first < b->first)) {
            out.f_.push_back(*a++);
        } else if (a == f_.end() || b->first < a->first) {
            throw std::domain_error("monomial division is not exact");
        } else {
            int e = a->second - b->second;
            if (e < 0) throw std::domain_error("monomial division is not exact");
            if (e > 0) out.f_.emplace_back(a->first, e);
            ++a;
            ++b;
        }
    }
    return out;
}

bool Monomial::divides(const Monomial& other) const {
    for (const auto& [v, e] : f_) {
        if (other.exponent(v) < e) return false;
    }
    return true;
}

Rat Monomial::eval(const std::vector<Rat>& point) const {
    Rat r(1);
    for (const auto& [v, e] : f_) {
        if (v < 0 || static_cast<std::size_t>(v) >= point.size()) {
            throw std::invalid_argument("evaluation point does not cover " + var_name(v));
        }
        for (int i = 0; i < e; ++i) r *= point[static_cast<std::size_t>(v)];
    }
    return r;
}

std::vector<VarId> Monomial::support() const {
    std::vector<VarId> s;
    s.reserve(f_.size());
    for (const auto& [v, e] : f_) s.push_back(v);
    return s;
}

std::string Monomial::to_string() const {
    if (f_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : f_) {
        if (!first) os << '*';
        first = false;
        os << var_name(v);
        if (e > 1) os << '^' << e;
    }
    return os.str();
}

Polynomial::Polynomial(const Rat& c) {
    add_term(Monomial(), c);
}

Polynomial::Polynomial(const Monomial& m) {
    add_term(m, Rat(1));
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial out = *this;
    out += o;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial out = *this;
    out -= o;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial out;
    for (const auto& [m1, c1] : t_) {
        for (const auto& [m2, c2] : o.t_) {
            out.add_term(m1 * m2, c1 * c2);
        }
    }
    return out;
}

Polynomial Polynomial::operator*(const Rat& c) const {
    Polynomial out;
    if (c == 0) return out;
    for (const auto& [m, k] : t_) out.add_term(m, k * c);
    return out;
}

Rat Polynomial::eval(const std::vector<Rat>& point) const {
    Rat r(0);
    for (const auto& [m, c] : t_) r += c * m.eval(point);
    return r;
}

Polynomial Polynomial::elementary_symmetric(int k, const std::vector<Polynomial>& args) {
    if (k < 0) throw std::invalid_argument("negative symmetric index");
    const int n = static_cast<int>(args.size());
    if (k > n) return Polynomial::zero();
    // e[j] after processing i arguments; standard one-row DP.
    std::vector<Polynomial> e(static_cast<std::size_t>(k) + 1);
    e[0] = Polynomial::one();
    for (int i = 0; i < n; ++i) {
        for (int j = std::min(k, i + 1); j >= 1; --j) {
            e[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j - 1)] * args[static_cast<std::size_t>(i)];
        }
    }
    return e[static_cast<std::size_t>(k)];
}

std::string Polynomial::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        if (!first) os << " + ";
        first = false;
        if (m.is_unit()) {
            os << rat_to_string(c);
        } else if (c == 1) {
            os << m.to_string();
        } else {
            os << rat_to_string(c) << '*' << m.to_string();
        }
    }
    return os.str();
}

Polynomial one_minus(const Monomial& m) {
    Polynomial p = Polynomial::one();
    p.add_term(m, Rat(-1));
    return p;
}

}  // namespace mzv
