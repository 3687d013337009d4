#pragma once

#include <cstdint>
#include <map>
#include <numeric>

namespace mzv {

// Finite integer-weighted multiset over an ordered term type.  Terms with
// coefficient zero are never stored, so equality of sums is equality of the
// underlying maps.  Iteration order is the term order, which makes every
// serialization of a FormalSum deterministic.
template <typename Term>
class FormalSum {
public:
    using Map = std::map<Term, long long>;

    FormalSum() = default;

    void add(const Term& t, long long c) {
        if (c == 0) return;
        auto it = terms_.find(t);
        if (it == terms_.end()) {
            terms_.emplace(t, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    FormalSum& operator+=(const FormalSum& other) {
        for (const auto& [t, c] : other.terms_) add(t, c);
        return *this;
    }

    long long coeff(const Term& t) const {
        auto it = terms_.find(t);
        return it == terms_.end() ? 0 : it->second;
    }

    long long total_mass() const {
        long long m = 0;
        for (const auto& [t, c] : terms_) m += c;
        return m;
    }

    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    bool operator==(const FormalSum& other) const { return terms_ == other.terms_; }

private:
    Map terms_;
};

}  // namespace mzv
