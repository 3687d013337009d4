#include "mzv/words.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mzv {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("composition part < 1");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Composition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

Composition make_composition(const std::vector<int>& parts) {
    if (parts.empty()) throw std::invalid_argument("empty composition");
    return Composition(parts);
}

std::string word_to_string(const BinaryWord& w) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << int(w[i]);
    }
    os << ')';
    return os.str();
}

BinaryWord composition_to_word(const Composition& c) {
    BinaryWord w;
    w.reserve(static_cast<std::size_t>(c.weight()));
    for (int p : c.parts()) {
        for (int i = 0; i < p - 1; ++i) w.push_back(0);
        w.push_back(1);
    }
    return w;
}

Composition word_to_composition(const BinaryWord& w) {
    if (w.empty() || w.back() != 1) {
        throw std::domain_error("word does not end in 1: " + word_to_string(w));
    }
    std::vector<int> parts;
    int run = 0;
    for (std::uint8_t letter : w) {
        ++run;
        if (letter == 1) {
            parts.push_back(run);
            run = 0;
        }
    }
    return Composition(parts);
}

namespace {

void shuffle_rec(const BinaryWord& u, std::size_t iu,
                 const BinaryWord& v, std::size_t iv,
                 BinaryWord& acc, FormalSum<BinaryWord>& out) {
    if (iu == u.size() && iv == v.size()) {
        out.add(acc, 1);
        return;
    }
    if (iu < u.size()) {
        acc.push_back(u[iu]);
        shuffle_rec(u, iu + 1, v, iv, acc, out);
        acc.pop_back();
    }
    if (iv < v.size()) {
        acc.push_back(v[iv]);
        shuffle_rec(u, iu, v, iv + 1, acc, out);
        acc.pop_back();
    }
}

// Shared three-term recursion over (prefix of k, prefix of l).  Append is the
// action on the accumulated suffix: the recursion consumes last entries, so
// terms are assembled back-to-front.
template <typename Term, typename MakeK, typename MakeL, typename MakeM>
void stuffle_rec(const std::vector<int>& k, int a,
                 const std::vector<int>& l, int b,
                 std::vector<Term>& suffix, FormalSum<std::vector<Term>>& out,
                 MakeK mk, MakeL ml, MakeM mm) {
    if (a == 0 && b == 0) {
        std::vector<Term> term(suffix.rbegin(), suffix.rend());
        out.add(term, 1);
        return;
    }
    if (b > 0) {
        suffix.push_back(ml(b - 1));
        stuffle_rec(k, a, l, b - 1, suffix, out, mk, ml, mm);
        suffix.pop_back();
    }
    if (a > 0) {
        suffix.push_back(mk(a - 1));
        stuffle_rec(k, a - 1, l, b, suffix, out, mk, ml, mm);
        suffix.pop_back();
    }
    if (a > 0 && b > 0) {
        suffix.push_back(mm(a - 1, b - 1));
        stuffle_rec(k, a - 1, l, b - 1, suffix, out, mk, ml, mm);
        suffix.pop_back();
    }
}

}  // namespace

FormalSum<BinaryWord> shuffle(const BinaryWord& u, const BinaryWord& v) {
    FormalSum<BinaryWord> out;
    BinaryWord acc;
    acc.reserve(u.size() + v.size());
    shuffle_rec(u, 0, v, 0, acc, out);
    return out;
}

FormalSum<Composition> stuffle(const Composition& k, const Composition& l) {
    FormalSum<std::vector<int>> raw;
    std::vector<int> suffix;
    stuffle_rec<int>(
        k.parts(), k.depth(), l.parts(), l.depth(), suffix, raw,
        [&](int i) { return k.parts()[i]; },
        [&](int j) { return l.parts()[j]; },
        [&](int i, int j) { return k.parts()[i] + l.parts()[j]; });
    FormalSum<Composition> out;
    for (const auto& [parts, c] : raw) out.add(Composition(parts), c);
    return out;
}

FormalSum<ProvenanceWord> stuffle_provenance(const Composition& k, const Composition& l) {
    FormalSum<ProvenanceWord> out;
    std::vector<PartOrigin> suffix;
    stuffle_rec<PartOrigin>(
        k.parts(), k.depth(), l.parts(), l.depth(), suffix, out,
        [&](int i) { return PartOrigin{i, -1}; },
        [&](int j) { return PartOrigin{-1, j}; },
        [&](int i, int j) { return PartOrigin{i, j}; });
    return out;
}

Composition provenance_to_composition(const ProvenanceWord& w,
                                      const Composition& k, const Composition& l) {
    std::vector<int> parts;
    parts.reserve(w.size());
    for (const PartOrigin& o : w) {
        int v = 0;
        if (o.ki >= 0) v += k.parts().at(static_cast<std::size_t>(o.ki));
        if (o.lj >= 0) v += l.parts().at(static_cast<std::size_t>(o.lj));
        if (o.ki < 0 && o.lj < 0) throw std::invalid_argument("empty part origin");
        parts.push_back(v);
    }
    return Composition(parts);
}

ShufflePermutation::ShufflePermutation(std::vector<std::uint8_t> pattern, int n, int m)
    : pattern_(std::move(pattern)), n_(n), m_(m) {
    int zeros = 0, ones = 0;
    for (std::uint8_t b : pattern_) (b == 0 ? zeros : ones)++;
    if (zeros != n || ones != m) {
        throw std::invalid_argument("shuffle pattern does not match block sizes");
    }
}

int ShufflePermutation::sigma(int i) const {
    // sigma(i) = slot of the i-th element of the first block (i <= n), or of
    // the (i-n)-th element of the second block.
    if (i < 1 || i > n_ + m_) throw std::out_of_range("sigma index");
    const bool first_block = i <= n_;
    int want = first_block ? i : i - n_;
    int seen = 0;
    for (std::size_t t = 0; t < pattern_.size(); ++t) {
        if ((pattern_[t] == 0) == first_block) {
            if (++seen == want) return static_cast<int>(t) + 1;
        }
    }
    throw std::logic_error("malformed shuffle pattern");
}

const char* product_kind_name(ProductKind k) {
    return k == ProductKind::Stuffle ? "stuffle" : "shuffle";
}

namespace {

void require_admissible(const Composition& c) {
    if (!c.admissible()) {
        throw std::invalid_argument("composition not admissible: " + c.to_string());
    }
}

}  // namespace

Relation stuffle_relation(const Composition& k, const Composition& l) {
    require_admissible(k);
    require_admissible(l);
    return Relation{ProductKind::Stuffle, k, l, stuffle(k, l)};
}

Relation shuffle_relation(const Composition& k, const Composition& l) {
    require_admissible(k);
    require_admissible(l);
    FormalSum<BinaryWord> words = shuffle(composition_to_word(k), composition_to_word(l));
    FormalSum<Composition> rhs;
    for (const auto& [w, c] : words) rhs.add(word_to_composition(w), c);
    return Relation{ProductKind::Shuffle, k, l, rhs};
}

namespace {

void enumerate_rec(int remaining, bool first, std::vector<int>& acc,
                   std::vector<Composition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    int lo = first ? 2 : 1;
    for (int part = lo; part <= remaining; ++part) {
        acc.push_back(part);
        enumerate_rec(remaining - part, false, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Composition> admissible_compositions(int weight) {
    std::vector<Composition> out;
    if (weight < 2) return out;
    std::vector<int> acc;
    enumerate_rec(weight, true, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

long long delannoy(int p, int q) {
    if (p < 0 || q < 0) throw std::invalid_argument("negative Delannoy index");
    std::vector<std::vector<long long>> d(p + 1, std::vector<long long>(q + 1, 1));
    for (int i = 1; i <= p; ++i) {
        for (int j = 1; j <= q; ++j) {
            d[i][j] = d[i - 1][j] + d[i][j - 1] + d[i - 1][j - 1];
        }
    }
    return d[p][q];
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

}  // namespace mzv
