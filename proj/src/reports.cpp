#include "mzv/reports.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

#include "mzv/coords.hpp"
#include "mzv/ratfun.hpp"

namespace mzv {

using nlohmann::json;

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json composition_json(const Composition& c) {
    return json(c.parts());
}

std::string composition_flat(const Composition& c) {
    std::ostringstream os;
    for (std::size_t i = 0; i < c.parts().size(); ++i) {
        if (i) os << ',';
        os << c.parts()[i];
    }
    return os.str();
}

json formal_sum_json(const FormalSum<Composition>& fs) {
    json arr = json::array();
    for (const auto& [term, coeff] : fs) {
        arr.push_back({{"term", composition_json(term)}, {"coeff", coeff}});
    }
    return arr;
}

std::string formal_sum_flat(const FormalSum<Composition>& fs) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [term, coeff] : fs) {
        if (!first) os << '+';
        first = false;
        os << coeff << '*' << term.to_string();
    }
    return os.str();
}

json monomial_json(const Monomial& m) {
    json obj = json::object();
    for (const auto& [v, e] : m.factors()) obj[var_name(v)] = e;
    return obj;
}

json ratfun_json(const RationalFn& f) {
    json num = json::array();
    for (const auto& [m, c] : f.numerator().terms()) {
        json coeff;
        if (c.get_den() == 1) {
            coeff = static_cast<long long>(c.get_num().get_si());
        } else {
            coeff = rat_to_string(c);
        }
        num.push_back(json::array({coeff, monomial_json(m)}));
    }
    json den = json::array();
    for (const auto& [m, mult] : f.denominator()) {
        for (int i = 0; i < mult; ++i) den.push_back(json::array({monomial_json(m)}));
    }
    return json{{"num", num}, {"den", den}};
}

json relation_json(const Relation& r) {
    return json{{"product", product_kind_name(r.kind)},
                {"k", composition_json(r.k)},
                {"l", composition_json(r.l)},
                {"rhs", formal_sum_json(r.rhs)}};
}

}  // namespace

Composition parse_composition(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(token, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad composition literal: '" + text + "'");
        }
        if (pos != token.size()) {
            throw std::invalid_argument("bad composition literal: '" + text + "'");
        }
        parts.push_back(v);
    }
    return make_composition(parts);
}

std::string relations_report(int max_weight, const std::string& format) {
    std::vector<Relation> rels = double_shuffle_relations_up_to(max_weight);
    if (format == "tsv") {
        std::ostringstream os;
        os << "product\tk\tl\trhs\n";
        for (const Relation& r : rels) {
            os << product_kind_name(r.kind) << '\t' << composition_flat(r.k) << '\t'
               << composition_flat(r.l) << '\t' << formal_sum_flat(r.rhs) << '\n';
        }
        return os.str();
    }
    if (format != "json") throw std::invalid_argument("unknown format: " + format);
    json arr = json::array();
    for (const Relation& r : rels) arr.push_back(relation_json(r));
    return json{{"max_weight", max_weight}, {"relations", arr}}.dump(2) + "\n";
}

VerifyOutcome verify_report(int max_weight, double tol, const std::string& format) {
    std::vector<RelationReport> reports = verify_double_shuffle_up_to(max_weight, tol);
    VerifyOutcome out;
    for (const RelationReport& r : reports) (r.pass ? out.passed : out.failed)++;
    if (format == "tsv") {
        std::ostringstream os;
        os << "product\tk\tl\tlhs\trhs\tabsdiff\tbound\tpass\n";
        for (const RelationReport& r : reports) {
            os << product_kind_name(r.kind) << '\t' << composition_flat(r.k) << '\t'
               << composition_flat(r.l) << '\t' << fmt_double(r.lhs) << '\t' << fmt_double(r.rhs)
               << '\t' << fmt_double(r.absdiff) << '\t' << fmt_double(r.bound) << '\t'
               << (r.pass ? 1 : 0) << '\n';
        }
        os << "# passed " << out.passed << " failed " << out.failed << "\n";
        out.text = os.str();
        return out;
    }
    if (format != "json") throw std::invalid_argument("unknown format: " + format);
    json arr = json::array();
    for (const RelationReport& r : reports) {
        arr.push_back({{"product", product_kind_name(r.kind)},
                       {"k", composition_json(r.k)},
                       {"l", composition_json(r.l)},
                       {"lhs", r.lhs},
                       {"rhs", r.rhs},
                       {"absdiff", r.absdiff},
                       {"bound", r.bound},
                       {"pass", r.pass}});
    }
    out.text = json{{"max_weight", max_weight},
                    {"tol", tol},
                    {"passed", out.passed},
                    {"failed", out.failed},
                    {"reports", arr}}
                   .dump(2) +
               "\n";
    return out;
}

std::string cartier_report(const Composition& k, const Composition& l) {
    std::vector<CartierSummand> summands = cartier_decompose(k, l);
    const bool exact = cartier_exact(k, l, summands);
    json arr = json::array();
    for (const CartierSummand& s : summands) {
        json prov = json::array();
        for (const PartOrigin& o : s.provenance) {
            json entry = json::object();
            if (o.ki >= 0) entry["k"] = o.ki + 1;
            if (o.lj >= 0) entry["l"] = o.lj + 1;
            prov.push_back(entry);
        }
        json arrangement = json::array();
        for (const auto& group : s.arrangement.groups) {
            json g = json::array();
            for (VarId v : group) g.push_back(var_name(v));
            arrangement.push_back(g);
        }
        arr.push_back({{"sigma", composition_json(s.sigma)},
                       {"provenance", prov},
                       {"arrangement", arrangement},
                       {"fn", ratfun_json(s.fn)}});
    }
    return json{{"k", composition_json(k)},
                {"l", composition_json(l)},
                {"summand_count", summands.size()},
                {"exact", exact},
                {"summands", arr}}
               .dump(2) +
           "\n";
}

std::string poset_dot(const StratumPoset& poset) {
    const std::size_t N = poset.nodes.size();
    std::ostringstream os;
    os << "digraph strata {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < N; ++i) {
        os << "  n" << i << " [label=\"" << poset.nodes[i].label << "\\nrank "
           << poset.nodes[i].rank << ", dim " << poset.nodes[i].dim << "\"];\n";
    }
    // cover relations only
    for (std::size_t a = 0; a < N; ++a) {
        for (std::size_t b = 0; b < N; ++b) {
            if (!poset.lt[a][b]) continue;
            bool cover = true;
            for (std::size_t c = 0; c < N && cover; ++c) {
                if (poset.lt[a][c] && poset.lt[c][b]) cover = false;
            }
            if (cover) os << "  n" << a << " -> n" << b << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

std::string strata_report(int n, long long samples, std::uint64_t seed) {
    StratumPoset poset = build_poset(n);
    json nodes = json::array();
    for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
        const StratumNode& node = poset.nodes[i];
        nodes.push_back({{"index", i},
                         {"label", node.label},
                         {"dim", node.dim},
                         {"rank", node.rank}});
    }
    json schedule = json::array();
    for (const auto& level : blowup_schedule(poset)) schedule.push_back(level);
    FlagSchedule fs = flag_partition(poset);
    json flags = json::array();
    for (const auto& chain : fs.flags) flags.push_back(chain);

    json clearance = json::array();
    bool clearance_ok = true;
    for (int mask = 1; mask < (1 << n); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) < 2) continue;
        std::vector<int> I;
        for (int i = 0; i < n; ++i) {
            if (mask & (1 << i)) I.push_back(i + 1);
        }
        ClearanceReport rep = boundary_clearance_check(I, n, samples, seed);
        clearance_ok = clearance_ok && rep.ok();
        clearance.push_back({{"I", I},
                             {"symbolic", rep.symbolic_ok},
                             {"positive", rep.positive_ok},
                             {"samples", rep.samples},
                             {"min_value", rep.min_value}});
    }

    return json{{"n", n},
                {"node_count", poset.nodes.size()},
                {"conditions",
                 {{"smooth", poset.smooth_ok},
                  {"clean", poset.clean_ok},
                  {"closure", poset.closure_ok}}},
                {"nodes", nodes},
                {"blowup_schedule", schedule},
                {"flag_partition", {{"flags", flags}, {"valid", validate_flag_schedule(poset, fs)}}},
                {"clearance", clearance},
                {"clearance_ok", clearance_ok},
                {"dot", poset_dot(poset)}}
               .dump(2) +
           "\n";
}

CoordsOutcome coords_check_report(int max_weight, long long samples, std::uint64_t seed) {
    CoordsOutcome out;
    bool ok = true;

    json pullbacks = json::array();
    for (int w = 2; w <= max_weight; ++w) {
        for (const Composition& k : admissible_compositions(w)) {
            PullbackResult r = pullback_check(k);
            ok = ok && r.equal;
            pullbacks.push_back({{"k", composition_json(k)}, {"equal", r.equal}, {"sign", r.sign}});
        }
    }

    std::mt19937_64 rng(seed);
    const long long den = 1 << 16;
    auto random_increasing = [&](int count) {
        std::uniform_int_distribution<long long> dist(1, den - 1);
        std::vector<long long> nums;
        while (static_cast<int>(nums.size()) < count) {
            long long v = dist(rng);
            if (std::find(nums.begin(), nums.end(), v) == nums.end()) nums.push_back(v);
        }
        std::sort(nums.begin(), nums.end());
        RatVec z;
        for (long long v : nums) {
            Rat r(mpz_class(static_cast<long>(v)), mpz_class(static_cast<long>(den)));
            r.canonicalize();
            z.push_back(r);
        }
        return z;
    };

    long long roundtrip_checked = 0, roundtrip_failed = 0;
    long long split_checked = 0, split_failed = 0;
    for (long long s = 0; s < samples; ++s) {
        for (int total = 2; total <= 8; ++total) {
            RatVec t = random_increasing(total);
            if (cubical_to_simplicial(simplicial_to_cubical(t)) != t) ++roundtrip_failed;
            ++roundtrip_checked;
            for (int nn = 1; nn < total; ++nn) {
                const int mm = total - nn;
                MarkedPointConfig z{t};
                RatVec u = config_cubical(z);
                auto [left, right] = delta_map(z, nn, mm);
                RatVec ul = config_cubical(left);
                RatVec ur = config_cubical(right);
                bool good = std::equal(ul.begin(), ul.end(), u.begin()) &&
                            std::equal(ur.begin(), ur.end(), u.begin() + nn);
                if (!good) ++split_failed;
                ++split_checked;
            }
        }
    }
    ok = ok && roundtrip_failed == 0 && split_failed == 0;

    out.ok = ok;
    out.text = json{{"max_weight", max_weight},
                    {"pullbacks", pullbacks},
                    {"roundtrip", {{"checked", roundtrip_checked}, {"failed", roundtrip_failed}}},
                    {"delta_splitting", {{"checked", split_checked}, {"failed", split_failed}}},
                    {"ok", ok}}
                   .dump(2) +
               "\n";
    return out;
}

}  // namespace mzv
