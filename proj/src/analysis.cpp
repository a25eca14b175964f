#include "slcp/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "slcp/oracle.hpp"

namespace slcp {

LcpStats compute_stats(const Csa& csa) {
    const ValueSummary v = summarize_values(csa);
    LcpStats s;
    s.n = v.n;
    s.runs = v.runs;
    s.irreducible = v.irreducible;
    s.minimal = v.minimal;
    s.strictly_minimal = v.strictly_minimal;
    if (s.minimal.count != s.runs)
        throw InvariantViolation("minimal value count " + std::to_string(s.minimal.count) + " differs from R = " +
                                 std::to_string(s.runs));
    if (s.minimal.sum + (s.n - s.runs) != s.irreducible.sum)
        throw InvariantViolation("minimal sum is not irreducible sum - (n - R)");
    if (s.irreducible.count != s.runs) throw InvariantViolation("irreducible value count differs from R");
    return s;
}

LcpStats compute_stats(const Text& text) { return compute_stats(Csa::build(text, 64)); }

namespace {

struct ContextStats {
    double entropy;
    double collision;
};

// Accumulates one context's symbol counts into the running sums.
struct Accumulator {
    double entropy_bits = 0;
    double collision = 0;
    size_type total = 0;

    void context(const std::vector<size_type>& counts) {
        size_type occ = 0;
        for (auto c : counts) occ += c;
        double sq = 0;
        for (auto c : counts) {
            entropy_bits += static_cast<double>(c) * std::log2(static_cast<double>(occ) / static_cast<double>(c));
            sq += static_cast<double>(c) * static_cast<double>(c);
        }
        collision += sq / static_cast<double>(occ);
    }
    ContextStats finish() const {
        const double t = static_cast<double>(total);
        return {entropy_bits / t, collision / t};
    }
};

ContextStats context_stats(const Text& text, size_type k) {
    const auto content = text.symbols().first(text.size() - 1);
    const size_type m = content.size();
    if (m <= k) throw std::invalid_argument("text too short for context order " + std::to_string(k));
    Accumulator acc;
    acc.total = m - k;

    const unsigned b = static_cast<unsigned>(std::bit_width(text.sigma()));
    if ((k + 1) * b <= 64) {
        std::vector<std::uint64_t> keys;
        keys.reserve(m - k);
        const std::uint64_t ctx_mask = low_mask(static_cast<unsigned>(k * b));
        std::uint64_t ctx = 0;
        for (size_type p = 0; p < m; ++p) {
            if (p >= k) keys.push_back((ctx << b) | content[p]);
            ctx = k == 0 ? 0 : ((ctx << b) | content[p]) & ctx_mask;
        }
        std::sort(keys.begin(), keys.end());
        std::vector<size_type> counts;
        for (size_type s = 0; s < keys.size();) {
            size_type e = s;
            counts.clear();
            while (e < keys.size() && (keys[e] >> b) == (keys[s] >> b)) {
                size_type f = e;
                while (f < keys.size() && keys[f] == keys[e]) ++f;
                counts.push_back(f - e);
                e = f;
            }
            acc.context(counts);
            s = e;
        }
        return acc.finish();
    }

    std::map<std::vector<Symbol>, std::map<Symbol, size_type>> table;
    for (size_type p = k; p < m; ++p)
        ++table[std::vector<Symbol>(content.begin() + (p - k), content.begin() + p)][content[p]];
    std::vector<size_type> counts;
    for (const auto& [ctx, by_symbol] : table) {
        counts.clear();
        for (const auto& [c, cnt] : by_symbol) counts.push_back(cnt);
        acc.context(counts);
    }
    return acc.finish();
}

}  // namespace

double empirical_entropy(const Text& text, size_type k) { return context_stats(text, k).entropy; }

double effective_alphabet(const Text& text, size_type k) { return 1.0 / context_stats(text, k).collision; }

double estimate_irreducible_sum(size_type n, double sigma_prime, double entropy) {
    if (!(entropy > 0)) throw std::invalid_argument("entropy must be positive for the S' estimate");
    if (sigma_prime < 1) throw std::invalid_argument("sigma' must be >= 1");
    const double nn = static_cast<double>(n);
    return nn * (1.0 - 1.0 / sigma_prime) * std::log2(nn) / entropy - nn / sigma_prime;
}

EntropyEstimate estimate_entropy(const Text& text, size_type k) {
    const ContextStats cs = context_stats(text, k);
    EntropyEstimate e;
    e.k = k;
    e.entropy = cs.entropy;
    e.sigma_prime = 1.0 / cs.collision;
    if (e.entropy <= 1e-12) {
        e.degenerate = true;
        return e;
    }
    const double s = estimate_irreducible_sum(text.size(), std::max(1.0, e.sigma_prime), e.entropy);
    if (s <= 0) {
        e.degenerate = true;
    } else {
        e.s_prime = s;
    }
    return e;
}

ConcatSumResult concat_sum_experiment(const Text& base, size_type copies, bool use_oracle) {
    const SentinelConcat concat = generate_concat(base, copies);
    ConcatSumResult r;
    r.copies = copies;
    r.copy_length = concat.copy_length();
    auto irreducible_sum = [use_oracle](const Text& t) {
        if (!use_oracle) return compute_stats(t).irreducible.sum;
        const RefArrays ref = naive_reference(t);
        size_type s = 0;
        for (size_type i = 1; i <= ref.size(); ++i)
            if (ref.irreducible[i]) s += ref.plcp[i];
        return s;
    };
    r.base_sum = irreducible_sum(base);
    r.measured = irreducible_sum(concat.text);
    r.predicted = r.base_sum + (copies - 1) * r.copy_length;
    r.match = r.measured == r.predicted;
    return r;
}

std::string stats_csv_header() {
    return "name,n,R,k,H_k,sigma_prime,S_prime,S_prime_degenerate,"
           "irreducible_count,irreducible_sum,irreducible_S_per_n,"
           "minimal_count,minimal_sum,minimal_S_per_n,"
           "strict_count,strict_sum,strict_S_per_n";
}

std::string stats_csv_row(const StatsRow& row) {
    const LcpStats& s = row.stats;
    const EntropyEstimate& e = row.estimate;
    std::ostringstream out;
    out.precision(6);
    out << row.name << ',' << s.n << ',' << s.runs << ',' << e.k << ',' << e.entropy << ',' << e.sigma_prime << ','
        << std::fixed << std::setprecision(1) << e.s_prime << std::defaultfloat << std::setprecision(6) << ','
        << (e.degenerate ? 1 : 0);
    for (const ValueSet* v : {&s.irreducible, &s.minimal, &s.strictly_minimal})
        out << ',' << v->count << ',' << v->sum << ',' << LcpStats::per_n(*v, s.n);
    return out.str();
}

std::string stats_json(const std::vector<StatsRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) {
        const LcpStats& s = row.stats;
        auto set = [&s](const ValueSet& v) {
            return nlohmann::json{{"count", v.count}, {"sum", v.sum}, {"S_per_n", LcpStats::per_n(v, s.n)}};
        };
        arr.push_back({{"name", row.name},
                       {"n", s.n},
                       {"R", s.runs},
                       {"k", row.estimate.k},
                       {"H_k", row.estimate.entropy},
                       {"sigma_prime", row.estimate.sigma_prime},
                       {"S_prime", row.estimate.s_prime},
                       {"S_prime_degenerate", row.estimate.degenerate},
                       {"irreducible", set(s.irreducible)},
                       {"minimal", set(s.minimal)},
                       {"strictly_minimal", set(s.strictly_minimal)}});
    }
    return arr.dump(2);
}

}  // namespace slcp
