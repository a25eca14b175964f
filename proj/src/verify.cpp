#include "slcp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "slcp/csa.hpp"
#include "slcp/lcpbuild.hpp"
#include "slcp/plcprepr.hpp"
#include "slcp/sampledlcp.hpp"
#include "slcp/store.hpp"
#include "slcp/suffixcore.hpp"

namespace slcp {

bool VerifyReport::passed() const { return failures() == 0; }

size_type VerifyReport::failures() const {
    return static_cast<size_type>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

namespace {

class Recorder {
public:
    explicit Recorder(VerifyReport& r) : report_(r) {}

    void add(std::string name, bool pass, std::string detail = {}) {
        report_.checks.push_back({std::move(name), pass, std::move(detail)});
    }

private:
    VerifyReport& report_;
};

std::string at(size_type pos) { return "first mismatch at " + std::to_string(pos); }

template <class A, class B>
size_type first_mismatch(const A& a, const B& b, size_type n) {
    for (size_type i = 1; i <= n; ++i)
        if (static_cast<size_type>(a[i]) != static_cast<size_type>(b[i])) return i;
    return 0;
}

std::vector<std::vector<Symbol>> make_patterns(const Text& text, size_type count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const size_type content = text.size() - 1;
    std::vector<std::vector<Symbol>> out;
    for (size_type t = 0; t < count; ++t) {
        const size_type len = std::uniform_int_distribution<size_type>(1, 20)(rng);
        std::vector<Symbol> p;
        if (t % 2 == 0 && len <= content) {
            // Present: a substring of the text.
            const size_type i = std::uniform_int_distribution<size_type>(1, content - len + 1)(rng);
            for (size_type k = 0; k < len; ++k) p.push_back(text[i + k]);
        } else {
            std::uniform_int_distribution<Symbol> sym(1, static_cast<Symbol>(std::max<size_type>(1, text.sigma())));
            for (size_type k = 0; k < len; ++k) p.push_back(sym(rng));
        }
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

VerifyReport verify_text(const Text& text, const VerifyOptions& options) {
    VerifyReport report;
    Recorder rec(report);
    const RefArrays ref = naive_reference(text, options.limits);
    const size_type n = text.size();
    const size_type runs = ref.runs();

    // --- classical pipeline
    const SuffixArrayData sad = build_suffix_array(text);
    rec.add("suffix array equals oracle", first_mismatch(sad.sa, ref.sa, n) == 0, at(first_mismatch(sad.sa, ref.sa, n)));
    const auto linear = linear_plcp(text, sad.sa, sad.isa);
    rec.add("linear PLCP equals oracle", first_mismatch(linear, ref.plcp, n) == 0,
            at(first_mismatch(linear, ref.plcp, n)));
    size_type comparisons = 0;
    const auto irr_text = irreducible_plcp_from_text(text, sad.sa, &comparisons);
    size_type irr_sum = 0, irr_count = 0;
    for (size_type i = 1; i <= n; ++i)
        if (ref.irreducible[i]) {
            irr_sum += ref.plcp[i];
            ++irr_count;
        }
    rec.add("irreducible PLCP from text equals oracle", first_mismatch(irr_text, ref.plcp, n) == 0,
            at(first_mismatch(irr_text, ref.plcp, n)));
    rec.add("text comparisons <= irreducible sum + n", comparisons <= irr_sum + n,
            std::to_string(comparisons) + " comparisons");

    bool non_decreasing = true, reducible_ok = true;
    for (size_type i = 2; i <= n; ++i) {
        if (ref.plcp[i] + 1 < ref.plcp[i - 1]) non_decreasing = false;
        if (!ref.irreducible[i] && ref.plcp[i] + 1 != ref.plcp[i - 1]) reducible_ok = false;
    }
    rec.add("PLCP[i] >= PLCP[i-1] - 1", non_decreasing);
    rec.add("reducible values equal PLCP[i-1] - 1", reducible_ok);
    rec.add("irreducible count equals BWT runs (oracle)", irr_count == runs,
            std::to_string(irr_count) + " vs R = " + std::to_string(runs));

    // --- CSA
    const size_type d = options.sample_rate;
    const Csa csa = Csa::build(text, sad, d);
    rec.add("CSA run count equals oracle", csa.runs() == runs);
    bool bwt_ok = true, psi_ok = true, lf_ok = true, mono_ok = true;
    for (size_type x = 1; x <= n; ++x) {
        if (csa.bwt(x) != ref.bwt[x]) bwt_ok = false;
        const size_type y = csa.psi(x);
        const size_type expect = ref.sa[x] < n ? ref.isa[ref.sa[x] + 1] : ref.isa[1];
        if (y != expect) psi_ok = false;
        if (csa.lf(y) != x) lf_ok = false;
        if (x > 1 && csa.range_containing(x).contains(x - 1) && csa.psi(x - 1) >= y) mono_ok = false;
    }
    rec.add("BWT equals oracle", bwt_ok);
    rec.add("Psi equals ISA[SA[x] + 1] (cyclic)", psi_ok);
    rec.add("LF inverts Psi", lf_ok);
    rec.add("Psi increasing inside each symbol range", mono_ok);

    bool count_ok = true;
    for (const auto& p : make_patterns(text, options.patterns, options.seed))
        if (csa.count(p) != naive_count(text, p)) count_ok = false;
    rec.add("count equals naive occurrence count", count_ok, std::to_string(options.patterns) + " patterns");

    bool locate_ok = true, locate_steps = true, inverse_ok = true;
    for (size_type x = 1; x <= n; ++x) {
        StepCounter c;
        if (csa.locate(x, &c) != ref.sa[x]) locate_ok = false;
        if (c.psi > d) locate_steps = false;
    }
    for (size_type i = 1; i <= n; ++i)
        if (csa.inverse(i) != ref.isa[i]) inverse_ok = false;
    rec.add("locate equals oracle SA", locate_ok);
    rec.add("locate Psi steps <= d", locate_steps);
    rec.add("inverse equals oracle ISA", inverse_ok);

    bool display_ok = true, display_steps = true;
    std::mt19937_64 rng(options.seed + 1);
    for (size_type t = 0; t < std::min<size_type>(2000, n * 16); ++t) {
        const size_type i = std::uniform_int_distribution<size_type>(1, n)(rng);
        const size_type l = std::uniform_int_distribution<size_type>(1, std::min<size_type>(16, n - i + 1))(rng);
        StepCounter c;
        const auto got = csa.display(i, l, &c);
        for (size_type k = 0; k < l; ++k)
            if (got[k] != text[i + k]) display_ok = false;
        if (c.psi > d + l) display_steps = false;
    }
    rec.add("display equals text", display_ok);
    rec.add("display Psi steps <= d + l", display_steps);

    // --- PLCP from the CSA
    std::vector<size_type> plcp(n + 1, 0);
    size_type delivered = 0;
    bool in_order = true;
    const PlcpBuildStats st = build_plcp_from_csa(csa, [&](size_type i, size_type v) {
        if (i != delivered + 1) in_order = false;
        delivered = i;
        plcp[i] = v;
    });
    rec.add("PLCP from CSA delivered 1..n in order", in_order && delivered == n);
    rec.add("PLCP from CSA equals oracle", first_mismatch(plcp, ref.plcp, n) == 0, at(first_mismatch(plcp, ref.plcp, n)));
    rec.add("CSA irreducible count equals R", st.irreducible_count == runs);
    rec.add("CSA irreducible sum equals oracle", st.irreducible_sum == irr_sum);
    rec.add("Psi evaluations <= 3 (sum + n)", st.psi_evals <= 3 * (irr_sum + n),
            std::to_string(st.psi_evals) + " evaluations");
    const double nn = static_cast<double>(n);
    rec.add("irreducible sum <= 2 n log2 n", static_cast<double>(irr_sum) <= 2 * nn * std::log2(std::max(nn, 2.0)));

    const MinimalClassification cls = classify_minimal_from_csa(csa);
    bool flags_ok = true, chain_ok = true;
    std::vector<size_type> expect_minimal_sa;
    for (size_type i = 1; i <= n; ++i) {
        if (cls.maximal[i] != ref.irreducible[i]) flags_ok = false;
        if (cls.minimal[i]) expect_minimal_sa.push_back(ref.isa[i]);
        if (i < n && !cls.strictly_minimal[i] && ref.plcp[i] != ref.plcp[i + 1] + 1) chain_ok = false;
    }
    std::sort(expect_minimal_sa.begin(), expect_minimal_sa.end());
    rec.add("maximal flags equal oracle irreducible flags", flags_ok);
    rec.add("minimal count equals R", cls.minimal_values.count == runs,
            std::to_string(cls.minimal_values.count) + " vs R = " + std::to_string(runs));
    rec.add("minimal sum equals irreducible sum - (n - R)", cls.minimal_values.sum + (n - runs) == irr_sum);
    rec.add("SA-order minimal positions equal text-order ones", minimal_sa_positions(csa) == expect_minimal_sa);
    rec.add("unsampled positions satisfy PLCP[i] = PLCP[i+1] + 1", chain_ok);

    // --- PLCP representations
    for (PlcpKind kind : {PlcpKind::plain, PlcpKind::rle}) {
        const PlcpRepr repr = build_plcp_repr(csa, kind);
        bool ok = true, lcp_ok = true;
        for (size_type i = 1; i <= n; ++i)
            if (repr.access(csa, i) != ref.plcp[i]) ok = false;
        for (size_type x = 1; x <= n; ++x)
            if (lcp_via_plcp(csa, repr, x) != ref.lcp[x]) lcp_ok = false;
        rec.add(std::string(to_string(kind)) + " access equals oracle PLCP", ok);
        rec.add(std::string(to_string(kind)) + " LCP via locate equals oracle", lcp_ok);
    }
    for (size_type q : {size_type{1}, size_type{4}, size_type{16}}) {
        const PlcpRepr repr = build_plcp_repr(csa, PlcpKind::sampled, q);
        const SampledPlcp& sp = *repr.sampled();
        bool ok = true, budget = true;
        for (size_type i = 1; i <= n; ++i) {
            StepCounter c;
            if (sp.access(csa, i, &c) != ref.plcp[i]) ok = false;
            if (c.comparisons > sp.comparison_budget(i)) budget = false;
        }
        rec.add("plcp-sampled q=" + std::to_string(q) + " access equals oracle PLCP", ok);
        rec.add("plcp-sampled q=" + std::to_string(q) + " comparisons within budget", budget);
    }

    // --- sampled LCP
    const StrictSamples pass1 = collect_strictly_minimal(csa);
    for (size_type dp : {size_type{1}, size_type{4}, size_type{32}, kUnbounded}) {
        const std::string tag = "sampled LCP d'=" + (dp == kUnbounded ? std::string("inf") : std::to_string(dp));
        const SampledLcp slcp = build_sampled_lcp(csa, pass1, dp);
        bool ok = true, walk = true;
        for (size_type x = 1; x <= n; ++x) {
            StepCounter c;
            if (slcp.access(csa, x, &c) != ref.lcp[x]) ok = false;
            if (c.psi >= dp) walk = false;
        }
        bool strict_marked = true;
        for (size_type i = 1; i <= n; ++i)
            if (cls.strictly_minimal[i] && !slcp.is_sampled(ref.isa[i])) strict_marked = false;
        rec.add(tag + " access equals oracle LCP", ok);
        rec.add(tag + " walk length < d'", walk && max_walk_length(slcp, csa) < dp);
        rec.add(tag + " strictly minimal positions marked", strict_marked);
        rec.add(tag + " minimal samples <= R", slcp.minimal_samples() <= runs &&
                                                   slcp.minimal_samples() == cls.strictly_minimal_values.count);
    }

    // --- serialization
    const auto index_bytes = save_index(csa);
    const Csa loaded = load_index(index_bytes);
    bool same_answers = true;
    for (size_type x = 1; x <= n; ++x)
        if (loaded.locate(x) != ref.sa[x] || loaded.psi(x) != csa.psi(x)) same_answers = false;
    rec.add("index round trip is byte-identical", save_index(loaded) == index_bytes);
    rec.add("loaded index answers equal the original", same_answers);
    const StructureFile sf{index_identity(index_bytes), n, build_sampled_lcp(csa, pass1, 4)};
    const auto struct_bytes = save_structure(sf);
    rec.add("structure round trip is byte-identical", save_structure(load_structure(struct_bytes)) == struct_bytes);
    return report;
}

}  // namespace slcp
