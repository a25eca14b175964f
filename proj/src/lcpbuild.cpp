#include "slcp/lcpbuild.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace slcp {

size_type lcp_pair_via_psi(const Csa& csa, size_type b, size_type* psi_evals) {
    if (b < 2 || b > csa.size()) throw std::out_of_range("lcp_pair_via_psi needs 2 <= b <= n");
    size_type a = b - 1;
    size_type k = 0;
    // The terminator range holds a single position, so the loop always ends.
    while (true) {
        const SymbolRange r = csa.range_containing(b);
        if (!r.contains(a)) break;
        std::tie(a, b) = csa.psi_two(a, b, r);
        ++k;
    }
    if (psi_evals) *psi_evals += 2 * k;
    return k;
}

PlcpScanner::PlcpScanner(const Csa& csa) : csa_(&csa) {}

bool PlcpScanner::next() {
    const Csa& csa = *csa_;
    if (i_ == csa.size()) return false;
    if (i_ == 0) {
        // Position 1 has no predecessor; treat it as irreducible.
        i_ = 1;
        x_ = csa.inverse(1);
        irreducible_ = true;
        value_ = x_ == 1 ? 0 : lcp_pair_via_psi(csa, x_, &stats_.psi_evals);
    } else {
        const auto [before, y] = csa.psi_with_previous(x_);
        stats_.psi_evals += before == 0 ? 1 : 2;
        const bool reducible = before != 0 && before == y - 1;
        ++i_;
        x_ = y;
        irreducible_ = !reducible;
        if (reducible) {
            if (value_ == 0) throw InvariantViolation("reducible PLCP value below zero");
            --value_;
        } else {
            value_ = y == 1 ? 0 : lcp_pair_via_psi(csa, y, &stats_.psi_evals);
        }
    }
    if (irreducible_) {
        ++stats_.irreducible_count;
        stats_.irreducible_sum += value_;
    }
    return true;
}

PlcpBuildStats build_plcp_from_csa(const Csa& csa, const PlcpSink& sink) {
    PlcpScanner scan(csa);
    while (scan.next()) sink(scan.position(), scan.value());
    return scan.stats();
}

ValueSummary summarize_values(const Csa& csa) {
    ValueSummary out;
    out.n = csa.size();
    out.runs = csa.runs();
    PlcpScanner scan(csa);
    size_type prev = 0;
    bool have_prev = false;
    while (scan.next()) {
        const size_type v = scan.value();
        if (scan.irreducible()) {
            out.irreducible.count++;
            out.irreducible.sum += v;
            if (have_prev) {
                out.minimal.count++;
                out.minimal.sum += prev;
                if (prev < v + 1) {
                    out.strictly_minimal.count++;
                    out.strictly_minimal.sum += prev;
                }
            }
        }
        prev = v;
        have_prev = true;
    }
    // Position n is minimal and strictly minimal unconditionally.
    out.minimal.count++;
    out.minimal.sum += prev;
    out.strictly_minimal.count++;
    out.strictly_minimal.sum += prev;
    out.psi_evals = scan.stats().psi_evals;
    return out;
}

MinimalClassification classify_minimal_from_csa(const Csa& csa) {
    const size_type n = csa.size();
    MinimalClassification out;
    out.plcp.assign(n + 1, 0);
    out.maximal.assign(n + 1, false);
    out.minimal.assign(n + 1, false);
    out.strictly_minimal.assign(n + 1, false);
    PlcpScanner scan(csa);
    while (scan.next()) {
        out.plcp[scan.position()] = scan.value();
        out.maximal[scan.position()] = scan.irreducible();
    }
    auto add = [](ValueSet& s, size_type v) {
        s.count++;
        s.sum += v;
    };
    for (size_type i = 1; i <= n; ++i) {
        if (out.maximal[i]) add(out.maximal_values, out.plcp[i]);
        if (i == n || out.maximal[i + 1]) {
            out.minimal[i] = true;
            add(out.minimal_values, out.plcp[i]);
            if (i == n || out.plcp[i] < out.plcp[i + 1] + 1) {
                out.strictly_minimal[i] = true;
                add(out.strictly_minimal_values, out.plcp[i]);
            }
        }
    }
    return out;
}

std::vector<size_type> minimal_sa_positions(const Csa& csa) {
    std::vector<size_type> out;
    for (size_type x = 1; x <= csa.size(); ++x) {
        const SymbolRange r = csa.range_containing(x);
        if (x == r.lo || csa.psi(x - 1) != csa.psi(x) - 1) out.push_back(x);
    }
    return out;
}

StrictSamples collect_strictly_minimal(const Csa& csa) {
    StrictSamples out;
    out.n = csa.size();
    PlcpScanner scan(csa);
    LcpSample prev{};
    bool have_prev = false;
    // Position i - 1 is minimal when position i is irreducible.
    while (scan.next()) {
        if (have_prev && scan.irreducible() && prev.value < scan.value() + 1) out.samples.push_back(prev);
        prev = {scan.position(), scan.sa_position(), scan.value()};
        have_prev = true;
    }
    out.samples.push_back(prev);
    out.psi_evals = scan.stats().psi_evals;
    return out;
}

SampledLcp build_sampled_lcp(const Csa& csa, const StrictSamples& pass1, size_type d_prime,
                             const SampledLcpOptions& options, SampledLcpBuildReport* report) {
    if (d_prime == 0) throw std::invalid_argument("d' must be >= 1");
    const size_type n = csa.size();
    if (pass1.n != n || pass1.samples.empty() || pass1.samples.back().text_pos != n)
        throw std::invalid_argument("pass-1 samples do not belong to this index");
    const auto& strict = pass1.samples;
    size_type psi_evals = 0;

    // Pass 2: every unsampled position i lies on a chain PLCP[i] = PLCP[i + 1] + 1
    // up to the next strictly minimal sample.
    std::vector<LcpSample> extra;
    if (d_prime != kUnbounded) {
        size_type next = 0;
        size_type unsampled = 0;
        size_type x = csa.inverse(1);
        for (size_type i = 1; i <= n; ++i) {
            if (i > 1) {
                x = csa.psi(x);
                ++psi_evals;
            }
            while (strict[next].text_pos < i) ++next;
            if (strict[next].text_pos == i) {
                unsampled = 0;
                continue;
            }
            if (unsampled + 1 >= d_prime) {
                extra.push_back({i, x, strict[next].value + (strict[next].text_pos - i)});
                unsampled = 0;
            } else {
                ++unsampled;
            }
        }
    }

    std::vector<LcpSample> all;
    all.reserve(strict.size() + extra.size());
    all.insert(all.end(), strict.begin(), strict.end());
    all.insert(all.end(), extra.begin(), extra.end());
    std::sort(all.begin(), all.end(), [](const LcpSample& a, const LcpSample& b) { return a.sa_pos < b.sa_pos; });
    BitVectorBuilder marks(options.marks, n, options.block);
    std::vector<std::uint64_t> values;
    values.reserve(all.size());
    for (const auto& s : all) {
        marks.push(s.sa_pos);
        values.push_back(s.value);
    }
    if (report) {
        report->minimal_samples = strict.size();
        report->extra_samples = extra.size();
        report->psi_evals = pass1.psi_evals + psi_evals;
        report->peak_aux_bytes = (strict.capacity() + extra.capacity() + all.capacity()) * sizeof(LcpSample) +
                                 values.capacity() * sizeof(std::uint64_t);
    }
    return SampledLcp(n, d_prime, strict.size(), extra.size(), std::move(marks).finish(),
                      DeltaStream(values, 1, options.block));
}

SampledLcp build_sampled_lcp_from_csa(const Csa& csa, size_type d_prime, const SampledLcpOptions& options,
                                      SampledLcpBuildReport* report) {
    if (d_prime == 0) throw std::invalid_argument("d' must be >= 1");
    return build_sampled_lcp(csa, collect_strictly_minimal(csa), d_prime, options, report);
}

size_type d_prime_from_epsilon(size_type n, size_type runs, double eps) {
    if (runs == 0) throw std::invalid_argument("run count must be positive");
    const double d = std::ceil(static_cast<double>(n) / std::pow(static_cast<double>(runs), 1.0 - eps));
    return std::max<size_type>(1, static_cast<size_type>(d));
}

}  // namespace slcp
