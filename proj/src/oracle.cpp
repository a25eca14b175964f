#include "slcp/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace slcp {

size_type RefArrays::runs() const {
    size_type r = 0;
    for (size_type x = 1; x < bwt.size(); ++x)
        if (x == 1 || bwt[x] != bwt[x - 1]) ++r;
    return r;
}

size_type naive_lcp_pair(const Text& text, size_type i, size_type j) {
    const size_type n = text.size();
    if (i < 1 || j < 1 || i > n || j > n) throw std::out_of_range("suffix position out of range");
    size_type k = 0;
    while (i + k <= n && j + k <= n && text[i + k] == text[j + k]) ++k;
    return k;
}

RefArrays naive_reference(const Text& text, const OracleLimits& limits) {
    const size_type n = text.size();
    if (n - 1 > limits.max_sa_length) throw LimitExceeded("text exceeds the oracle suffix-sorting limit");
    if (n - 1 > limits.max_lcp_length) throw LimitExceeded("text exceeds the oracle pairwise-LCP limit");
    const auto sym = text.symbols();

    RefArrays ref;
    std::vector<size_type> order(n);
    std::iota(order.begin(), order.end(), size_type{1});
    std::sort(order.begin(), order.end(), [&](size_type a, size_type b) {
        return std::lexicographical_compare(sym.begin() + (a - 1), sym.end(), sym.begin() + (b - 1), sym.end());
    });
    ref.sa.assign(n + 1, 0);
    std::copy(order.begin(), order.end(), ref.sa.begin() + 1);
    ref.isa.assign(n + 1, 0);
    for (size_type x = 1; x <= n; ++x) ref.isa[ref.sa[x]] = x;

    ref.lcp.assign(n + 1, 0);
    for (size_type x = 2; x <= n; ++x) ref.lcp[x] = naive_lcp_pair(text, ref.sa[x - 1], ref.sa[x]);
    ref.plcp.assign(n + 1, 0);
    for (size_type x = 1; x <= n; ++x) ref.plcp[ref.sa[x]] = ref.lcp[x];

    ref.bwt.assign(n + 1, 0);
    for (size_type x = 1; x <= n; ++x) ref.bwt[x] = ref.sa[x] == 1 ? text[n] : text[ref.sa[x] - 1];

    // PLCP[i] is reducible iff i > 1, it has a left match j > 1, and T[i-1] = T[j-1].
    ref.irreducible.assign(n + 1, false);
    for (size_type i = 1; i <= n; ++i) {
        const size_type x = ref.isa[i];
        if (i == 1 || x == 1) {
            ref.irreducible[i] = true;
            continue;
        }
        const size_type j = ref.sa[x - 1];
        ref.irreducible[i] = !(j > 1 && text[i - 1] == text[j - 1]);
    }
    return ref;
}

RefArrays oracle_concat_reference(const SentinelConcat& concat, const OracleLimits& limits) {
    return naive_reference(concat.text, limits);
}

size_type naive_count(const Text& text, std::span<const Symbol> pattern) {
    const auto sym = text.symbols().first(text.size() - 1);
    if (pattern.empty()) return text.size();
    if (pattern.size() > sym.size()) return 0;
    size_type count = 0;
    for (size_type i = 0; i + pattern.size() <= sym.size(); ++i)
        if (std::equal(pattern.begin(), pattern.end(), sym.begin() + i)) ++count;
    return count;
}

}  // namespace slcp
