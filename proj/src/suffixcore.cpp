#include "slcp/suffixcore.hpp"

#include <stdexcept>

namespace slcp {

namespace {

// Induced sorting (SA-IS). `s` has length n with s[n-1] == 0 the unique
// smallest symbol; symbols lie in [0, k). Output SA is 0-based.
template <class Char>
void get_buckets(const Char* s, std::int32_t n, std::int32_t k, std::vector<std::int32_t>& bkt, bool end) {
    bkt.assign(k, 0);
    for (std::int32_t i = 0; i < n; ++i) ++bkt[s[i]];
    std::int32_t sum = 0;
    for (std::int32_t c = 0; c < k; ++c) {
        sum += bkt[c];
        bkt[c] = end ? sum : sum - bkt[c];
    }
}

template <class Char>
void sais(const Char* s, std::int32_t* sa, std::int32_t n, std::int32_t k) {
    if (n == 1) {
        sa[0] = 0;
        return;
    }
    std::vector<bool> stype(n, false);
    stype[n - 1] = true;
    for (std::int32_t i = n - 2; i >= 0; --i)
        stype[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && stype[i + 1]);
    auto is_lms = [&](std::int32_t i) { return i > 0 && stype[i] && !stype[i - 1]; };

    std::vector<std::int32_t> bkt;
    auto induce = [&]() {
        get_buckets(s, n, k, bkt, false);
        for (std::int32_t i = 0; i < n; ++i) {
            const std::int32_t j = sa[i] - 1;
            if (sa[i] > 0 && !stype[j]) sa[bkt[s[j]]++] = j;
        }
        get_buckets(s, n, k, bkt, true);
        for (std::int32_t i = n - 1; i >= 0; --i) {
            const std::int32_t j = sa[i] - 1;
            if (sa[i] > 0 && stype[j]) sa[--bkt[s[j]]] = j;
        }
    };

    // Stage 1: sort LMS substrings.
    get_buckets(s, n, k, bkt, true);
    std::fill(sa, sa + n, -1);
    for (std::int32_t i = 1; i < n; ++i)
        if (is_lms(i)) sa[--bkt[s[i]]] = i;
    induce();

    std::int32_t n1 = 0;
    for (std::int32_t i = 0; i < n; ++i)
        if (is_lms(sa[i])) sa[n1++] = sa[i];

    // Name the LMS substrings.
    std::fill(sa + n1, sa + n, -1);
    std::int32_t name = 0, prev = -1;
    for (std::int32_t i = 0; i < n1; ++i) {
        const std::int32_t pos = sa[i];
        bool diff = false;
        for (std::int32_t d = 0; d < n; ++d) {
            if (prev == -1 || s[pos + d] != s[prev + d] || stype[pos + d] != stype[prev + d]) {
                diff = true;
                break;
            }
            if (d > 0 && (is_lms(pos + d) || is_lms(prev + d))) break;
        }
        if (diff) {
            ++name;
            prev = pos;
        }
        sa[n1 + pos / 2] = name - 1;
    }
    for (std::int32_t i = n - 1, j = n - 1; i >= n1; --i)
        if (sa[i] >= 0) sa[j--] = sa[i];

    // Stage 2: sort the reduced problem.
    std::int32_t* s1 = sa + n - n1;
    if (name < n1) {
        sais(s1, sa, n1, name);
    } else {
        for (std::int32_t i = 0; i < n1; ++i) sa[s1[i]] = i;
    }

    // Stage 3: induce the full SA from the sorted LMS suffixes.
    for (std::int32_t i = 1, j = 0; i < n; ++i)
        if (is_lms(i)) s1[j++] = i;
    for (std::int32_t i = 0; i < n1; ++i) sa[i] = s1[sa[i]];
    std::fill(sa + n1, sa + n, -1);
    get_buckets(s, n, k, bkt, true);
    for (std::int32_t i = n1 - 1; i >= 0; --i) {
        const std::int32_t j = sa[i];
        sa[i] = -1;
        sa[--bkt[s[j]]] = j;
    }
    induce();
}

void check_length(size_type n) {
    if (n >= (size_type{1} << 31)) throw std::length_error("text too long for 32-bit suffix arrays");
}

}  // namespace

std::vector<std::uint32_t> build_sa(const Text& text) {
    const size_type n = text.size();
    check_length(n);
    std::vector<std::int32_t> work(n);
    sais(text.symbols().data(), work.data(), static_cast<std::int32_t>(n),
         static_cast<std::int32_t>(text.alphabet_size()));
    std::vector<std::uint32_t> sa(n + 1, 0);
    for (size_type x = 0; x < n; ++x) sa[x + 1] = static_cast<std::uint32_t>(work[x] + 1);
    return sa;
}

SuffixArrayData build_suffix_array(const Text& text) {
    const size_type n = text.size();
    SuffixArrayData out;
    out.sa = build_sa(text);
    out.isa.assign(n + 1, 0);
    for (size_type x = 1; x <= n; ++x) out.isa[out.sa[x]] = static_cast<std::uint32_t>(x);
    out.bwt.assign(n + 1, 0);
    for (size_type x = 1; x <= n; ++x) out.bwt[x] = out.sa[x] == 1 ? text[n] : text[out.sa[x] - 1];
    const size_type a = text.alphabet_size();
    out.c_array.assign(a + 1, 0);
    for (auto c : text.symbols()) ++out.c_array[c + 1];
    for (size_type c = 1; c <= a; ++c) out.c_array[c] += out.c_array[c - 1];
    return out;
}

std::vector<std::uint32_t> linear_plcp(const Text& text, const std::vector<std::uint32_t>& sa,
                                      const std::vector<std::uint32_t>& isa) {
    const size_type n = text.size();
    if (sa.size() != n + 1 || isa.size() != n + 1) throw std::invalid_argument("SA/ISA length mismatch");
    for (size_type x = 1; x <= n; ++x)
        if (sa[x] < 1 || sa[x] > n || isa[sa[x]] != x) throw std::invalid_argument("ISA does not invert SA");
    std::vector<std::uint32_t> plcp(n + 1, 0);
    size_type h = 0;
    for (size_type i = 1; i <= n; ++i) {
        const size_type x = isa[i];
        if (x == 1) {
            plcp[i] = 0;
            h = 0;
            continue;
        }
        const size_type j = sa[x - 1];
        while (i + h <= n && j + h <= n && text[i + h] == text[j + h]) ++h;
        plcp[i] = static_cast<std::uint32_t>(h);
        if (h > 0) --h;
    }
    return plcp;
}

std::vector<std::uint32_t> irreducible_plcp_from_text(const Text& text, const std::vector<std::uint32_t>& sa,
                                                      size_type* comparisons) {
    const size_type n = text.size();
    if (sa.size() != n + 1) throw std::invalid_argument("SA length mismatch");
    // phi[i] = left match of suffix i (0 when suffix i is the smallest)
    std::vector<std::uint32_t> phi(n + 1, 0);
    for (size_type x = 2; x <= n; ++x) phi[sa[x]] = sa[x - 1];
    if (sa[1] < 1 || sa[1] > n) throw std::invalid_argument("SA is not a permutation");

    std::vector<std::uint32_t> plcp(n + 1, 0);
    size_type cmp = 0;
    for (size_type i = 1; i <= n; ++i) {
        const size_type j = phi[i];
        const bool reducible = i > 1 && j > 1 && text[i - 1] == text[j - 1];
        if (reducible) {
            plcp[i] = plcp[i - 1] - 1;
            continue;
        }
        if (j == 0) continue;
        size_type h = 0;
        while (true) {
            if (i + h > n || j + h > n) break;
            ++cmp;
            if (text[i + h] != text[j + h]) break;
            ++h;
        }
        plcp[i] = static_cast<std::uint32_t>(h);
    }
    if (comparisons) *comparisons = cmp;
    return plcp;
}

}  // namespace slcp
