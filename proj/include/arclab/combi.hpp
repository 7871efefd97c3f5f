// Lexicographic combination enumeration shared by the checkers and the search.
#pragma once

#include <cstdint>
#include <vector>

namespace arclab {

inline std::vector<int> first_combination(int m) {
    std::vector<int> c(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) c[static_cast<std::size_t>(i)] = i;
    return c;
}

/// Advances a strictly increasing index vector over [0, n) to the next
/// combination in lexicographic order. Returns false after the last one.
inline bool next_combination(std::vector<int>& c, int n) {
    const int m = static_cast<int>(c.size());
    for (int i = m - 1; i >= 0; --i) {
        if (c[static_cast<std::size_t>(i)] < n - (m - i)) {
            ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < m; ++j)
                c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

/// Calls fn(comb) for every size-m subset of [0, n) in lexicographic order.
template <class Fn>
void for_each_combination(int n, int m, Fn&& fn) {
    if (m < 0 || m > n) return;
    std::vector<int> c = first_combination(m);
    do {
        fn(static_cast<const std::vector<int>&>(c));
    } while (next_combination(c, n));
}

/// Saturating binomial coefficient, capped at 2^62.
inline std::uint64_t sat_comb(std::uint64_t n, std::uint64_t k) {
    constexpr std::uint64_t cap = 1ull << 62;
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        if (r > cap / (n - k + i)) return cap;
        r = r * (n - k + i) / i;
        if (r >= cap) return cap;
    }
    return r;
}

/// Saturating falling factorial n * (n-1) * ... * (n-k+1).
inline std::uint64_t sat_perm(std::uint64_t n, std::uint64_t k) {
    constexpr std::uint64_t cap = 1ull << 62;
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        if (n - i != 0 && r > cap / (n - i)) return cap;
        r *= (n - i);
        if (r >= cap) return cap;
    }
    return r;
}

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    constexpr std::uint64_t cap = 1ull << 62;
    if (b != 0 && a > cap / b) return cap;
    const std::uint64_t r = a * b;
    return r >= cap ? cap : r;
}

} // namespace arclab
