#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace flagmv {

// Binomial coefficient with the convention C(a,b) = 0 for b < 0 or b > a.
// Exact in double up to the sizes used here (d <= 8, so C <= 70).
inline double binom(int a, int b) {
    if (b < 0 || b > a || a < 0) return 0.0;
    if (b > a - b) b = a - b;
    double r = 1.0;
    for (int i = 0; i < b; ++i) r = r * double(a - i) / double(i + 1);
    // values are small integers; round to kill accumulated error
    return double(std::int64_t(r + 0.5));
}

inline int binom_i(int a, int b) { return int(binom(a, b)); }

// All k-element subsets of {0,...,n-1} in lexicographic order.
inline std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = i;
    while (true) {
        out.push_back(s);
        int i = k - 1;
        while (i >= 0 && s[i] == n - k + i) --i;
        if (i < 0) break;
        ++s[i];
        for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    }
    return out;
}

// Lexicographic rank of a sorted k-subset of {0,...,n-1}.
inline int subset_rank(const std::vector<int>& s, int n) {
    int k = int(s.size());
    int rank = 0;
    int prev = -1;
    for (int i = 0; i < k; ++i) {
        for (int v = prev + 1; v < s[i]; ++v)
            rank += binom_i(n - 1 - v, k - 1 - i);
        prev = s[i];
    }
    return rank;
}

// Sign of merging two disjoint sorted index sets: parity of the number of
// pairs (a,b) with a in `lo`, b in `hi`, a > b. Returns 0 if they intersect.
inline int merge_sign(const std::vector<int>& lo, const std::vector<int>& hi) {
    int inversions = 0;
    for (int b : hi) {
        int greater = 0;
        for (int a : lo) {
            if (a == b) return 0;
            if (a > b) ++greater;
        }
        inversions += greater;
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

inline std::vector<int> merge_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size())
        out.push_back(a[i] < b[j] ? a[i++] : b[j++]);
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return out;
}

} // namespace flagmv
