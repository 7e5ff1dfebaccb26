// Test-only reference computations, kept independent of the library code paths.
#ifndef LAGOBS_TESTS_ORACLES_HPP
#define LAGOBS_TESTS_ORACLES_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace oracle {

// Plain enumeration: every rank vector with a[s] <= min(V[s], V[s+shift]) is
// tried on every page, no memo, no ordering. True iff some choice reaches an
// all-zero page nu+1.
inline bool narrow_possible(const std::vector<std::int64_t>& dims, int maslov, int nu, int page = 1) {
    const int n = static_cast<int>(dims.size()) - 1;
    if (page == nu + 1) {
        for (auto d : dims)
            if (d != 0) return false;
        return true;
    }
    const int shift = page * maslov - 1;
    std::vector<std::int64_t> a(dims.size(), 0), cap(dims.size(), 0);
    for (int s = 0; s <= n; ++s)
        cap[s] = s + shift <= n ? std::min(dims[s], dims[s + shift]) : 0;

    while (true) {
        bool legal = true;
        std::vector<std::int64_t> next(dims.size());
        for (int s = 0; s <= n && legal; ++s) {
            const std::int64_t in = s - shift >= 0 ? a[s - shift] : 0;
            next[s] = dims[s] - a[s] - in;
            legal = next[s] >= 0;
        }
        if (legal && narrow_possible(next, maslov, nu, page + 1)) return true;

        int s = 0;
        while (s <= n && a[s] == cap[s]) a[s++] = 0;
        if (s > n) return false;
        ++a[s];
    }
}

// Vol(S^k) by the recursion Vol(S^k) = 2 pi / (k-1) Vol(S^{k-2}).
inline double sphere_volume(int k) {
    double v = (k % 2 == 0) ? 2.0 : 2.0 * std::numbers::pi;
    for (int j = (k % 2 == 0) ? 2 : 3; j <= k; j += 2) v *= 2.0 * std::numbers::pi / (j - 1);
    return v;
}

}  // namespace oracle

#endif  // LAGOBS_TESTS_ORACLES_HPP
