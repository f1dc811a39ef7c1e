#include "prefilter/edit_distance.hpp"

#include <algorithm>
#include <vector>

#include "prefilter/errors.hpp"

namespace prefilter {

std::uint32_t edit_distance(const packed_sequence& a, const packed_sequence& b) {
    const std::size_t n = b.size();
    std::vector<std::uint32_t> prev(n + 1), cur(n + 1);
    for (std::size_t j = 0; j <= n; ++j) prev[j] = std::uint32_t(j);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = std::uint32_t(i);
        for (std::size_t j = 1; j <= n; ++j) {
            const std::uint32_t sub =
                prev[j - 1] + (bases_match(a, i - 1, b, j - 1) ? 0u : 1u);
            cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
        }
        std::swap(prev, cur);
    }
    return prev[n];
}

std::optional<std::uint32_t> banded_edit_distance(const packed_sequence& a,
                                                  const packed_sequence& b,
                                                  std::uint32_t e) {
    if (a.size() != b.size()) throw length_mismatch_error(a.size(), b.size());
    const std::size_t m = a.size();

    // For equal lengths the distance never exceeds m, so the band half-width
    // and the saturation cap can both be clamped to m.
    const std::size_t k = std::min<std::size_t>(e, m);
    const std::uint32_t cap = std::uint32_t(k) + 1;

    // Row slots: cell (i, j) lives at t = j - i + k for t in [0, 2k]; index
    // 2k+1 is a permanent out-of-band sentinel so t+1 reads stay in bounds.
    std::vector<std::uint32_t> prev(2 * k + 2, cap), cur(2 * k + 2, cap);
    for (std::size_t j = 0; j <= k && j <= m; ++j) prev[j + k] = std::uint32_t(j);

    for (std::size_t i = 1; i <= m; ++i) {
        const std::size_t jlo = i > k ? i - k : 0;
        const std::size_t jhi = std::min(m, i + k);
        std::fill(cur.begin(), cur.end(), cap);
        std::uint32_t row_min = cap;
        for (std::size_t j = jlo; j <= jhi; ++j) {
            const std::size_t t = j - i + k;
            std::uint32_t v;
            if (j == 0) {
                v = std::uint32_t(i);
            } else {
                const std::uint32_t sub =
                    prev[t] + (bases_match(a, i - 1, b, j - 1) ? 0u : 1u);
                const std::uint32_t del = prev[t + 1] + 1;
                const std::uint32_t ins = (t > 0 ? cur[t - 1] : cap) + 1;
                v = std::min({sub, del, ins});
            }
            v = std::min(v, cap);
            cur[t] = v;
            row_min = std::min(row_min, v);
        }
        if (row_min >= cap) return std::nullopt;  // no path within e survives
        std::swap(prev, cur);
    }

    const std::uint32_t result = prev[k];
    if (result >= cap || result > e) return std::nullopt;
    return result;
}

}  // namespace prefilter
