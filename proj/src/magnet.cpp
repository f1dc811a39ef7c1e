#include "prefilter/magnet.hpp"

#include <cstdint>

#include "prefilter/errors.hpp"

namespace prefilter {

zero_run longest_zero_run(const bitvector& bits, std::size_t lo, std::size_t hi) {
    zero_run best{lo, 0};
    std::size_t run_start = 0, run_len = 0;
    const std::size_t end = hi < bits.size() ? hi : bits.size() - 1;
    for (std::size_t i = lo; i <= end && lo <= hi; ++i) {
        if (!bits.get(i)) {
            if (run_len == 0) run_start = i;
            if (++run_len > best.len) best = {run_start, run_len};
        } else {
            run_len = 0;
        }
    }
    return best;
}

namespace {

// One extraction plus the recursion into the flanks. Ranges are signed so a
// left flank of a run starting at column 0 or 1 simply comes out inverted.
void exen(neighborhood_map& map, std::int64_t lo, std::int64_t hi,
          std::uint32_t& budget, bitvector& bv, std::vector<extraction>& out) {
    if (budget == 0 || lo > hi) return;
    const auto clo = std::size_t(lo < 0 ? 0 : lo);
    const auto chi = std::size_t(hi >= std::int64_t(map.length())
                                     ? std::int64_t(map.length()) - 1
                                     : hi);
    if (clo > chi) return;

    // Nomination scan in tie-break order (0, -1, +1, -2, +2, ...): only a
    // strictly longer run may displace the incumbent, and within one diagonal
    // longest_zero_run already prefers the earliest run.
    const int e = int(map.threshold());
    zero_run best{};
    int best_d = 0;
    for (int step = 0; step <= e; ++step) {
        for (const int d : {-step, step}) {
            const zero_run run = longest_zero_run(map.diagonal(d), clo, chi);
            if (run.len > best.len) {
                best = run;
                best_d = d;
            }
            if (step == 0) break;
        }
    }
    if (best.len == 0) return;

    --budget;
    for (std::size_t i = best.start; i < best.start + best.len; ++i) bv.set(i, false);
    out.push_back({best_d, best.start, best.len, clo, chi});

    // Retire the run and one flanking column on each side on every diagonal,
    // then work the two leftover ranges, left before right, on what is left
    // of the budget.
    map.mask_columns(best.start > 0 ? best.start - 1 : 0, best.start + best.len);
    exen(map, lo, std::int64_t(best.start) - 2, budget, bv, out);
    exen(map, std::int64_t(best.start + best.len) + 1, hi, budget, bv, out);
}

}  // namespace

magnet_recovery recover_subsequences(neighborhood_map map, std::uint32_t budget) {
    magnet_recovery rec{bitvector(map.length(), true), {}};
    std::uint32_t remaining = budget;
    exen(map, 0, std::int64_t(map.length()) - 1, remaining, rec.bits, rec.extractions);
    return rec;
}

filter_decision magnet_filter(const packed_sequence& pattern,
                              const packed_sequence& text, std::uint32_t e) {
    if (pattern.size() != text.size())
        throw length_mismatch_error(pattern.size(), text.size());
    const std::size_t m = text.size();
    if (std::size_t(e) >= m)
        return {true, 0, bitvector(m, false)};

    auto rec = recover_subsequences(neighborhood_map(pattern, text, e), e + 1);
    const auto estimate = std::uint32_t(rec.bits.count_ones());
    return {estimate <= e, estimate, std::move(rec.bits)};
}

}  // namespace prefilter
