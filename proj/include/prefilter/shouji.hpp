#pragma once

#include <array>
#include <cstdint>

#include "prefilter/filter_decision.hpp"
#include "prefilter/neighborhood.hpp"

namespace prefilter {

inline constexpr unsigned min_window_width = 3;
inline constexpr unsigned default_window_width = 4;
inline constexpr unsigned max_window_width = 8;

// Zero-bit counts for every value a window slice can take, so the inner loop
// never pays for a popcount. Widths 3..8 keep the table at most 256 entries.
class window_zero_table {
public:
    explicit window_zero_table(unsigned width);

    unsigned width() const { return width_; }

    unsigned count(std::uint32_t slice) const { return table_[slice]; }

private:
    unsigned width_;
    std::array<std::uint8_t, 256> table_{};
};

// The slice picked for one search window: its diagonal, its bits (LSB = the
// window's first column) and its zero count.
struct window_choice {
    int diagonal = 0;
    std::uint32_t slice = 0;
    unsigned zeros = 0;
};

// Scan diagonals -e..+e over the window starting at text column j and keep
// the slice with the most zeros. A tie is broken in favor of the first
// scanned candidate whose leading bit (the window's first column) is zero;
// with no such candidate the first scanned one stays.
window_choice select_window(const neighborhood_map& map, std::size_t j,
                            const window_zero_table& zeros);

// Overwrite bits [j, j + width) of bv with the chosen slice when the slice
// has strictly more zeros than the span it replaces. Returns whether the
// write happened. Past-the-end bits count as 1 on both sides of the
// comparison and are never stored.
bool commit_window(bitvector& bv, std::size_t j, const window_choice& choice,
                   const window_zero_table& zeros);

// Sliding-window pre-alignment filter. Builds the 2e+1 diagonal mismatch
// vectors, slides a width-wide window across all m start columns, greedily
// keeps the zero-richest slice per window, and accepts when the ones left in
// the tally vector do not exceed e. A threshold of e >= m accepts outright:
// every pair of length-m sequences is within m edits.
filter_decision shouji_filter(const packed_sequence& pattern,
                              const packed_sequence& text, std::uint32_t e,
                              unsigned width = default_window_width);

}  // namespace prefilter
