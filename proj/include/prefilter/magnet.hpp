#pragma once

#include <cstdint>
#include <vector>

#include "prefilter/filter_decision.hpp"
#include "prefilter/neighborhood.hpp"

namespace prefilter {

// A maximal stretch of zeros found inside a search range. len == 0 means the
// range held no zero; start is then the range's lower bound.
struct zero_run {
    std::size_t start = 0;
    std::size_t len = 0;
};

// Longest run of zero bits within [lo, hi] (0-based, inclusive); on equal
// lengths the earliest run wins. An inverted range returns len 0.
zero_run longest_zero_run(const bitvector& bits, std::size_t lo, std::size_t hi);

// One extraction step: which diagonal donated the run, where it sits, and the
// search range it was found in.
struct extraction {
    int diagonal = 0;
    std::size_t start = 0;
    std::size_t len = 0;
    std::size_t lo = 0;
    std::size_t hi = 0;
};

struct magnet_recovery {
    bitvector bits;  // zeros mark recovered match positions
    std::vector<extraction> extractions;
};

// Recursive extract-and-encapsulate pass over the whole map (taken by value:
// extraction retires columns, and the caller's map must stay untouched).
// Each step lets every diagonal nominate its longest zero run in the active
// range; the globally longest wins, ties preferring the smaller |diagonal|,
// then the negative of the two, then the smaller start. The run's columns
// plus one flanking column on each side are masked on all diagonals, and the
// ranges left and right of that hole are searched next, left first, until
// `budget` extractions have been spent or no zeros remain.
magnet_recovery recover_subsequences(neighborhood_map map, std::uint32_t budget);

// Pre-alignment filter built on the recovery pass: with threshold e it runs
// e+1 extractions and accepts when at least m - e match positions were
// recovered. A threshold of e >= m accepts outright.
filter_decision magnet_filter(const packed_sequence& pattern,
                              const packed_sequence& text, std::uint32_t e);

}  // namespace prefilter
