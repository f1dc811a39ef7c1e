#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "prefilter/bitvector.hpp"
#include "prefilter/packed_sequence.hpp"

namespace prefilter {

// Mismatch map between an equal-length pattern and text, restricted to the
// 2e+1 diagonals that any alignment with at most e edits can touch. Diagonal
// d (-e <= d <= +e) holds one bit per text position j: 0 when pattern[j + d]
// equals text[j], 1 otherwise. Cells whose pattern index falls outside the
// sequence are mismatches, so the first |d| bits of a negative diagonal and
// the last d bits of a positive one are always 1. Bits past the end of the
// text are not stored; window() reads them as 1.
class neighborhood_map {
public:
    neighborhood_map(const packed_sequence& pattern, const packed_sequence& text,
                     std::uint32_t e);

    std::size_t length() const { return m_; }
    std::uint32_t threshold() const { return e_; }

    const bitvector& diagonal(int d) const { return diagonals_[std::size_t(d + int(e_))]; }

    // Single cell, 0-based: pattern index i against text index j. Throws
    // out_of_band_error when |i - j| > e.
    bool entry(std::size_t pattern_index, std::size_t text_index) const;

    // `width` consecutive bits of diagonal d starting at text position j,
    // LSB = position j; positions past the text read as 1.
    std::uint32_t window(int d, std::size_t j, unsigned width) const {
        return diagonal(d).extract(j, width, true);
    }

    // Force columns [lo, hi] (0-based, inclusive, clipped to the text) to 1 on
    // every diagonal. The magnet filter uses this on its private copy to
    // retire a consumed stretch of the map.
    void mask_columns(std::size_t lo, std::size_t hi);

private:
    std::size_t m_ = 0;
    std::uint32_t e_ = 0;
    std::vector<bitvector> diagonals_;
};

}  // namespace prefilter
