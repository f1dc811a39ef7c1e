#include "prefilter/neighborhood.hpp"

#include "prefilter/errors.hpp"

namespace prefilter {

namespace {

// Bit j of the result is bit j + shift of the input; vacated high bits are 0.
std::vector<std::uint64_t> shift_toward_lsb(const std::vector<std::uint64_t>& words,
                                            std::size_t shift) {
    const std::size_t q = shift >> 6;
    const unsigned r = unsigned(shift & 63);
    std::vector<std::uint64_t> out(words.size(), 0);
    for (std::size_t k = 0; k < words.size(); ++k) {
        std::uint64_t w = 0;
        if (k + q < words.size()) w = words[k + q] >> r;
        if (r != 0 && k + q + 1 < words.size()) w |= words[k + q + 1] << (64 - r);
        out[k] = w;
    }
    return out;
}

// Bit j of the result is bit j - shift of the input; vacated low bits are 0.
std::vector<std::uint64_t> shift_toward_msb(const std::vector<std::uint64_t>& words,
                                            std::size_t shift) {
    const std::size_t q = shift >> 6;
    const unsigned r = unsigned(shift & 63);
    std::vector<std::uint64_t> out(words.size(), 0);
    for (std::size_t k = 0; k < words.size(); ++k) {
        std::uint64_t w = 0;
        if (k >= q) w = words[k - q] << r;
        if (r != 0 && k >= q + 1) w |= words[k - q - 1] >> (64 - r);
        out[k] = w;
    }
    return out;
}

}  // namespace

neighborhood_map::neighborhood_map(const packed_sequence& pattern,
                                   const packed_sequence& text, std::uint32_t e) {
    if (pattern.size() != text.size())
        throw length_mismatch_error(pattern.size(), text.size());
    m_ = text.size();
    // The grid only has 2m-1 diagonals, so a band of 2e+1 must satisfy e <= m-1.
    if (std::size_t(e) >= m_) throw threshold_too_large_error(e, m_);
    e_ = e;

    diagonals_.reserve(2 * std::size_t(e) + 1);
    for (int d = -int(e); d <= int(e); ++d) {
        // Align pattern bit j+d with text bit j, then any differing plane bit
        // or any N on either side marks a mismatch.
        std::vector<std::uint64_t> plo, phi, pn;
        if (d >= 0) {
            plo = shift_toward_lsb(pattern.low_plane(), std::size_t(d));
            phi = shift_toward_lsb(pattern.high_plane(), std::size_t(d));
            pn = shift_toward_lsb(pattern.n_plane(), std::size_t(d));
        } else {
            plo = shift_toward_msb(pattern.low_plane(), std::size_t(-d));
            phi = shift_toward_msb(pattern.high_plane(), std::size_t(-d));
            pn = shift_toward_msb(pattern.n_plane(), std::size_t(-d));
        }
        const auto& tlo = text.low_plane();
        const auto& thi = text.high_plane();
        const auto& tn = text.n_plane();
        std::vector<std::uint64_t> mis(tlo.size());
        for (std::size_t k = 0; k < mis.size(); ++k)
            mis[k] = (plo[k] ^ tlo[k]) | (phi[k] ^ thi[k]) | pn[k] | tn[k];

        bitvector diag = bitvector::from_words(std::move(mis), m_);
        // Cells whose pattern index j+d leaves [0, m) are mismatches.
        if (d > 0)
            diag.set_range(m_ - std::size_t(d), std::size_t(d));
        else if (d < 0)
            diag.set_range(0, std::size_t(-d));
        diagonals_.push_back(std::move(diag));
    }
}

bool neighborhood_map::entry(std::size_t pattern_index, std::size_t text_index) const {
    const auto diff = std::int64_t(pattern_index) - std::int64_t(text_index);
    if (diff > std::int64_t(e_) || diff < -std::int64_t(e_))
        throw out_of_band_error(pattern_index, text_index);
    return diagonal(int(diff)).get(text_index);
}

void neighborhood_map::mask_columns(std::size_t lo, std::size_t hi) {
    if (lo > hi || lo >= m_) return;
    for (auto& diag : diagonals_) diag.set_range(lo, hi - lo + 1);
}

}  // namespace prefilter
