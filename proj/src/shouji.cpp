#include "prefilter/shouji.hpp"

#include <bit>

#include "prefilter/errors.hpp"

namespace prefilter {

window_zero_table::window_zero_table(unsigned width) : width_(width) {
    if (width < min_window_width || width > max_window_width)
        throw invalid_parameters_error("window width must be in [3, 8], got " +
                                       std::to_string(width));
    for (std::uint32_t v = 0; v < (1u << width); ++v)
        table_[v] = std::uint8_t(width - unsigned(std::popcount(v)));
}

window_choice select_window(const neighborhood_map& map, std::size_t j,
                            const window_zero_table& zeros) {
    const int e = int(map.threshold());
    const unsigned w = zeros.width();
    window_choice best{-e, map.window(-e, j, w), 0};
    best.zeros = zeros.count(best.slice);
    for (int d = -e + 1; d <= e; ++d) {
        const std::uint32_t slice = map.window(d, j, w);
        const unsigned z = zeros.count(slice);
        if (z > best.zeros ||
            (z == best.zeros && (best.slice & 1u) != 0 && (slice & 1u) == 0))
            best = {d, slice, z};
    }
    return best;
}

bool commit_window(bitvector& bv, std::size_t j, const window_choice& choice,
                   const window_zero_table& zeros) {
    const std::uint32_t incumbent = bv.extract(j, zeros.width(), true);
    if (choice.zeros <= zeros.count(incumbent)) return false;
    bv.deposit(j, zeros.width(), choice.slice);
    return true;
}

filter_decision shouji_filter(const packed_sequence& pattern,
                              const packed_sequence& text, std::uint32_t e,
                              unsigned width) {
    if (pattern.size() != text.size())
        throw length_mismatch_error(pattern.size(), text.size());
    const std::size_t m = text.size();
    const window_zero_table zeros(width);
    if (std::size_t(e) >= m)
        return {true, 0, bitvector(m, false)};

    const neighborhood_map map(pattern, text, e);
    bitvector bv(m, true);
    for (std::size_t j = 0; j < m; ++j)
        commit_window(bv, j, select_window(map, j, zeros), zeros);

    const auto ones = std::uint32_t(bv.count_ones());
    return {ones <= e, ones, std::move(bv)};
}

}  // namespace prefilter
