#pragma once

#include <cstdint>
#include <optional>

#include "prefilter/packed_sequence.hpp"

namespace prefilter {

// Exact unit-cost Levenshtein distance (substitution, insertion and deletion
// each cost 1). Lengths may differ. An 'N' never matches, so a substitution
// is charged even against another 'N'.
std::uint32_t edit_distance(const packed_sequence& a, const packed_sequence& b);

// Banded variant for equal-length sequences: walks only the 2e+1 diagonals an
// alignment within e edits can use. Returns the distance when it is <= e and
// std::nullopt otherwise. Throws length_mismatch_error on unequal lengths.
std::optional<std::uint32_t> banded_edit_distance(const packed_sequence& a,
                                                  const packed_sequence& b,
                                                  std::uint32_t e);

}  // namespace prefilter
