#pragma once

#include <cstdint>

#include "prefilter/bitvector.hpp"

namespace prefilter {

// Outcome of one filter run on one pair. `bits` is the filter's length-m
// tally vector: ones mark positions charged as edits, so edit_estimate is
// always its popcount, and accept holds exactly when edit_estimate <= e.
struct filter_decision {
    bool accept = false;
    std::uint32_t edit_estimate = 0;
    bitvector bits;
};

}  // namespace prefilter
