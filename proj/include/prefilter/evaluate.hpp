#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "prefilter/dataset.hpp"
#include "prefilter/filter_decision.hpp"
#include "prefilter/shouji.hpp"

namespace prefilter {

enum class filter_algo { shouji, magnet };

// Dispatch one pair through the chosen filter. `width` only matters for the
// sliding-window filter.
filter_decision run_filter(filter_algo algo, const packed_sequence& pattern,
                           const packed_sequence& text, std::uint32_t e,
                           unsigned width = default_window_width);

// Confusion counts of a filter against the banded alignment oracle at the
// same threshold. "Accepted" for the oracle means within e edits. The rates
// are each falsely-classified count over the opposite oracle class, 0 when
// that class is empty.
struct eval_report {
    std::uint32_t e = 0;
    std::size_t total = 0;
    std::size_t oracle_accepted = 0;
    std::size_t oracle_rejected = 0;
    std::size_t filter_accepted = 0;
    std::size_t filter_rejected = 0;
    std::size_t falsely_accepted = 0;
    std::size_t falsely_rejected = 0;
    double fa_rate = 0.0;
    double fr_rate = 0.0;
};

// Per-pair verdicts in dataset order. oracle_distance is meaningful only
// when oracle_within is true.
struct pair_outcome {
    bool filter_accept = false;
    std::uint32_t edit_estimate = 0;
    bool oracle_within = false;
    std::uint32_t oracle_distance = 0;
};

struct eval_options {
    std::uint32_t e = 0;
    filter_algo algo = filter_algo::shouji;
    unsigned width = default_window_width;
    unsigned threads = 1;
};

struct eval_result {
    eval_report report;
    std::vector<pair_outcome> outcomes;
};

// Run filter and oracle over every pair and tally the confusion counts.
// Pairs are partitioned into contiguous chunks, one worker per chunk, and
// every outcome lands at its pair's index, so the result does not depend on
// the thread count.
eval_result evaluate(const pair_dataset& dataset, const eval_options& options);

// Static-chunk parallel loop used by evaluate() and the CLI: fn(i) is called
// exactly once for every i in [0, n), partitioned over `threads` workers.
void parallel_for_pairs(std::size_t n, unsigned threads,
                        const std::function<void(std::size_t)>& fn);

}  // namespace prefilter
