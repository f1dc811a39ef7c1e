#pragma once

#include <cstdint>

#include "prefilter/evaluate.hpp"

namespace prefilter {

struct bench_result {
    double median_seconds = 0.0;  // one full pass over the dataset
    double pairs_per_second = 0.0;
    double bases_per_second = 0.0;
    std::size_t accepted = 0;  // accept count of one pass, also a sink so the
                               // timed work cannot be optimized away
};

// Time `repeats` full filter passes over the dataset and report the median
// pass. Single-threaded on purpose: one filter call per pair is the unit the
// throughput numbers describe.
bench_result run_bench(const pair_dataset& dataset, std::uint32_t e,
                       filter_algo algo, unsigned width, unsigned repeats);

}  // namespace prefilter
