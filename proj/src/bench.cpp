#include "prefilter/bench.hpp"

#include <algorithm>
#include <chrono>
#include <vector>

#include "prefilter/errors.hpp"

namespace prefilter {

bench_result run_bench(const pair_dataset& dataset, std::uint32_t e,
                       filter_algo algo, unsigned width, unsigned repeats) {
    if (repeats == 0) throw invalid_parameters_error("repeats must be positive");
    if (dataset.pairs.empty()) throw invalid_parameters_error("empty dataset");

    using clock = std::chrono::steady_clock;
    std::vector<double> seconds;
    seconds.reserve(repeats);
    std::size_t accepted = 0;
    // One untimed warmup pass, then the timed repeats.
    for (unsigned r = 0; r <= repeats; ++r) {
        accepted = 0;
        const auto begin = clock::now();
        for (const auto& pair : dataset.pairs)
            accepted += run_filter(algo, pair.pattern, pair.text, e, width).accept;
        const auto end = clock::now();
        if (r > 0)
            seconds.push_back(std::chrono::duration<double>(end - begin).count());
    }

    std::sort(seconds.begin(), seconds.end());
    const double median = seconds[seconds.size() / 2];

    bench_result res;
    res.median_seconds = median;
    res.accepted = accepted;
    if (median > 0.0) {
        res.pairs_per_second = double(dataset.pairs.size()) / median;
        res.bases_per_second = res.pairs_per_second * double(dataset.length);
    }
    return res;
}

}  // namespace prefilter
