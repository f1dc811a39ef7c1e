#include "prefilter/evaluate.hpp"

#include <exception>
#include <mutex>
#include <thread>

#include "prefilter/edit_distance.hpp"
#include "prefilter/errors.hpp"
#include "prefilter/magnet.hpp"

namespace prefilter {

filter_decision run_filter(filter_algo algo, const packed_sequence& pattern,
                           const packed_sequence& text, std::uint32_t e,
                           unsigned width) {
    switch (algo) {
        case filter_algo::shouji: return shouji_filter(pattern, text, e, width);
        case filter_algo::magnet: return magnet_filter(pattern, text, e);
    }
    throw invalid_parameters_error("unknown filter algorithm");
}

void parallel_for_pairs(std::size_t n, unsigned threads,
                        const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(threads, n);
    std::exception_ptr first_failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            const std::size_t begin = n * t / workers;
            const std::size_t end = n * (t + 1) / workers;
            try {
                for (std::size_t i = begin; i < end; ++i) fn(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                if (!first_failure) first_failure = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_failure) std::rethrow_exception(first_failure);
}

eval_result evaluate(const pair_dataset& dataset, const eval_options& options) {
    eval_result result;
    result.outcomes.resize(dataset.pairs.size());

    parallel_for_pairs(dataset.pairs.size(), options.threads, [&](std::size_t i) {
        const auto& pair = dataset.pairs[i];
        const filter_decision decision =
            run_filter(options.algo, pair.pattern, pair.text, options.e, options.width);
        const auto distance = banded_edit_distance(pair.pattern, pair.text, options.e);
        result.outcomes[i] = {decision.accept, decision.edit_estimate,
                              distance.has_value(), distance.value_or(0)};
    });

    eval_report& rep = result.report;
    rep.e = options.e;
    rep.total = dataset.pairs.size();
    for (const auto& oc : result.outcomes) {
        (oc.oracle_within ? rep.oracle_accepted : rep.oracle_rejected)++;
        (oc.filter_accept ? rep.filter_accepted : rep.filter_rejected)++;
        if (oc.filter_accept && !oc.oracle_within) rep.falsely_accepted++;
        if (!oc.filter_accept && oc.oracle_within) rep.falsely_rejected++;
    }
    rep.fa_rate = rep.oracle_rejected == 0
                      ? 0.0
                      : double(rep.falsely_accepted) / double(rep.oracle_rejected);
    rep.fr_rate = rep.oracle_accepted == 0
                      ? 0.0
                      : double(rep.falsely_rejected) / double(rep.oracle_accepted);
    return result;
}

}  // namespace prefilter
