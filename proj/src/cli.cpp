#include "prefilter/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "prefilter/bench.hpp"
#include "prefilter/dataset.hpp"
#include "prefilter/edit_distance.hpp"
#include "prefilter/errors.hpp"
#include "prefilter/evaluate.hpp"

namespace prefilter {
namespace {

using nlohmann::ordered_json;

// Bad flag combinations discovered after CLI11 parsing; reported like CLI11's
// own errors and mapped to exit code 1.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct cli_options {
    std::string pairs_file;
    std::uint64_t seed = 0;
    std::size_t count = 0;
    std::size_t length = 0;
    std::string edits_spec;
    std::optional<std::uint32_t> e;
    std::optional<double> e_percent;
    std::string algo = "shouji";
    unsigned width = default_window_width;
    unsigned threads = 1;
    unsigned repeats = 3;
    std::string report_file;
    std::string len_list;
    std::string e_list;
    bool verbose = false;
};

std::uint32_t parse_u32(const std::string& s, const std::string& flag) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw usage_error(flag + " expects an unsigned integer, got '" + s + "'");
    return std::uint32_t(std::stoul(s));
}

// --edits grammar: "N" plants exactly N edits, "LO..HI" draws uniformly from
// the inclusive range.
edit_count_spec parse_edits(const std::string& spec) {
    const auto dots = spec.find("..");
    if (dots == std::string::npos) {
        const auto n = parse_u32(spec, "--edits");
        return {n, n};
    }
    const edit_count_spec range{parse_u32(spec.substr(0, dots), "--edits"),
                                parse_u32(spec.substr(dots + 2), "--edits")};
    if (range.lo > range.hi)
        throw usage_error("--edits range is inverted: '" + spec + "'");
    return range;
}

std::vector<std::uint32_t> parse_u32_list(const std::string& spec,
                                          const std::string& flag) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_u32(item, flag));
    if (out.empty()) throw usage_error(flag + " expects a comma-separated list");
    return out;
}

std::uint32_t resolve_threshold(const cli_options& o, std::size_t m) {
    if (o.e && o.e_percent)
        throw usage_error("--e and --e-percent are mutually exclusive");
    if (o.e) return *o.e;
    if (o.e_percent) return std::uint32_t(std::floor(double(m) * *o.e_percent / 100.0));
    throw usage_error("one of --e or --e-percent is required");
}

struct resolved_input {
    pair_dataset dataset;
    std::uint32_t e = 0;
};

// Pairs come from --pairs (a file, or "-" for stdin) or are generated from
// --seed/--count/--len. The threshold can only be resolved once the common
// length is known, and the generator's default edit range 0..2e needs the
// threshold, hence the combined resolution.
resolved_input resolve_input(const cli_options& o, std::istream& in) {
    if (!o.pairs_file.empty()) {
        pair_dataset ds = o.pairs_file == "-" ? load_pairs(in, "<stdin>")
                                              : load_pairs_file(o.pairs_file);
        const auto e = resolve_threshold(o, ds.length);
        return {std::move(ds), e};
    }
    if (o.count == 0 || o.length == 0)
        throw usage_error("provide --pairs FILE or both --count and --len");
    const auto e = resolve_threshold(o, o.length);
    const auto default_hi = std::uint32_t(std::min<std::uint64_t>(2 * std::uint64_t(e), o.length));
    const edit_count_spec edits =
        o.edits_spec.empty() ? edit_count_spec{0, default_hi} : parse_edits(o.edits_spec);
    return {generate_pairs({o.seed, o.count, o.length, edits}), e};
}

void emit_report(const ordered_json& j, const std::string& report_file,
                 std::ostream& err) {
    if (report_file.empty()) {
        err << j.dump(2) << '\n';
        return;
    }
    std::ofstream f(report_file, std::ios::binary);
    if (!f) throw error("cannot open report file: " + report_file);
    f << j.dump(2) << '\n';
}

filter_algo algo_from_name(const std::string& name) {
    return name == "magnet" ? filter_algo::magnet : filter_algo::shouji;
}

int run_filter_cmd(const cli_options& o, std::istream& in, std::ostream& out,
                   std::ostream& err) {
    auto [ds, e] = resolve_input(o, in);
    const std::size_t n = ds.pairs.size();
    std::vector<std::string> lines(n);

    if (o.algo == "oracle") {
        parallel_for_pairs(n, o.threads, [&](std::size_t i) {
            const auto& pair = ds.pairs[i];
            const auto dist = banded_edit_distance(pair.pattern, pair.text, e);
            std::string line = dist ? "1" : "0";
            if (o.verbose)
                line += '\t' + (dist ? std::to_string(*dist) : std::string("-"));
            lines[i] = std::move(line);
        });
    } else {
        const filter_algo algo = algo_from_name(o.algo);
        parallel_for_pairs(n, o.threads, [&](std::size_t i) {
            const auto& pair = ds.pairs[i];
            const auto decision = run_filter(algo, pair.pattern, pair.text, e, o.width);
            std::string line = decision.accept ? "1" : "0";
            if (o.verbose) line += '\t' + std::to_string(decision.edit_estimate);
            lines[i] = std::move(line);
        });
    }

    std::size_t accepted = 0;
    for (const auto& line : lines) {
        out << line << '\n';
        if (line.front() == '1') ++accepted;
    }
    const ordered_json summary{{"command", "filter"}, {"algo", o.algo},
                               {"width", o.width},    {"m", ds.length},
                               {"source", ds.source}, {"e", e},
                               {"total", n},          {"accepted", accepted},
                               {"rejected", n - accepted}};
    emit_report(summary, o.report_file, err);
    return 0;
}

int run_eval_cmd(const cli_options& o, std::istream& in, std::ostream& out,
                 std::ostream& err) {
    auto [ds, e] = resolve_input(o, in);
    const eval_result res =
        evaluate(ds, {e, algo_from_name(o.algo), o.width, o.threads});

    for (const auto& oc : res.outcomes) {
        out << (oc.filter_accept ? '1' : '0');
        if (o.verbose) {
            out << '\t' << oc.edit_estimate << '\t';
            if (oc.oracle_within)
                out << oc.oracle_distance;
            else
                out << '-';
        }
        out << '\n';
    }

    const eval_report& rep = res.report;
    const ordered_json report{{"command", "eval"},
                              {"algo", o.algo},
                              {"width", o.width},
                              {"m", ds.length},
                              {"source", ds.source},
                              {"e", rep.e},
                              {"total", rep.total},
                              {"oracle_accepted", rep.oracle_accepted},
                              {"oracle_rejected", rep.oracle_rejected},
                              {"filter_accepted", rep.filter_accepted},
                              {"filter_rejected", rep.filter_rejected},
                              {"falsely_accepted", rep.falsely_accepted},
                              {"falsely_rejected", rep.falsely_rejected},
                              {"fa_rate", rep.fa_rate},
                              {"fr_rate", rep.fr_rate}};
    emit_report(report, o.report_file, err);
    return 0;
}

int run_gen_cmd(const cli_options& o, std::ostream& out) {
    if (o.count == 0 || o.length == 0)
        throw usage_error("gen requires --count and --len");
    if (o.edits_spec.empty()) throw usage_error("gen requires --edits");
    const pair_dataset ds =
        generate_pairs({o.seed, o.count, o.length, parse_edits(o.edits_spec)});
    if (o.pairs_file.empty() || o.pairs_file == "-") {
        write_pairs(ds, out);
        return 0;
    }
    std::ofstream f(o.pairs_file, std::ios::binary);
    if (!f) throw error("cannot open output file: " + o.pairs_file);
    write_pairs(ds, f);
    return 0;
}

int run_bench_cmd(const cli_options& o, std::ostream& out, std::ostream& err) {
    const auto lens = parse_u32_list(o.len_list, "--len");
    const auto es = parse_u32_list(o.e_list, "--e");
    const std::size_t count = o.count != 0 ? o.count : 10000;
    const filter_algo algo = algo_from_name(o.algo);

    std::ostringstream csv;
    csv << "algo,m,e,count,repeats,median_seconds,pairs_per_second,bases_per_second\n";
    // median_seconds[e index][len index], for the scaling table below
    std::vector<std::vector<double>> medians(es.size(),
                                             std::vector<double>(lens.size(), 0.0));
    for (std::size_t li = 0; li < lens.size(); ++li) {
        for (std::size_t ei = 0; ei < es.size(); ++ei) {
            const edit_count_spec edits =
                o.edits_spec.empty()
                    ? edit_count_spec{0, std::uint32_t(std::min<std::uint64_t>(
                                             2 * std::uint64_t(es[ei]), lens[li]))}
                    : parse_edits(o.edits_spec);
            const pair_dataset ds =
                generate_pairs({o.seed, count, lens[li], edits});
            const bench_result r = run_bench(ds, es[ei], algo, o.width, o.repeats);
            medians[ei][li] = r.median_seconds;
            csv << o.algo << ',' << lens[li] << ',' << es[ei] << ',' << count << ','
                << o.repeats << ',' << r.median_seconds << ',' << r.pairs_per_second
                << ',' << r.bases_per_second << '\n';
        }
    }
    if (lens.size() > 1) {
        csv << "\nalgo,e,m_from,m_to,time_ratio\n";
        for (std::size_t ei = 0; ei < es.size(); ++ei)
            for (std::size_t li = 0; li + 1 < lens.size(); ++li)
                csv << o.algo << ',' << es[ei] << ',' << lens[li] << ','
                    << lens[li + 1] << ','
                    << medians[ei][li + 1] / medians[ei][li] << '\n';
    }

    if (o.report_file.empty()) {
        out << csv.str();
    } else {
        std::ofstream f(o.report_file, std::ios::binary);
        if (!f) throw error("cannot open report file: " + o.report_file);
        f << csv.str();
    }
    (void)err;
    return 0;
}

void add_input_options(CLI::App* cmd, cli_options& o) {
    cmd->add_option("--pairs", o.pairs_file,
                    "Tab-separated TEXT\\tPATTERN file, or - for stdin");
    cmd->add_option("--seed", o.seed, "Generator seed (with --count/--len)");
    cmd->add_option("--count", o.count, "Number of pairs to generate");
    cmd->add_option("--len", o.length, "Length of generated sequences");
    cmd->add_option("--edits", o.edits_spec,
                    "Edits to plant per generated pair: N or LO..HI (default 0..2e)");
}

void add_threshold_options(CLI::App* cmd, cli_options& o) {
    cmd->add_option("--e", o.e, "Edit threshold (absolute)");
    cmd->add_option("--e-percent", o.e_percent,
                    "Edit threshold as a percentage of the length, floored");
}

void add_filtering_options(CLI::App* cmd, cli_options& o,
                           const std::vector<std::string>& algos) {
    cmd->add_option("--algo", o.algo, "Algorithm to run")
        ->check(CLI::IsMember(algos));
    cmd->add_option("--width", o.width, "Search window width")
        ->check(CLI::Range(int(min_window_width), int(max_window_width)));
}

}  // namespace

int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Bit-parallel pre-alignment filtering for candidate sequence pairs",
                 "prefilter"};
    app.require_subcommand(1);
    cli_options o;

    CLI::App* filter_cmd = app.add_subcommand(
        "filter", "Print one accept/reject bit per pair");
    add_input_options(filter_cmd, o);
    add_threshold_options(filter_cmd, o);
    add_filtering_options(filter_cmd, o, {"shouji", "magnet", "oracle"});
    filter_cmd->add_option("--threads", o.threads, "Worker threads")
        ->check(CLI::Range(1, 4096));
    filter_cmd->add_option("--report", o.report_file, "Write the JSON summary here");
    filter_cmd->add_flag("--verbose", o.verbose, "Append the edit estimate per pair");

    CLI::App* eval_cmd = app.add_subcommand(
        "eval", "Compare a filter against the alignment oracle");
    add_input_options(eval_cmd, o);
    add_threshold_options(eval_cmd, o);
    add_filtering_options(eval_cmd, o, {"shouji", "magnet"});
    eval_cmd->add_option("--threads", o.threads, "Worker threads")
        ->check(CLI::Range(1, 4096));
    eval_cmd->add_option("--report", o.report_file, "Write the JSON report here");
    eval_cmd->add_flag("--verbose", o.verbose,
                       "Append estimate and oracle distance per pair");

    CLI::App* gen_cmd = app.add_subcommand(
        "gen", "Write a generated pair file (--pairs names the output)");
    add_input_options(gen_cmd, o);

    CLI::App* bench_cmd = app.add_subcommand(
        "bench", "Time filter passes over generated data, CSV out");
    bench_cmd->add_option("--len", o.len_list, "Sequence lengths, comma-separated")
        ->required();
    bench_cmd->add_option("--e", o.e_list, "Edit thresholds, comma-separated")
        ->required();
    bench_cmd->add_option("--count", o.count, "Pairs per dataset (default 10000)");
    bench_cmd->add_option("--seed", o.seed, "Generator seed");
    bench_cmd->add_option("--edits", o.edits_spec,
                          "Planted edits: N or LO..HI (default 0..2e)");
    bench_cmd
        ->add_option("--algo", o.algo, "Filter to time")
        ->check(CLI::IsMember({"shouji", "magnet"}));
    bench_cmd->add_option("--width", o.width, "Search window width")
        ->check(CLI::Range(int(min_window_width), int(max_window_width)));
    bench_cmd->add_option("--repeats", o.repeats, "Timed passes per point")
        ->check(CLI::Range(1, 1000));
    bench_cmd->add_option("--report", o.report_file, "Write the CSV here");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(filter_cmd)) return run_filter_cmd(o, in, out, err);
        if (app.got_subcommand(eval_cmd)) return run_eval_cmd(o, in, out, err);
        if (app.got_subcommand(gen_cmd)) return run_gen_cmd(o, out);
        return run_bench_cmd(o, out, err);
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace prefilter
