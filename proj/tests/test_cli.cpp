#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <vector>

#include "helpers.hpp"
#include "prefilter/cli.hpp"

using prefilter::run_cli;
using test_helpers::temp_file;

namespace {

struct cli_run {
    int code = 0;
    std::string out;
    std::string err;
};

cli_run run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = run_cli(std::move(args), in, out, err);
    return {code, out.str(), err.str()};
}

const std::string golden_line = "GGTGCAGAGCTC\tGGTGAGAGTTGT\n";

}  // namespace

TEST_CASE("no subcommand is a usage error") {
    const auto r = run({});
    CHECK(r.code == 1);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("help exits cleanly") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("filter") != std::string::npos);
}

TEST_CASE("unknown flag is a usage error") {
    const auto r = run({"filter", "--frobnicate"});
    CHECK(r.code == 1);
}

TEST_CASE("filter accepts the golden pair from stdin") {
    const auto r = run({"filter", "--pairs", "-", "--e", "3"}, golden_line);
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");
    // Summary JSON lands on stderr when --report is absent.
    const auto summary = nlohmann::json::parse(r.err);
    CHECK(summary["total"] == 1);
    CHECK(summary["accepted"] == 1);
    CHECK(summary["e"] == 3);
}

TEST_CASE("filter verbose appends the edit estimate") {
    const auto r =
        run({"filter", "--pairs", "-", "--e", "3", "--verbose"}, golden_line);
    CHECK(r.code == 0);
    CHECK(r.out == "1\t3\n");

    const auto magnet =
        run({"filter", "--pairs", "-", "--e", "3", "--algo", "magnet", "--verbose"},
            golden_line);
    CHECK(magnet.out == "1\t3\n");
}

TEST_CASE("the exact aligner is exposed as an algorithm") {
    const auto reject = run(
        {"filter", "--pairs", "-", "--e", "3", "--algo", "oracle", "--verbose"},
        golden_line);
    CHECK(reject.code == 0);
    CHECK(reject.out == "0\t-\n");

    const auto accept = run(
        {"filter", "--pairs", "-", "--e", "4", "--algo", "oracle", "--verbose"},
        golden_line);
    CHECK(accept.out == "1\t4\n");
}

TEST_CASE("gen writes a deterministic pair file") {
    const std::vector<std::string> args{"gen",    "--count", "20",  "--len",
                                        "50",     "--seed",  "9",   "--edits",
                                        "0..4"};
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    std::size_t lines = 0;
    for (const char c : a.out) lines += c == '\n';
    CHECK(lines == 20);

    const auto first = a.out.substr(0, a.out.find('\n'));
    const auto tab = first.find('\t');
    REQUIRE(tab != std::string::npos);
    CHECK(tab == 50);
    CHECK(first.size() == 101);
}

TEST_CASE("gen requires an edit spec") {
    const auto r = run({"gen", "--count", "5", "--len", "10"});
    CHECK(r.code == 1);
}

TEST_CASE("bad edit specs are usage errors") {
    CHECK(run({"gen", "--count", "5", "--len", "10", "--edits", "x"}).code == 1);
    CHECK(run({"gen", "--count", "5", "--len", "10", "--edits", "5..2"}).code == 1);
}

TEST_CASE("gen to file feeds filter") {
    temp_file pairs("pairs");
    const auto g = run({"gen", "--count", "10", "--len", "30", "--seed", "4",
                        "--edits", "1", "--pairs", pairs.path()});
    CHECK(g.code == 0);

    const auto f = run({"filter", "--pairs", pairs.path(), "--e", "2"});
    CHECK(f.code == 0);
    std::size_t lines = 0;
    for (const char c : f.out) lines += c == '\n';
    CHECK(lines == 10);
}

TEST_CASE("eval emits per-pair lines plus a parseable report") {
    const auto r = run({"eval", "--count", "50", "--len", "40", "--seed", "7",
                        "--e", "4"});
    CHECK(r.code == 0);
    std::size_t lines = 0;
    for (const char c : r.out) lines += c == '\n';
    CHECK(lines == 50);

    const auto rep = nlohmann::json::parse(r.err);
    CHECK(rep["command"] == "eval");
    CHECK(rep["total"] == 50);
    CHECK(rep["e"] == 4);
    CHECK(rep["oracle_accepted"].get<std::size_t>() +
              rep["oracle_rejected"].get<std::size_t>() ==
          50);
    CHECK(rep["filter_accepted"].get<std::size_t>() +
              rep["filter_rejected"].get<std::size_t>() ==
          50);
    CHECK(rep.contains("fa_rate"));
    CHECK(rep.contains("fr_rate"));
}

TEST_CASE("report flag moves the JSON to a file") {
    temp_file report("report");
    const auto r = run({"eval", "--count", "10", "--len", "30", "--seed", "1",
                        "--e", "2", "--report", report.path()});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    const auto rep = nlohmann::json::parse(report.slurp());
    CHECK(rep["total"] == 10);
}

TEST_CASE("percent thresholds are floored") {
    const auto r = run({"eval", "--count", "5", "--len", "100", "--seed", "2",
                        "--e-percent", "5"});
    CHECK(nlohmann::json::parse(r.err)["e"] == 5);

    const auto floored = run({"eval", "--count", "5", "--len", "150", "--seed",
                              "2", "--e-percent", "7"});
    CHECK(nlohmann::json::parse(floored.err)["e"] == 10);
}

TEST_CASE("threshold flags are validated") {
    CHECK(run({"eval", "--count", "5", "--len", "20"}).code == 1);
    CHECK(run({"eval", "--count", "5", "--len", "20", "--e", "2", "--e-percent",
               "5"})
              .code == 1);
}

TEST_CASE("data problems exit with code 2") {
    CHECK(run({"filter", "--pairs", "/nonexistent.tsv", "--e", "3"}).code == 2);
    CHECK(run({"filter", "--pairs", "-", "--e", "3"}, "ACGT\n").code == 2);
    CHECK(run({"filter", "--pairs", "-", "--e", "3"}, "ACGT\tACG\n").code == 2);
}

TEST_CASE("thread count does not change any output byte") {
    const std::vector<std::string> base{"eval",   "--count", "300",    "--len",
                                        "60",     "--seed",  "31",     "--e",
                                        "3",      "--algo",  "magnet", "--verbose"};
    auto with_threads = [&](const std::string& k) {
        auto args = base;
        args.push_back("--threads");
        args.push_back(k);
        return run(args);
    };
    const auto one = with_threads("1");
    const auto many = with_threads("5");
    CHECK(one.code == 0);
    CHECK(one.out == many.out);
    CHECK(one.err == many.err);
}

TEST_CASE("bench prints a CSV with a scaling block") {
    const auto r = run({"bench", "--len", "32,64", "--e", "2", "--count", "60",
                        "--repeats", "1", "--seed", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("algo,m,e,count,repeats,median_seconds", 0) == 0);
    CHECK(r.out.find("\nalgo,e,m_from,m_to,time_ratio\n") != std::string::npos);
    CHECK(r.out.find("shouji,32,2,60,1,") != std::string::npos);
    CHECK(r.out.find("shouji,64,2,60,1,") != std::string::npos);
}

TEST_CASE("bench rejects a missing grid") {
    CHECK(run({"bench", "--len", "32"}).code == 1);
    CHECK(run({"bench", "--e", "2"}).code == 1);
}
