#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "prefilter/packed_sequence.hpp"

namespace prefilter {

struct sequence_pair {
    packed_sequence text;
    packed_sequence pattern;
};

// A batch of equal-length candidate pairs plus where they came from.
struct pair_dataset {
    std::vector<sequence_pair> pairs;
    std::string source;
    std::size_t length = 0;  // common sequence length m
};

// Read tab-separated pairs, one per line: TEXT '\t' PATTERN. Lines are
// numbered from 1 in errors. Every sequence must have the same length; codec
// failures surface as parse_error carrying the offending line.
pair_dataset load_pairs(std::istream& in, const std::string& source_name = "<stream>");

// Convenience wrapper that opens `path` and loads it.
pair_dataset load_pairs_file(const std::string& path);

// The same TSV shape load_pairs reads, LF line endings, no trailing blank.
void write_pairs(const pair_dataset& dataset, std::ostream& out);

// Inclusive range of edits to plant per generated pair; lo == hi plants a
// constant count.
struct edit_count_spec {
    std::uint32_t lo = 0;
    std::uint32_t hi = 0;
};

struct generator_params {
    std::uint64_t seed = 0;
    std::size_t count = 0;
    std::size_t length = 0;
    edit_count_spec edits;
};

// Deterministically derive `count` pairs of length `length`: a uniform random
// text, then a pattern obtained by planting k edits (k uniform in the edits
// range) of random type and position, re-trimmed or re-padded at the tail to
// keep the length. The planted k only upper-bounds the true distance —
// labels come from the alignment oracle, never from k. Identical params give
// a byte-identical dataset on every platform: all draws come from one
// mt19937_64 stream reduced by modulo, never from distribution objects with
// implementation-defined output.
pair_dataset generate_pairs(const generator_params& params);

}  // namespace prefilter
