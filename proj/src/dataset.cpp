#include "prefilter/dataset.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <string>

#include "prefilter/errors.hpp"

namespace prefilter {

pair_dataset load_pairs(std::istream& in, const std::string& source_name) {
    pair_dataset ds;
    ds.source = source_name;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw parse_error(lineno, "expected two tab-separated fields");
        if (line.find('\t', tab + 1) != std::string::npos)
            throw parse_error(lineno, "expected two tab-separated fields, found more");

        sequence_pair pair;
        try {
            pair.text = packed_sequence::from_string({line.data(), tab});
            pair.pattern =
                packed_sequence::from_string({line.data() + tab + 1, line.size() - tab - 1});
        } catch (const error& e) {
            throw parse_error(lineno, e.what());
        }
        if (pair.text.size() != pair.pattern.size())
            throw length_mismatch_error(pair.text.size(), pair.pattern.size(), lineno);
        if (ds.pairs.empty())
            ds.length = pair.text.size();
        else if (pair.text.size() != ds.length)
            throw length_mismatch_error(ds.length, pair.text.size(), lineno);
        ds.pairs.push_back(std::move(pair));
    }
    if (ds.pairs.empty()) throw parse_error(1, "no pairs in input");
    return ds;
}

pair_dataset load_pairs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open pair file: " + path);
    return load_pairs(in, path);
}

void write_pairs(const pair_dataset& dataset, std::ostream& out) {
    for (const auto& pair : dataset.pairs)
        out << pair.text.to_string() << '\t' << pair.pattern.to_string() << '\n';
}

namespace {

char random_base(std::mt19937_64& rng) { return "ACGT"[rng() % 4]; }

// A different base than `old`, so a planted substitution really changes the
// string (interactions between edits can still cancel each other out).
char random_other_base(std::mt19937_64& rng, char old) {
    static const std::string bases = "ACGT";
    const auto idx = bases.find(old);
    return bases[(idx + 1 + rng() % 3) % 4];
}

}  // namespace

pair_dataset generate_pairs(const generator_params& params) {
    if (params.count == 0) throw invalid_parameters_error("pair count must be positive");
    if (params.length == 0)
        throw invalid_parameters_error("sequence length must be positive");
    if (params.edits.lo > params.edits.hi)
        throw invalid_parameters_error("inverted edit range");
    if (params.edits.hi > params.length)
        throw invalid_parameters_error("cannot plant more edits than bases");

    std::mt19937_64 rng(params.seed);
    pair_dataset ds;
    ds.length = params.length;
    ds.source = "gen(seed=" + std::to_string(params.seed) +
                ",count=" + std::to_string(params.count) +
                ",len=" + std::to_string(params.length) +
                ",edits=" + std::to_string(params.edits.lo) + ".." +
                std::to_string(params.edits.hi) + ")";
    ds.pairs.reserve(params.count);

    const std::uint64_t span = std::uint64_t(params.edits.hi) - params.edits.lo + 1;
    for (std::size_t p = 0; p < params.count; ++p) {
        std::string text(params.length, '\0');
        for (auto& c : text) c = random_base(rng);

        std::string pattern = text;
        const std::uint64_t edits = params.edits.lo + rng() % span;
        for (std::uint64_t k = 0; k < edits; ++k) {
            switch (rng() % 3) {
                case 0: {  // substitution
                    const std::size_t pos = rng() % pattern.size();
                    pattern[pos] = random_other_base(rng, pattern[pos]);
                    break;
                }
                case 1: {  // insertion
                    const std::size_t pos = rng() % (pattern.size() + 1);
                    pattern.insert(pattern.begin() + std::ptrdiff_t(pos),
                                   random_base(rng));
                    break;
                }
                case 2: {  // deletion
                    if (pattern.size() == 1) break;
                    const std::size_t pos = rng() % pattern.size();
                    pattern.erase(pattern.begin() + std::ptrdiff_t(pos));
                    break;
                }
            }
        }
        // Restore the common length: drop or top up at the tail.
        if (pattern.size() > params.length) pattern.resize(params.length);
        while (pattern.size() < params.length) pattern.push_back(random_base(rng));

        ds.pairs.push_back({packed_sequence::from_string(text),
                            packed_sequence::from_string(pattern)});
    }
    return ds;
}

}  // namespace prefilter
