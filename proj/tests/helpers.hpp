#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "prefilter/packed_sequence.hpp"

// Small shared kit for the unit suites: sequence shorthand, random inputs,
// and naive reference implementations the bit-parallel code is checked
// against. The references deliberately work on plain strings, character by
// character, sharing no code with the library.
namespace test_helpers {

inline prefilter::packed_sequence seq(const std::string& s) {
    return prefilter::packed_sequence::from_string(s);
}

inline std::string random_dna(std::mt19937_64& rng, std::size_t len,
                              bool with_n = false) {
    std::string s(len, 'A');
    for (auto& c : s) c = with_n ? "ACGTN"[rng() % 5] : "ACGT"[rng() % 4];
    return s;
}

inline bool chars_match(char a, char b) { return a != 'N' && b != 'N' && a == b; }

// Cell (i, j) of the mismatch map straight from the definition; pattern
// positions off either end are mismatches.
inline bool naive_mismatch(const std::string& pattern, const std::string& text,
                           std::ptrdiff_t i, std::ptrdiff_t j) {
    if (i < 0 || i >= std::ptrdiff_t(pattern.size())) return true;
    return !chars_match(pattern[std::size_t(i)], text[std::size_t(j)]);
}

inline std::uint32_t naive_levenshtein(const std::string& a, const std::string& b) {
    std::vector<std::uint32_t> prev(b.size() + 1), cur(b.size() + 1);
    std::iota(prev.begin(), prev.end(), 0u);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = std::uint32_t(i);
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::uint32_t sub =
                prev[j - 1] + (chars_match(a[i - 1], b[j - 1]) ? 0u : 1u);
            cur[j] = std::min({sub, prev[j] + 1u, cur[j - 1] + 1u});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

// Self-deleting temp file path for CLI round trips.
class temp_file {
public:
    explicit temp_file(const std::string& tag) {
        static std::atomic<unsigned> counter{0};
        path_ = std::filesystem::temp_directory_path() /
                ("prefilter_test_" + tag + "_" + std::to_string(counter++) + ".tmp");
    }
    ~temp_file() {
        std::error_code ec;
        std::filesystem::remove(path_, ec);
    }
    const std::string path() const { return path_.string(); }

    std::string slurp() const {
        std::ifstream in(path_, std::ios::binary);
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }

private:
    std::filesystem::path path_;
};

}  // namespace test_helpers
