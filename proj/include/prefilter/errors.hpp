#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prefilter {

// Base of every recoverable error raised by this library. Catching this is
// enough to turn any bad-input condition into a clean exit.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A sequence of length zero where at least one base is required.
class empty_sequence_error : public error {
public:
    empty_sequence_error() : error("empty sequence") {}
};

// A byte outside the A/C/G/T/N alphabet.
class illegal_character_error : public error {
public:
    illegal_character_error(std::size_t position, char byte)
        : error("illegal character '" + std::string(1, byte) + "' at position " +
                std::to_string(position)),
          position_(position),
          byte_(byte) {}

    std::size_t position() const noexcept { return position_; }
    char byte() const noexcept { return byte_; }

private:
    std::size_t position_;
    char byte_;
};

// Two sequences that were required to have equal length but do not.
class length_mismatch_error : public error {
public:
    length_mismatch_error(std::size_t a, std::size_t b)
        : error("length mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}

    length_mismatch_error(std::size_t a, std::size_t b, std::size_t line)
        : error("length mismatch at line " + std::to_string(line) + ": " +
                std::to_string(a) + " vs " + std::to_string(b)) {}
};

// An edit threshold too large for the sequence length: the diagonal band
// 2e+1 must fit within the 2m-1 diagonals that exist.
class threshold_too_large_error : public error {
public:
    threshold_too_large_error(std::size_t e, std::size_t m)
        : error("threshold " + std::to_string(e) + " too large for length " +
                std::to_string(m)) {}
};

// A cell outside the band of diagonals kept by a neighborhood map.
class out_of_band_error : public error {
public:
    out_of_band_error(std::size_t pattern_index, std::size_t text_index)
        : error("cell (" + std::to_string(pattern_index) + ", " +
                std::to_string(text_index) + ") lies outside the diagonal band") {}
};

// A malformed line in a pair file. Lines are numbered from 1.
class parse_error : public error {
public:
    parse_error(std::size_t line, const std::string& reason)
        : error("line " + std::to_string(line) + ": " + reason), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// A parameter combination the caller should never pass (zero count,
// unsupported window width, inverted edit range, ...).
class invalid_parameters_error : public error {
public:
    using error::error;
};

}  // namespace prefilter
