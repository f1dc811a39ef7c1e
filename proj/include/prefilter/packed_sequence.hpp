#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace prefilter {

// DNA sequence packed two bits per base (A=00, C=01, G=10, T=11) into two
// parallel bit-planes plus a third plane flagging 'N'. The planes are
// LSB-first uint64 arrays like bitvector's storage, which lets the
// neighborhood builder compare whole words with shifts and XORs instead of
// walking characters. An 'N' never matches anything, itself included; its
// code bits are stored as zero and only the n-plane bit carries meaning.
class packed_sequence {
public:
    // Encode an A/C/G/T/N string (upper case). Throws empty_sequence_error on
    // an empty input and illegal_character_error (with the 0-based offset of
    // the first bad byte) on anything outside the alphabet.
    static packed_sequence from_string(std::string_view raw);

    std::string to_string() const;

    std::size_t size() const { return size_; }

    bool is_n(std::size_t i) const {
        return (n_plane_[i >> 6] >> (i & 63)) & 1u;
    }

    // Two-bit code of base i; meaningful only when !is_n(i).
    unsigned code(std::size_t i) const {
        const unsigned lo = unsigned(low_plane_[i >> 6] >> (i & 63)) & 1u;
        const unsigned hi = unsigned(high_plane_[i >> 6] >> (i & 63)) & 1u;
        return hi << 1 | lo;
    }

    char base_at(std::size_t i) const {
        return is_n(i) ? 'N' : "ACGT"[code(i)];
    }

    const std::vector<std::uint64_t>& low_plane() const { return low_plane_; }
    const std::vector<std::uint64_t>& high_plane() const { return high_plane_; }
    const std::vector<std::uint64_t>& n_plane() const { return n_plane_; }

    friend bool operator==(const packed_sequence&, const packed_sequence&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> low_plane_;
    std::vector<std::uint64_t> high_plane_;
    std::vector<std::uint64_t> n_plane_;
};

// True when base i of a and base j of b are the same concrete base; any 'N'
// on either side compares as a mismatch.
inline bool bases_match(const packed_sequence& a, std::size_t i,
                        const packed_sequence& b, std::size_t j) {
    return !a.is_n(i) && !b.is_n(j) && a.code(i) == b.code(j);
}

}  // namespace prefilter
