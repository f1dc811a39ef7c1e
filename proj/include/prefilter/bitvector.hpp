#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace prefilter {

// Fixed-length bit sequence stored LSB-first in 64-bit words: bit i lives in
// word i/64 at bit offset i%64. Bits at index >= size() are not stored and are
// kept zero in the last word, so popcount over the words is exact; readers
// that conceptually continue past the end use extract() with pad = 1.
class bitvector {
public:
    bitvector() = default;

    explicit bitvector(std::size_t nbits, bool value = false)
        : nbits_(nbits), words_(word_count(nbits), value ? ~std::uint64_t{0} : 0) {
        clear_tail();
    }

    static bitvector from_words(std::vector<std::uint64_t> words, std::size_t nbits) {
        bitvector bv;
        bv.nbits_ = nbits;
        bv.words_ = std::move(words);
        bv.words_.resize(word_count(nbits), 0);
        bv.clear_tail();
        return bv;
    }

    std::size_t size() const { return nbits_; }

    bool get(std::size_t i) const {
        assert(i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i, bool value) {
        assert(i < nbits_);
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    // Set bits [pos, pos + len) to 1; the range is clipped to the vector.
    void set_range(std::size_t pos, std::size_t len) {
        if (pos >= nbits_) return;
        const std::size_t end = pos + len < nbits_ ? pos + len : nbits_;
        for (std::size_t w = pos >> 6; w <= (end - 1) >> 6; ++w) {
            const std::size_t lo = w << 6;
            const std::size_t from = pos > lo ? pos - lo : 0;
            const std::size_t to = end - lo < 64 ? end - lo : 64;
            words_[w] |= range_mask(from, to);
        }
    }

    void fill(bool value) {
        for (auto& w : words_) w = value ? ~std::uint64_t{0} : 0;
        clear_tail();
    }

    std::size_t count_ones() const {
        std::size_t n = 0;
        for (const auto w : words_) n += std::size_t(std::popcount(w));
        return n;
    }

    std::size_t count_zeros() const { return nbits_ - count_ones(); }

    // The `width` bits starting at pos, LSB = bit at pos. Positions at or past
    // size() read as `pad`.
    std::uint32_t extract(std::size_t pos, unsigned width, bool pad) const {
        assert(width >= 1 && width <= 32);
        std::uint64_t bits = 0;
        if (pos < nbits_) {
            const std::size_t w = pos >> 6;
            const unsigned off = unsigned(pos & 63);
            bits = words_[w] >> off;
            if (off != 0 && w + 1 < words_.size()) bits |= words_[w + 1] << (64 - off);
        }
        const std::uint64_t mask = width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
        bits &= mask;
        if (pad && pos + width > nbits_) {
            const std::size_t stored = pos < nbits_ ? nbits_ - pos : 0;
            bits |= mask & ~((std::uint64_t{1} << stored) - 1);
        }
        return std::uint32_t(bits);
    }

    // Overwrite bits [pos, pos + width) with the low bits of `slice`; bits that
    // would land past the end are dropped.
    void deposit(std::size_t pos, unsigned width, std::uint32_t slice) {
        for (unsigned k = 0; k < width && pos + k < nbits_; ++k)
            set(pos + k, (slice >> k) & 1u);
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    // "0100..." with index 0 first; handy in tests and diagnostics.
    std::string to_string() const {
        std::string s(nbits_, '0');
        for (std::size_t i = 0; i < nbits_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    friend bool operator==(const bitvector&, const bitvector&) = default;

private:
    static std::size_t word_count(std::size_t nbits) { return (nbits + 63) / 64; }

    // 1-bits at offsets [from, to) within one word.
    static std::uint64_t range_mask(std::size_t from, std::size_t to) {
        const std::uint64_t hi = to == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << to) - 1;
        return hi & ~((std::uint64_t{1} << from) - 1);
    }

    void clear_tail() {
        if (nbits_ & 63) words_.back() &= (std::uint64_t{1} << (nbits_ & 63)) - 1;
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace prefilter
