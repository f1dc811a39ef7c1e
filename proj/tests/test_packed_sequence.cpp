#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "prefilter/errors.hpp"
#include "prefilter/packed_sequence.hpp"

using prefilter::packed_sequence;

TEST_CASE("packed_sequence round trip") {
    const std::string raw = "ACGTNACGT";
    const auto s = packed_sequence::from_string(raw);
    CHECK(s.size() == raw.size());
    CHECK(s.to_string() == raw);
}

TEST_CASE("packed_sequence base codes") {
    const auto s = packed_sequence::from_string("ACGT");
    CHECK(s.code(0) == 0);
    CHECK(s.code(1) == 1);
    CHECK(s.code(2) == 2);
    CHECK(s.code(3) == 3);
    for (std::size_t i = 0; i < 4; ++i) CHECK_FALSE(s.is_n(i));
}

TEST_CASE("packed_sequence flags N positions") {
    const auto s = packed_sequence::from_string("ANGNT");
    CHECK_FALSE(s.is_n(0));
    CHECK(s.is_n(1));
    CHECK_FALSE(s.is_n(2));
    CHECK(s.is_n(3));
    CHECK(s.base_at(1) == 'N');
    CHECK(s.base_at(4) == 'T');
}

TEST_CASE("packed_sequence rejects bad input") {
    CHECK_THROWS_AS(packed_sequence::from_string(""), prefilter::empty_sequence_error);
    try {
        packed_sequence::from_string("ACGX");
        FAIL("expected illegal_character_error");
    } catch (const prefilter::illegal_character_error& e) {
        CHECK(e.position() == 3);
        CHECK(e.byte() == 'X');
    }
    // Lower case is not part of the alphabet.
    CHECK_THROWS_AS(packed_sequence::from_string("acgt"),
                    prefilter::illegal_character_error);
}

TEST_CASE("packed_sequence storage stays near two bits per base") {
    for (const std::size_t len : {1u, 63u, 64u, 65u, 1000u}) {
        std::mt19937_64 rng(len);
        const auto s = packed_sequence::from_string(test_helpers::random_dna(rng, len));
        const std::size_t words = (len + 63) / 64;
        CHECK(s.low_plane().size() == words);
        CHECK(s.high_plane().size() == words);
        CHECK(s.n_plane().size() == words);
    }
}

TEST_CASE("packed_sequence round trips long random strings") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 50; ++iter) {
        const auto raw = test_helpers::random_dna(rng, 1 + rng() % 300, true);
        CHECK(packed_sequence::from_string(raw).to_string() == raw);
    }
}

TEST_CASE("bases_match treats N as matching nothing") {
    using prefilter::bases_match;
    const auto a = packed_sequence::from_string("ANA");
    const auto b = packed_sequence::from_string("ANT");
    CHECK(bases_match(a, 0, b, 0));
    CHECK_FALSE(bases_match(a, 1, b, 1));  // N vs N is still a mismatch
    CHECK_FALSE(bases_match(a, 2, b, 2));
    CHECK_FALSE(bases_match(a, 1, b, 0));
}
