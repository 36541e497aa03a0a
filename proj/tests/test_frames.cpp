#include <doctest.h>

#include <algorithm>
#include <bit>
#include <optional>

#include "tmc/errors.hpp"
#include "tmc/frames.hpp"
#include "tmc/thue_morse.hpp"

using namespace tmc;

namespace {

// Independent slow reference: grow the word one forced letter at a time.
// A letter is forced when exactly one of the two extensions is a factor.
Word greedy_forced_extension(Word w) {
    for (;;) {
        bool moved = false;
        Word left0;
        left0.push_back(0);
        left0.append(w);
        Word left1;
        left1.push_back(1);
        left1.append(w);
        if (is_factor(left0) != is_factor(left1)) {
            w = is_factor(left0) ? left0 : left1;
            moved = true;
        }
        Word right0 = w;
        right0.push_back(0);
        Word right1 = w;
        right1.push_back(1);
        if (is_factor(right0) != is_factor(right1)) {
            w = is_factor(right0) ? right0 : right1;
            moved = true;
        }
        if (!moved) return w;
    }
}

}  // namespace

TEST_CASE("frame factorizations split against the block pattern") {
    Word w = Word::from_string("0110010");
    auto f = frame_at(w, 2, 2);
    REQUIRE(f.has_value());
    CHECK(f->prefix.str() == "01");
    REQUIRE(f->blocks.size() == 1);
    CHECK(f->blocks[0].str() == "1001");
    CHECK(f->suffix.str() == "0");
    CHECK_FALSE(frame_at(w, 2, 0).has_value());
    CHECK_FALSE(frame_at(w, 2, 1).has_value());

    // Alignment arithmetic: pieces always reassemble to w.
    for (int q = 0; q <= 3; ++q) {
        for (std::size_t off = 0; off < (std::size_t(1) << q); ++off) {
            auto g = frame_at(w, q, off);
            if (!g) continue;
            Word back = g->prefix;
            for (const Word& b : g->blocks) back.append(b);
            back.append(g->suffix);
            CHECK(back == w);
        }
    }
    CHECK_THROWS_AS(frame_at(w, 1, 2), std::invalid_argument);
}

TEST_CASE("reading frames of single letters and short factors") {
    CHECK(reading_frames(Word::from_string("0"), 0) ==
          std::set<std::size_t>{0});
    CHECK(reading_frames(Word::from_string("01"), 1) ==
          std::set<std::size_t>{0, 1});
    CHECK(reading_frames(Word::from_string("00"), 1) ==
          std::set<std::size_t>{1});
    CHECK(reading_frames(Word::from_string("0110010"), 2) ==
          std::set<std::size_t>{2});
    CHECK_THROWS_AS(reading_frames(Word::from_string("000"), 1), not_a_factor);
}

TEST_CASE("every factor has at least one frame at every level it fits") {
    for (std::size_t n = 1; n <= 32; ++n) {
        for (const Word& w : *enumerate_factors(n)) {
            for (int q = 0; (std::size_t(1) << q) <= 2 * n; ++q)
                REQUIRE_FALSE(reading_frames(w, q).empty());
        }
    }
}

TEST_CASE("extensible 2-frame is unique and matches the fill rule") {
    CHECK(extensible_2frame(Word::from_string("0110")) == 0);
    CHECK(extensible_2frame(Word::from_string("0100")) == 1);
    CHECK(extensible_2frame(Word::from_string("0101")) == 0);
    CHECK(extensible_2frame(Word::from_string("1010")) == 0);
    CHECK_THROWS_AS(extensible_2frame(Word::from_string("011")), too_short);
    CHECK_THROWS_AS(extensible_2frame(Word::from_string("0000")), not_a_factor);

    // The first-two-pairs shortcut agrees with the frame search everywhere.
    for (std::size_t n = 4; n <= 128; ++n) {
        for (const Word& w : *enumerate_factors(n)) {
            std::size_t off = extensible_2frame(w);
            bool pin = (w.bit(0) == w.bit(1) || w.bit(2) == w.bit(3));
            CHECK(off == (pin ? 1u : 0u));
        }
    }
}

TEST_CASE("fill completes partial blocks with forced letters") {
    CHECK(fill_frame(Word::from_string("0100")).str() == "101001");
    CHECK(fill_frame(Word::from_string("0110010")).str() == "01100101");
    CHECK(fill_frame(Word::from_string("00")).str() == "1001");
    CHECK(fill_frame(Word::from_string("011")).str() == "0110");
    CHECK_THROWS_AS(fill_frame(Word::from_string("0")), too_short);
    CHECK_THROWS_AS(fill_frame(Word::from_string("01")), frame_ambiguous);
    CHECK_THROWS_AS(fill_frame(Word::from_string("010")), frame_ambiguous);

    // Fills are factors, have even length, and contain the input.
    for (std::size_t n = 4; n <= 64; ++n) {
        for (const Word& w : *enumerate_factors(n)) {
            Word f = fill_frame(w);
            REQUIRE(f.size() % 2 == 0);
            REQUIRE(is_factor(f));
            REQUIRE(f.size() <= w.size() + 2);
        }
    }
}

TEST_CASE("merf reproduces the worked examples") {
    std::vector<MerfStep> steps;
    auto r = merf(Word::from_string("0110010"), steps);
    CHECK(r.extended.str() == "0110100110010110");
    CHECK(r.frame_size == 8);
    CHECK(r.original_offset == 6);
    REQUIRE(steps.size() == 3);
    CHECK(steps[0].filled.str() == "01100101");
    CHECK(steps[0].preimage.str() == "0100");
    CHECK(steps[1].filled.str() == "101001");
    CHECK(steps[1].preimage.str() == "110");
    CHECK(steps[2].filled.str() == "0110");
    CHECK(steps[2].preimage.str() == "01");

    CHECK(merf(Word::from_string("011")).extended.str() == "0110");
    CHECK(merf(Word::from_string("011")).frame_size == 2);
    CHECK(merf(Word::from_string("01")).extended.str() == "01");
    CHECK(merf(Word::from_string("01")).frame_size == 1);
    CHECK(merf(Word::from_string("0")).extended.str() == "0");

    CHECK_THROWS_AS(merf(Word{}), too_short);
    CHECK_THROWS_AS(merf(Word::from_string("0101010")), not_a_factor);
}

TEST_CASE("merf equals the greedy forced-extension oracle") {
    for (std::size_t n = 1; n <= 40; ++n) {
        for (const Word& w : *enumerate_factors(n)) {
            auto r = merf(w);
            Word g = greedy_forced_extension(w);
            REQUIRE(r.extended == g);
            REQUIRE(r.extended.subword(r.original_offset, n) == w);
        }
    }
}

TEST_CASE("merf output sits on a power-of-two grid at the stated frame") {
    for (std::size_t n = 1; n <= 48; ++n) {
        for (const Word& w : *enumerate_factors(n)) {
            auto r = merf(w);
            std::uint64_t fsz = r.frame_size;
            // frame_size is a power of two and divides the extension length.
            CHECK((fsz & (fsz - 1)) == 0);
            CHECK(r.extended.size() % fsz == 0);
            CHECK(is_factor(r.extended));
            // Frame lower bound: at least half the next power of two below n.
            std::uint64_t q = std::bit_width(std::uint64_t(n)) - 1;
            if (q >= 1) CHECK(fsz >= (std::uint64_t(1) << (q - 1)));
        }
    }
}

TEST_CASE("determined letters and their closed-form bounds") {
    CHECK(determined_letters(Word::from_string("001101")) == 10);
    CHECK(determined_letters(Word::from_string("01101001")) == 0);

    CHECK(unique_extension_bounds(1) == std::pair<std::uint64_t, std::uint64_t>{0, 0});
    CHECK(unique_extension_bounds(2) == std::pair<std::uint64_t, std::uint64_t>{0, 2});
    CHECK(unique_extension_bounds(3) == std::pair<std::uint64_t, std::uint64_t>{0, 1});
    CHECK(unique_extension_bounds(4) == std::pair<std::uint64_t, std::uint64_t>{0, 4});
    CHECK(unique_extension_bounds(6) == std::pair<std::uint64_t, std::uint64_t>{0, 10});
    CHECK_THROWS_AS(unique_extension_bounds(0), std::invalid_argument);

    for (std::uint64_t n = 4; n <= 48; ++n) {
        auto [lo, hi] = unique_extension_bounds(n);
        std::uint64_t best_lo = ~std::uint64_t(0), best_hi = 0;
        for (const Word& w : *enumerate_factors(n)) {
            std::uint64_t d = determined_letters(w);
            best_lo = std::min(best_lo, d);
            best_hi = std::max(best_hi, d);
        }
        REQUIRE(best_lo == lo);
        REQUIRE(best_hi == hi);
    }
}

TEST_CASE("extension ratio extrema with witnesses") {
    auto r = extension_ratio_extrema(10);
    CHECK(r.min_num == 1);
    CHECK(r.min_den == 1);
    CHECK(r.max_num == 16);
    CHECK(r.max_den == 5);
    // Witnesses attain the stated ratios.
    auto me = merf(r.max_witness);
    CHECK(me.extended.size() * std::size_t(r.max_den) ==
          std::size_t(r.max_num) * r.max_witness.size());
    CHECK(merf(r.min_witness).extended == r.min_witness);
    CHECK_THROWS_AS(extension_ratio_extrema(3), std::invalid_argument);
}
