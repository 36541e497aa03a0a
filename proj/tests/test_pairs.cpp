#include <doctest.h>

#include <set>
#include <vector>

#include "tmc/abelian.hpp"
#include "tmc/errors.hpp"
#include "tmc/pairs.hpp"

using namespace tmc;

namespace {

std::set<std::int64_t> as_set(const IntInterval& iv) {
    std::set<std::int64_t> s;
    for (std::int64_t x = iv.lo; x <= iv.hi; ++x) s.insert(x);
    return s;
}

}  // namespace

TEST_CASE("interval arithmetic") {
    IntInterval e;
    CHECK(e.empty());
    CHECK(e.count() == 0);
    CHECK(e.str() == "[]");
    IntInterval a{2, 5};
    CHECK(a.count() == 4);
    CHECK(a.contains(2));
    CHECK(a.contains(5));
    CHECK_FALSE(a.contains(6));
    CHECK(a.str() == "[2,5]");
    CHECK(a.intersect({4, 9}) == IntInterval{4, 5});
    CHECK(a.intersect({6, 9}).empty());
    CHECK(a.hull({7, 9}) == IntInterval{2, 9});
    CHECK(a.hull(e) == a);
    CHECK(e.hull(a) == a);
}

TEST_CASE("even counting, including negative and single-point ranges") {
    CHECK(even_count({0, 0}) == 1);
    CHECK(even_count({1, 1}) == 0);
    CHECK(even_count({0, 10}) == 6);
    CHECK(even_count({1, 10}) == 5);
    CHECK(even_count({-3, -2}) == 1);
    CHECK(even_count({-4, 3}) == 4);
    CHECK(even_count({-5, 5}) == 5);
    CHECK(even_count(IntInterval{}) == 0);
    // Against a direct count.
    for (std::int64_t lo = -9; lo <= 9; ++lo) {
        for (std::int64_t hi = lo; hi <= 9; ++hi) {
            std::int64_t direct = 0;
            for (std::int64_t x = lo; x <= hi; ++x) direct += x % 2 == 0;
            REQUIRE(even_count({lo, hi}) == direct);
        }
    }
}

TEST_CASE("base table for small lengths") {
    const std::vector<IntInterval> pairs_expect = {
        {0, 0}, {0, 0}, {0, 1}, {0, 1}, {0, 2},
        {1, 2}, {1, 3}, {1, 3}, {1, 3}, {2, 3},
    };
    for (std::uint64_t n = 0; n <= 9; ++n)
        CHECK(pairs_interval(n) == pairs_expect[n]);

    const std::vector<IntInterval> pure_expect = {
        {0, 0}, {0, 1}, {1, 2}, {1, 3}, {2, 3},
    };
    for (std::uint64_t m = 0; m <= 8; m += 2)
        CHECK(pairs_pure_odd_interval(m) == pure_expect[m / 2]);

    const std::vector<std::uint64_t> p_expect = {1, 2, 4, 6, 8, 6, 8, 10, 8, 6};
    for (std::uint64_t n = 0; n <= 9; ++n)
        CHECK(complexity_fast(n) == p_expect[n]);
}

TEST_CASE("intervals are gap-free and equal the enumerated sets") {
    for (std::size_t n = 0; n <= 256; ++n)
        REQUIRE(pairs_brute(n) == as_set(pairs_interval(n)));
    for (std::size_t m = 4; m <= 256; m += 2)
        REQUIRE(pairs_pure_odd_brute(m) == as_set(pairs_pure_odd_interval(m)));
}

TEST_CASE("pure-odd argument validation") {
    CHECK_THROWS_AS(pairs_pure_odd_brute(7), odd_argument);
    CHECK_THROWS_AS(pairs_pure_odd_brute(2), too_short);
    CHECK_THROWS_AS(pairs_pure_odd_interval(11), odd_argument);
    CHECK_THROWS_AS(pairs_interval((std::uint64_t(1) << 62) + 1), overflow);
    CHECK_THROWS_AS(complexity_fast((std::uint64_t(1) << 62) + 1), overflow);
}

TEST_CASE("spot values of the recursion") {
    CHECK(pairs_interval(11) == IntInterval{2, 4});
    // Against the definition at a distance: endpoints stay within [0, n/2].
    for (std::uint64_t n : {100u, 1000u, 123456u}) {
        IntInterval iv = pairs_interval(n);
        CHECK(0 <= iv.lo);
        CHECK(iv.lo <= iv.hi);
        CHECK(iv.hi <= std::int64_t(n) / 2);
    }
}

TEST_CASE("fast complexity equals the brute count") {
    for (std::uint64_t n = 0; n <= 300; ++n)
        REQUIRE(complexity_fast(n) == complexity_brute(n, 2));
}

TEST_CASE("window sweep equals pointwise evaluation") {
    auto win = pairs_window(2, 400);
    for (std::uint64_t n = 2; n <= 400; ++n)
        REQUIRE(win[n - 2] == pairs_interval(n));

    auto mid = pairs_window(250, 260);
    for (std::uint64_t n = 250; n <= 260; ++n)
        REQUIRE(mid[n - 250] == pairs_interval(n));

    std::uint64_t big = std::uint64_t(1) << 40;
    auto far = pairs_window(big, big + 5);
    for (std::uint64_t n = big; n <= big + 5; ++n)
        REQUIRE(far[n - big] == pairs_interval(n));

    CHECK_THROWS_AS(pairs_window(1, 10), std::invalid_argument);
    CHECK_THROWS_AS(pairs_window(5, 4), std::invalid_argument);
}

TEST_CASE("evaluator wrapper") {
    Evaluator f = fast_evaluator();
    CHECK(f(0) == 1);
    CHECK(f(48) == 12);
    CHECK_THROWS_AS(f(-1), std::invalid_argument);
}

TEST_CASE("huge indices stay in checked range") {
    std::uint64_t n = std::uint64_t(1) << 62;
    CHECK_NOTHROW(complexity_fast(n));
    CHECK_NOTHROW(pairs_interval(n - 1));
    CHECK(complexity_fast(n) % 2 == 0);
}
