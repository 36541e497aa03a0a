#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tmc/pairs.hpp"

namespace tmc {

/// The values P[2^q + 1] .. P[2^(q+1) + 1] and whether they read the same in
/// both directions.
struct PalindromeBlock {
    bool is_palindrome = false;
    std::vector<std::int64_t> values;
};
PalindromeBlock palindrome_block(int q, const Evaluator& eval);

/// Checks P[n+1] - P[n] is -2, 0 or 2 on [n_lo, n_hi] (n_lo >= 4).
struct StepReport {
    bool ok = true;
    std::optional<std::int64_t> first_violation;
};
StepReport step_check(std::int64_t n_lo, std::int64_t n_hi,
                      const Evaluator& eval);

/// The chain a_0 = 3, a_{i+1} = 16 a_i - 5 with P[a_i] = 6 + 6i, as
/// (index, value) pairs for i = 0..k. Each step re-validates the interval
/// shape that drives the growth (pairs(a) = [lo, hi], pairs(a + 1) =
/// [lo, hi + 1], a and hi odd, lo even). Throws overflow past 2^62.
std::vector<std::pair<std::int64_t, std::int64_t>> unbounded_witness(int k);

/// P at the points 2^m + 1 (expected constant 6) and at
/// c_m = (2*4^m + 4) / 3 (expected to grow without bound), for m = 1..m_max.
struct SpecialPoints {
    struct Point {
        int m = 0;
        std::int64_t index = 0;
        std::int64_t value = 0;
    };
    std::vector<Point> power_points;  // index 2^m + 1
    std::vector<Point> theta_points;  // index c_m
    bool power_all_six = true;
    bool theta_nondecreasing = true;
};
SpecialPoints special_points(int m_max, const Evaluator& eval);

}  // namespace tmc
