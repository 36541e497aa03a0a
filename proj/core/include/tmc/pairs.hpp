#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace tmc {

/// Inclusive integer interval [lo, hi]; empty() when hi < lo.
struct IntInterval {
    std::int64_t lo = 0;
    std::int64_t hi = -1;

    bool empty() const { return hi < lo; }
    std::int64_t count() const { return empty() ? 0 : hi - lo + 1; }
    bool contains(std::int64_t x) const { return lo <= x && x <= hi; }

    IntInterval intersect(const IntInterval& o) const {
        return {lo > o.lo ? lo : o.lo, hi < o.hi ? hi : o.hi};
    }
    /// Union of two overlapping-or-adjacent intervals.
    IntInterval hull(const IntInterval& o) const {
        if (empty()) return o;
        if (o.empty()) return *this;
        return {lo < o.lo ? lo : o.lo, hi > o.hi ? hi : o.hi};
    }

    bool operator==(const IntInterval&) const = default;
    std::string str() const;
};

/// Number of even integers in the interval.
std::int64_t even_count(const IntInterval& iv);

/// Achievable pair counts over all factors of length n, by enumeration.
std::set<std::int64_t> pairs_brute(std::size_t n);

/// Achievable pair counts over pure odd words of length m (even, >= 4):
/// factors whose 00/11 pairs sit at even positions. Throws odd_argument.
std::set<std::int64_t> pairs_pure_odd_brute(std::size_t m);

/// pairs(n) as an interval, via the halving recursion over base values for
/// n <= 9; O(log n) with memoization. Throws overflow for n > 2^62.
IntInterval pairs_interval(std::uint64_t n);

/// The pure-odd analogue for even m. Throws odd_argument / overflow.
IntInterval pairs_pure_odd_interval(std::uint64_t m);

/// Number of order-2 classes among factors of length n, in O(log n):
/// table for n <= 9, interval counting above. Throws overflow.
std::uint64_t complexity_fast(std::uint64_t n);

/// pairs_interval for every n in [n_lo, n_hi] (n_lo >= 2), computed by a
/// forward doubling sweep, amortized O(1) per index.
std::vector<IntInterval> pairs_window(std::uint64_t n_lo, std::uint64_t n_hi);

/// Shared shape for pluggable sequence evaluators (fast or brute).
using Evaluator = std::function<std::int64_t(std::int64_t)>;

/// complexity_fast wrapped as an Evaluator.
Evaluator fast_evaluator();

}  // namespace tmc
