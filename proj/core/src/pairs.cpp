#include "tmc/pairs.hpp"

#include <array>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "tmc/abelian.hpp"
#include "tmc/errors.hpp"
#include "tmc/thue_morse.hpp"

namespace tmc {

namespace {

constexpr std::uint64_t kMaxIndex = std::uint64_t(1) << 62;

// pairs(n) for n = 0..9.
constexpr std::array<std::pair<std::int64_t, std::int64_t>, 10> kPairsBase = {{
    {0, 0}, {0, 0}, {0, 1}, {0, 1}, {0, 2},
    {1, 2}, {1, 3}, {1, 3}, {1, 3}, {2, 3},
}};

// Pure-odd pair counts for m = 0, 2, 4, 6, 8.
constexpr std::array<std::pair<std::int64_t, std::int64_t>, 5> kPureOddBase = {{
    {0, 0}, {0, 1}, {1, 2}, {1, 3}, {2, 3},
}};

// Class counts for n = 0..9.
constexpr std::array<std::uint64_t, 10> kComplexityBase = {
    1, 2, 4, 6, 8, 6, 8, 10, 8, 6,
};

IntInterval table_pairs(std::uint64_t n) {
    return {kPairsBase[n].first, kPairsBase[n].second};
}

IntInterval table_pure_odd(std::uint64_t m) {
    return {kPureOddBase[m / 2].first, kPureOddBase[m / 2].second};
}

using Memo = std::unordered_map<std::uint64_t, IntInterval>;

IntInterval pairs_impl(std::uint64_t n, Memo& memo);

// Pure-odd interval for even m >= 10: a pure odd word of length m is the
// odd-frame interior of a factor of length m + 2, reflecting pairs through
// the block count m / 2.
IntInterval pure_odd_impl(std::uint64_t m, Memo& memo) {
    if (m <= 8) return table_pure_odd(m);
    std::uint64_t k = m / 2;
    IntInterval p = pairs_impl(k + 1, memo);
    return {static_cast<std::int64_t>(k) - p.hi,
            static_cast<std::int64_t>(k) - p.lo};
}

IntInterval pairs_impl(std::uint64_t n, Memo& memo) {
    if (n <= 9) return table_pairs(n);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    IntInterval out;
    if (n % 2 == 1) {
        out = pure_odd_impl(n - 1, memo);
    } else {
        IntInterval a = pure_odd_impl(n, memo);
        IntInterval b = pure_odd_impl(n - 2, memo);
        if (a.lo > b.hi + 1 || b.lo > a.hi + 1)
            throw error("pair recursion produced a gap");
        out = a.hull(b);
    }
    memo.emplace(n, out);
    return out;
}

Memo& thread_memo() {
    thread_local Memo memo;
    if (memo.size() > (std::size_t(1) << 16)) memo.clear();
    return memo;
}

// Cross-checks the base tables against the recursion and the interval
// counting formulas before first use.
void self_check() {
    static std::once_flag flag;
    std::call_once(flag, [] {
        Memo memo;
        for (std::uint64_t m = 2; m <= 8; m += 2) {
            std::uint64_t k = m / 2;
            IntInterval p = table_pairs(k + 1);
            IntInterval rec{static_cast<std::int64_t>(k) - p.hi,
                            static_cast<std::int64_t>(k) - p.lo};
            if (!(rec == table_pure_odd(m)))
                throw error("pure-odd base table disagrees with recursion");
        }
        for (std::uint64_t n = 4; n <= 9; ++n) {
            IntInterval rec;
            if (n % 2 == 1) {
                rec = table_pure_odd(n - 1);
            } else {
                rec = table_pure_odd(n).hull(table_pure_odd(n - 2));
            }
            if (!(rec == table_pairs(n)))
                throw error("pair base table disagrees with recursion");
        }
        for (std::uint64_t n = 8; n <= 9; ++n) {
            std::uint64_t formula;
            if (n % 2 == 1) {
                IntInterval iv = table_pure_odd(n - 1);
                formula = 2 * (2 * static_cast<std::uint64_t>(iv.count()) -
                               static_cast<std::uint64_t>(even_count(iv)));
            } else {
                IntInterval a = table_pure_odd(n);
                IntInterval b = table_pure_odd(n - 2);
                IntInterval both = a.intersect(b);
                std::int64_t shared = both.empty() ? 0 : even_count(both);
                formula = 2 * static_cast<std::uint64_t>(a.count() + b.count() -
                                                         shared);
            }
            if (formula != kComplexityBase[n])
                throw error("class count base table disagrees with formula");
        }
    });
}

}  // namespace

std::string IntInterval::str() const {
    if (empty()) return "[]";
    return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

std::int64_t even_count(const IntInterval& iv) {
    if (iv.empty()) return 0;
    auto floor2 = [](std::int64_t x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); };
    auto ceil2 = [](std::int64_t x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); };
    return floor2(iv.hi) - ceil2(iv.lo) + 1;
}

std::set<std::int64_t> pairs_brute(std::size_t n) {
    std::set<std::int64_t> out;
    for (const Word& w : *enumerate_factors(n))
        out.insert(static_cast<std::int64_t>(pair_count(w)));
    return out;
}

std::set<std::int64_t> pairs_pure_odd_brute(std::size_t m) {
    if (m % 2 != 0) throw odd_argument("pure odd words have even length");
    if (m < 4) throw too_short("pure-odd enumeration needs m >= 4");
    std::set<std::int64_t> out;
    for (const Word& w : *enumerate_factors(m)) {
        // A pure odd word has all its pairs at even positions; the two
        // pair-free factors 0101/1010 sit astride the grid and are excluded.
        std::uint64_t cnt = 0;
        bool at_even = false, at_odd = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w.bit(i) == w.bit(i + 1)) {
                ++cnt;
                (i % 2 == 0 ? at_even : at_odd) = true;
            }
        }
        if (at_odd || cnt == 0) continue;
        out.insert(static_cast<std::int64_t>(cnt));
    }
    return out;
}

IntInterval pairs_interval(std::uint64_t n) {
    if (n > kMaxIndex) throw overflow("index exceeds the 2^62 range");
    self_check();
    return pairs_impl(n, thread_memo());
}

IntInterval pairs_pure_odd_interval(std::uint64_t m) {
    if (m % 2 != 0) throw odd_argument("pure odd words have even length");
    if (m > kMaxIndex) throw overflow("index exceeds the 2^62 range");
    self_check();
    return pure_odd_impl(m, thread_memo());
}

std::uint64_t complexity_fast(std::uint64_t n) {
    if (n > kMaxIndex) throw overflow("index exceeds the 2^62 range");
    if (n <= 9) {
        self_check();
        return kComplexityBase[n];
    }
    self_check();
    Memo& memo = thread_memo();
    if (n % 2 == 1) {
        IntInterval iv = pure_odd_impl(n - 1, memo);
        return 2 * (2 * static_cast<std::uint64_t>(iv.count()) -
                    static_cast<std::uint64_t>(even_count(iv)));
    }
    IntInterval a = pure_odd_impl(n, memo);
    IntInterval b = pure_odd_impl(n - 2, memo);
    IntInterval both = a.intersect(b);
    std::int64_t shared = both.empty() ? 0 : even_count(both);
    return 2 * static_cast<std::uint64_t>(a.count() + b.count() - shared);
}

namespace {

// Doubling level k carries the full index range [2^k + 1, 8 * 2^k + 1]
// (level 0 is the base table range [2, 9]; level k + 1 spans
// [2 lo - 1, 2 hi - 1] of level k's range).
std::uint64_t level_top(int k) { return (std::uint64_t(8) << k) + 1; }

// Computes pairs(n) for every n in [seg_lo, seg_hi], where the segment sits
// entirely inside one doubling level. Only a slice of each lower level is
// materialized: the parent indices the level above reads (child n reads
// parents floor(n/2) and floor(n/2) + 1), so the slices halve on the way
// down and the cost is O(segment + log seg_hi).
void sweep_segment(std::uint64_t seg_lo, std::uint64_t seg_hi,
                   std::vector<IntInterval>& result, std::uint64_t n_lo) {
    int top = 0;
    while (level_top(top) < seg_hi) ++top;

    std::vector<std::pair<std::uint64_t, std::uint64_t>> need(top + 1);
    need[top] = {seg_lo, seg_hi};
    for (int k = top - 1; k >= 0; --k) {
        std::uint64_t plo = need[k + 1].first / 2;
        std::uint64_t phi = need[k + 1].second / 2 + 1;
        // Truly needed parents never fall outside the level, so clipping
        // the conservative bounds to the level range is safe.
        std::uint64_t lo_k = k == 0 ? 2 : (std::uint64_t(1) << k) + 1;
        if (plo < lo_k) plo = lo_k;
        if (phi > level_top(k)) phi = level_top(k);
        need[k] = {plo, phi};
    }

    std::vector<IntInterval> cur(need[0].second - need[0].first + 1);
    for (std::uint64_t n = need[0].first; n <= need[0].second; ++n)
        cur[n - need[0].first] = table_pairs(n);

    for (int k = 1; k <= top; ++k) {
        auto [slo, shi] = need[k];
        std::uint64_t plo = need[k - 1].first;
        std::vector<IntInterval> nxt(shi - slo + 1);
        auto pure_odd_from = [&](std::uint64_t m) {
            // m even; the parent interval sits at index m / 2 + 1.
            std::uint64_t h = m / 2;
            IntInterval p = cur[h + 1 - plo];
            return IntInterval{static_cast<std::int64_t>(h) - p.hi,
                               static_cast<std::int64_t>(h) - p.lo};
        };
        for (std::uint64_t n = slo; n <= shi; ++n) {
            if (n <= 9) {
                nxt[n - slo] = table_pairs(n);
            } else if (n % 2 == 1) {
                nxt[n - slo] = pure_odd_from(n - 1);
            } else {
                IntInterval a = pure_odd_from(n);
                IntInterval b = pure_odd_from(n - 2);
                if (a.lo > b.hi + 1 || b.lo > a.hi + 1)
                    throw error("pair recursion produced a gap");
                nxt[n - slo] = a.hull(b);
            }
        }
        cur = std::move(nxt);
    }
    for (std::uint64_t n = seg_lo; n <= seg_hi; ++n)
        result[n - n_lo] = cur[n - seg_lo];
}

}  // namespace

std::vector<IntInterval> pairs_window(std::uint64_t n_lo, std::uint64_t n_hi) {
    if (n_lo < 2) throw std::invalid_argument("window starts at n >= 2");
    if (n_hi < n_lo) throw std::invalid_argument("empty window");
    if (n_hi > kMaxIndex) throw overflow("index exceeds the 2^62 range");
    self_check();

    std::vector<IntInterval> result(n_hi - n_lo + 1);
    // Split the window at the level boundaries, so that each piece lives in
    // exactly one doubling level and gets its own pruned sweep. A wide
    // window degenerates into full-level pieces (amortized O(1) per index);
    // a narrow faraway window costs one O(log n) cascade.
    std::uint64_t lo = n_lo;
    if (lo <= 9) {
        std::uint64_t hi = n_hi < 9 ? n_hi : 9;
        for (std::uint64_t n = lo; n <= hi; ++n)
            result[n - n_lo] = table_pairs(n);
        lo = hi + 1;
    }
    int k = 0;
    while (lo <= n_hi) {
        while (level_top(k) < lo) ++k;
        std::uint64_t hi = n_hi < level_top(k) ? n_hi : level_top(k);
        sweep_segment(lo, hi, result, n_lo);
        lo = hi + 1;
    }
    return result;
}

Evaluator fast_evaluator() {
    return [](std::int64_t n) {
        if (n < 0) throw std::invalid_argument("sequence index must be >= 0");
        return static_cast<std::int64_t>(
            complexity_fast(static_cast<std::uint64_t>(n)));
    };
}

}  // namespace tmc
