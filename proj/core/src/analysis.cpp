#include "tmc/analysis.hpp"

#include <stdexcept>

#include "tmc/errors.hpp"

namespace tmc {

PalindromeBlock palindrome_block(int q, const Evaluator& eval) {
    if (q < 1 || q > 60) throw std::invalid_argument("block level out of range");
    PalindromeBlock out;
    std::int64_t lo = (std::int64_t(1) << q) + 1;
    std::int64_t hi = (std::int64_t(1) << (q + 1)) + 1;
    out.values.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t n = lo; n <= hi; ++n) out.values.push_back(eval(n));
    out.is_palindrome = true;
    for (std::size_t i = 0, j = out.values.size() - 1; i < j; ++i, --j) {
        if (out.values[i] != out.values[j]) {
            out.is_palindrome = false;
            break;
        }
    }
    return out;
}

StepReport step_check(std::int64_t n_lo, std::int64_t n_hi,
                      const Evaluator& eval) {
    if (n_lo < 4) throw std::invalid_argument("step check starts at n >= 4");
    if (n_hi < n_lo) throw std::invalid_argument("empty step range");
    StepReport rep;
    std::int64_t prev = eval(n_lo);
    for (std::int64_t n = n_lo; n < n_hi; ++n) {
        std::int64_t next = eval(n + 1);
        std::int64_t d = next - prev;
        if (d != -2 && d != 0 && d != 2) {
            rep.ok = false;
            rep.first_violation = n;
            return rep;
        }
        prev = next;
    }
    return rep;
}

std::vector<std::pair<std::int64_t, std::int64_t>> unbounded_witness(int k) {
    if (k < 0) throw std::invalid_argument("chain length must be >= 0");
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    std::int64_t a = 3;
    for (int i = 0; i <= k; ++i) {
        if (a > (std::int64_t(1) << 62)) throw overflow("chain index past 2^62");
        // The growth argument needs this interval shape at every link.
        IntInterval at = pairs_interval(static_cast<std::uint64_t>(a));
        IntInterval after = pairs_interval(static_cast<std::uint64_t>(a) + 1);
        bool shape = a % 2 == 1 && at.lo % 2 == 0 && at.hi % 2 == 1 &&
                     after.lo == at.lo && after.hi == at.hi + 1;
        if (!shape)
            throw error("witness chain hypothesis fails at index " +
                        std::to_string(a));
        out.emplace_back(a, static_cast<std::int64_t>(
                                complexity_fast(static_cast<std::uint64_t>(a))));
        if (i < k && a > ((std::int64_t(1) << 62) + 5) / 16)
            throw overflow("chain index past 2^62");
        a = 16 * a - 5;
    }
    return out;
}

SpecialPoints special_points(int m_max, const Evaluator& eval) {
    if (m_max < 1) throw std::invalid_argument("m_max must be >= 1");
    SpecialPoints out;
    for (int m = 1; m <= m_max && m <= 61; ++m) {
        std::int64_t idx = (std::int64_t(1) << m) + 1;
        std::int64_t val = eval(idx);
        out.power_points.push_back({m, idx, val});
        if (val != 6) out.power_all_six = false;
    }
    // c_m = (2*4^m + 4) / 3 stays inside the checked range for m <= 30.
    std::int64_t prev = 0;
    for (int m = 1; m <= m_max && m <= 30; ++m) {
        std::int64_t idx = (2 * (std::int64_t(1) << (2 * m)) + 4) / 3;
        std::int64_t val = eval(idx);
        out.theta_points.push_back({m, idx, val});
        if (val < prev) out.theta_nondecreasing = false;
        prev = val;
    }
    return out;
}

}  // namespace tmc
