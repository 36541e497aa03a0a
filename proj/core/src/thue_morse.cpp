#include "tmc/thue_morse.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "tmc/errors.hpp"

namespace tmc {

int tm_letter(std::uint64_t i) {
    return std::popcount(i) & 1;
}

Word tm_prefix(std::size_t n) {
    Word w;
    if (n == 0) return w;
    w.push_back(0);
    while (w.size() < n) w.append(w.complement());
    if (w.size() == n) return w;
    return w.subword(0, n);
}

Word morphism_image(const Word& w) {
    Word out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        int b = w.bit(i);
        out.push_back(b);
        out.push_back(1 - b);
    }
    return out;
}

Word morphism_preimage(const Word& w) {
    if (w.size() % 2 != 0)
        throw odd_length("morphism preimage of an odd-length word");
    Word out;
    for (std::size_t i = 0; i < w.size(); i += 2) {
        int a = w.bit(i), b = w.bit(i + 1);
        if (a == b)
            throw not_in_image("word is not a morphism image: equal pair");
        out.push_back(a);
    }
    return out;
}

std::uint64_t factor_complexity(std::uint64_t n) {
    if (n == 0) return 1;
    if (n == 1) return 2;
    if (n == 2) return 4;
    // For n >= 3 pick m with 2 * 2^m < n <= 4 * 2^m.
    std::uint64_t m = 64 - std::countl_zero((n - 1) / 2) - 1;
    std::uint64_t p = std::uint64_t(1) << m;
    if (n <= 3 * p) return 4 * n - 2 * p - 4;
    return 2 * n + 4 * p - 2;
}

FactorSet::FactorSet(std::size_t length, std::vector<Word> members)
    : length_(length), members_(std::move(members)) {}

bool FactorSet::contains(const Word& w) const {
    if (w.size() != length_) return false;
    return std::binary_search(members_.begin(), members_.end(), w);
}

namespace {

std::size_t factor_set_bytes(const FactorSet& fs) {
    return fs.size() * (sizeof(Word) + ((fs.length() + 63) / 64) * 8);
}

std::shared_ptr<const FactorSet> build_factor_set(std::size_t n) {
    std::uint64_t expected = factor_complexity(n);
    if (n == 0)
        return std::make_shared<const FactorSet>(0, std::vector<Word>{Word{}});

    std::unordered_set<Word, WordHash> seen;
    seen.reserve(static_cast<std::size_t>(expected) * 2);
    for (std::size_t c = 16; c <= (std::size_t(1) << 22); c *= 2) {
        Word pref = tm_prefix(c * n);
        for (std::size_t i = 0; i + n <= pref.size(); ++i) {
            seen.insert(pref.subword(i, n));
            if (seen.size() == expected) break;
        }
        // Windows are factors, so the count can only fall short, never exceed.
        if (seen.size() == expected) {
            std::vector<Word> members(seen.begin(), seen.end());
            std::sort(members.begin(), members.end());
            return std::make_shared<const FactorSet>(n, std::move(members));
        }
    }
    throw budget_exceeded("factor enumeration window never saturated");
}

}  // namespace

std::shared_ptr<const FactorSet> enumerate_factors(std::size_t n) {
    static std::mutex mu;
    static std::unordered_map<std::size_t, std::shared_ptr<const FactorSet>> cache;
    static std::deque<std::size_t> order;
    static std::size_t bytes = 0;
    constexpr std::size_t kMaxBytes = std::size_t(64) << 20;

    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    auto fs = build_factor_set(n);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
        std::size_t sz = factor_set_bytes(*fs);
        while (!order.empty() && bytes + sz > kMaxBytes) {
            auto victim = cache.find(order.front());
            order.pop_front();
            if (victim != cache.end()) {
                bytes -= factor_set_bytes(*victim->second);
                cache.erase(victim);
            }
        }
        cache.emplace(n, fs);
        order.push_back(n);
        bytes += sz;
    }
    return fs;
}

bool is_factor(const Word& w) {
    if (w.empty()) return true;
    return enumerate_factors(w.size())->contains(w);
}

}  // namespace tmc
