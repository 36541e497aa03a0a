#include "tmc/abelian.hpp"

#include <bit>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "tmc/errors.hpp"
#include "tmc/frames.hpp"
#include "tmc/thue_morse.hpp"

namespace tmc {

namespace {

constexpr std::uint64_t kEvenBits = 0x5555555555555555ull;

// Bitmask scan over adjacent positions: which parities carry a 00/11 pair.
struct PairScan {
    std::uint64_t count = 0;
    bool at_even = false;
    bool at_odd = false;
};

PairScan scan_pairs(const Word& w) {
    PairScan s;
    if (w.size() < 2) return s;
    std::size_t m = w.size() - 1;
    auto lim = w.limbs();
    for (std::size_t j = 0; j * 64 < m; ++j) {
        std::uint64_t a = lim[j];
        std::uint64_t b = lim[j] >> 1;
        if (j + 1 < lim.size()) b |= lim[j + 1] << 63;
        std::uint64_t eq = ~(a ^ b);
        std::size_t rem = m - j * 64;
        if (rem < 64) eq &= (std::uint64_t(1) << rem) - 1;
        s.count += static_cast<std::uint64_t>(std::popcount(eq));
        if (eq & kEvenBits) s.at_even = true;
        if (eq & ~kEvenBits) s.at_odd = true;
    }
    return s;
}

// Parity of the pair positions; for pair-free factors of length >= 4 the
// extensible period-2 frame decides. Requires a factor.
int pair_parity(const Word& w) {
    PairScan s = scan_pairs(w);
    if (s.at_even && s.at_odd)
        throw not_a_factor("pairs on both parities cannot occur in a factor");
    if (s.at_even) return 0;
    if (s.at_odd) return 1;
    if (w.size() < 4)
        throw frame_ambiguous("pair-free word too short to pin its frame");
    return extensible_2frame(w) == 0 ? 1 : 0;
}

}  // namespace

bool l_abelian_equivalent(const Word& u, const Word& v, int ell) {
    if (ell < 1) throw std::invalid_argument("order must be >= 1");
    if (u.size() != v.size()) return false;
    std::size_t n = u.size();
    auto L = static_cast<std::size_t>(ell);
    if (n < L) return u == v;
    if (u.subword(0, L - 1) != v.subword(0, L - 1)) return false;
    if (u.subword(n - (L - 1), L - 1) != v.subword(n - (L - 1), L - 1))
        return false;
    if (L <= 64) {
        std::unordered_map<std::uint64_t, std::int64_t> grams;
        std::uint64_t mask = L == 64 ? ~0ull : (std::uint64_t(1) << L) - 1;
        std::uint64_t gu = 0, gv = 0;
        for (std::size_t i = 0; i < n; ++i) {
            gu = ((gu >> 1) | (std::uint64_t(u.bit(i)) << (L - 1))) & mask;
            gv = ((gv >> 1) | (std::uint64_t(v.bit(i)) << (L - 1))) & mask;
            if (i + 1 >= L) {
                ++grams[gu];
                --grams[gv];
            }
        }
        for (const auto& [g, c] : grams)
            if (c != 0) return false;
        return true;
    }
    std::map<Word, std::int64_t> grams;
    for (std::size_t i = 0; i + L <= n; ++i) {
        ++grams[u.subword(i, L)];
        --grams[v.subword(i, L)];
    }
    for (const auto& [g, c] : grams)
        if (c != 0) return false;
    return true;
}

std::string ClassTuple::str() const {
    return "(" + std::to_string(c00) + "," + std::to_string(c01) + "," +
           std::to_string(c10) + "," + std::to_string(c11) + "," +
           std::to_string(first) + "," + std::to_string(last) + ")";
}

ClassTuple class_of(const Word& w) {
    if (w.empty()) throw too_short("class_of needs a nonempty word");
    ClassTuple t;
    t.first = w.first();
    t.last = w.last();
    std::size_t m = w.size() - 1;
    auto lim = w.limbs();
    for (std::size_t j = 0; j * 64 < m; ++j) {
        std::uint64_t a = lim[j];
        std::uint64_t b = lim[j] >> 1;
        if (j + 1 < lim.size()) b |= lim[j + 1] << 63;
        std::uint64_t mask = ~0ull;
        std::size_t rem = m - j * 64;
        if (rem < 64) mask = (std::uint64_t(1) << rem) - 1;
        t.c00 += static_cast<std::uint64_t>(std::popcount(~a & ~b & mask));
        t.c01 += static_cast<std::uint64_t>(std::popcount(~a & b & mask));
        t.c10 += static_cast<std::uint64_t>(std::popcount(a & ~b & mask));
        t.c11 += static_cast<std::uint64_t>(std::popcount(a & b & mask));
    }
    return t;
}

std::uint64_t pair_count(const Word& w) {
    return scan_pairs(w).count;
}

std::string VectTuple::str() const {
    return "(" + std::to_string(first) + "," + std::to_string(pairs) + "," +
           std::to_string(frame) + "," + std::to_string(length) + ")";
}

VectTuple vect_of(const Word& w) {
    if (w.size() < 4) throw too_short("vect_of needs |w| >= 4");
    if (!is_factor(w)) throw not_a_factor("vect_of: not a factor");
    VectTuple v;
    v.first = w.first();
    v.pairs = pair_count(w);
    v.frame = pair_parity(w);
    v.length = w.size();
    return v;
}

ClassTuple class_from_vect(const VectTuple& v) {
    if ((v.first != 0 && v.first != 1) || (v.frame != 0 && v.frame != 1))
        throw inconsistent_tuple("first and frame must be 0 or 1");
    if (v.length == 0 || v.pairs + 1 > v.length)
        throw inconsistent_tuple("pair count does not fit the length");
    std::uint64_t alt = v.length - v.pairs;  // the alternating part
    ClassTuple t;
    t.first = v.first;
    if (v.first == 0) {
        t.c01 = alt / 2;
        t.c10 = (alt - 1) / 2;
    } else {
        t.c10 = alt / 2;
        t.c01 = (alt - 1) / 2;
    }
    t.last = (alt % 2 == 1) ? v.first : 1 - v.first;
    int first_pair = v.first ^ v.frame;
    if (first_pair == 0) {
        t.c00 = (v.pairs + 1) / 2;
        t.c11 = v.pairs / 2;
    } else {
        t.c11 = (v.pairs + 1) / 2;
        t.c00 = v.pairs / 2;
    }
    return t;
}

ShortCoding ShortCoding::parse(std::string_view s) {
    if (s.empty()) throw malformed_coding("empty coding");
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c != 'D' && c != 'E' && c != 'S')
            throw malformed_coding("coding symbols are D, E, S");
        if (c == 'S' && i != 0 && i + 1 != s.size())
            throw malformed_coding("S is only allowed at the ends");
    }
    return ShortCoding(std::string(s));
}

ShortCoding short_coding(const Word& w) {
    if (w.size() < 2) throw too_short("short_coding needs |w| >= 2");
    if (!is_factor(w)) throw not_a_factor("short_coding: not a factor");
    int parity = pair_parity(w);
    std::string s;
    std::size_t i = 0;
    if (parity == 1) {
        s += 'S';
        i = 1;
    }
    for (; i + 2 <= w.size(); i += 2)
        s += (w.bit(i) == w.bit(i + 1)) ? 'E' : 'D';
    if (i < w.size()) s += 'S';
    return ShortCoding::parse(s);
}

Word decode_short_coding(const ShortCoding& c, int first) {
    if (first != 0 && first != 1)
        throw std::invalid_argument("first letter must be 0 or 1");
    Word w;
    int cur = first;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i > 0) cur = 1 - w.last();
        switch (c.symbol(i)) {
            case 'S':
                w.push_back(cur);
                break;
            case 'E':
                w.push_back(cur);
                w.push_back(cur);
                break;
            default:
                w.push_back(cur);
                w.push_back(1 - cur);
                break;
        }
    }
    return w;
}

std::uint64_t complexity_brute(std::uint64_t n, int ell) {
    if (ell < 1) throw std::invalid_argument("order must be >= 1");
    if (n == 0) return 1;
    auto fs = enumerate_factors(static_cast<std::size_t>(n));
    if (ell == 2) {
        std::set<ClassTuple> classes;
        for (const Word& w : *fs) classes.insert(class_of(w));
        return classes.size();
    }
    std::vector<const Word*> reps;  // one representative per class seen
    for (const Word& w : *fs) {
        bool fresh = true;
        for (const Word* r : reps) {
            if (l_abelian_equivalent(w, *r, ell)) {
                fresh = false;
                break;
            }
        }
        if (fresh) reps.push_back(&w);
    }
    return reps.size();
}

}  // namespace tmc
