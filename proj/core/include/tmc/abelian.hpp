#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "tmc/word.hpp"

namespace tmc {

/// Equal prefixes and suffixes of length ell-1 and equal counts of every
/// length-ell factor. Words shorter than ell-1 compare by plain equality.
bool l_abelian_equivalent(const Word& u, const Word& v, int ell);

/// Invariant 6-tuple of the order-2 equivalence: the four 2-letter factor
/// counts plus the first and last letter.
struct ClassTuple {
    std::uint64_t c00 = 0, c01 = 0, c10 = 0, c11 = 0;
    int first = 0, last = 0;

    auto operator<=>(const ClassTuple&) const = default;

    /// "(c00,c01,c10,c11,first,last)"
    std::string str() const;
};

/// The class tuple of a nonempty word (no factorhood requirement).
ClassTuple class_of(const Word& w);

/// p(w): number of positions carrying 00 or 11.
std::uint64_t pair_count(const Word& w);

/// The three numbers (plus the length) that pin down a factor's class:
/// first letter, pair count, and whether the word starts ahead of the odd
/// frame (frame = 1) or on it (frame = 0).
struct VectTuple {
    int first = 0;
    std::uint64_t pairs = 0;
    int frame = 0;
    std::uint64_t length = 0;

    auto operator<=>(const VectTuple&) const = default;
    std::string str() const;
};

/// Requires a factor of length >= 4 (too_short / not_a_factor).
VectTuple vect_of(const Word& w);

/// Reconstructs the class tuple from a vect tuple by the two-part
/// construction: an alternating word of length n - p starting with the first
/// letter fixes c01, c10 and the last letter; the p pairs alternate between
/// 00 and 11 starting with the first letter's pair when frame = 0 and the
/// complemented pair when frame = 1. Throws inconsistent_tuple when no word
/// can realize the input.
ClassTuple class_from_vect(const VectTuple& v);

/// Coding of a factor along its odd frame: D for a 01/10 block, E for a
/// 00/11 block, S for a dangling single letter at either end.
class ShortCoding {
public:
    ShortCoding() = default;

    /// Accepts a nonempty string over D/E/S with S only at the ends;
    /// throws malformed_coding otherwise.
    static ShortCoding parse(std::string_view s);

    const std::string& str() const { return symbols_; }
    std::size_t size() const { return symbols_.size(); }
    char symbol(std::size_t i) const { return symbols_[i]; }

    bool operator==(const ShortCoding&) const = default;

private:
    explicit ShortCoding(std::string s) : symbols_(std::move(s)) {}
    std::string symbols_;
};

/// Codes a factor of length >= 2. The odd frame is read off the position
/// parity of any 00/11 pair; pair-free words need length >= 4 to pin the
/// frame down (frame_ambiguous otherwise).
ShortCoding short_coding(const Word& w);

/// Reconstructs the word from its coding and first letter. Uses that equal
/// letters never straddle an odd-frame boundary.
Word decode_short_coding(const ShortCoding& c, int first);

/// Number of order-ell equivalence classes among factors of length n,
/// by direct enumeration and bucketing.
std::uint64_t complexity_brute(std::uint64_t n, int ell);

}  // namespace tmc
