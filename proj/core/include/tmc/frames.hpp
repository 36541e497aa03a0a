#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "tmc/word.hpp"

namespace tmc {

/// One way of aligning a word against the block grid of period 2^q: the word
/// starts at in-block position `offset`, `prefix` is the part before the
/// first grid line, `blocks` are the complete blocks, `suffix` the rest.
/// prefix + blocks + suffix reconstructs the word; every complete block is
/// tm_prefix(2^q) or its complement, the partial pieces match the
/// corresponding section of that block pattern.
struct FrameFactorization {
    int q = 0;
    std::size_t offset = 0;
    Word prefix;
    std::vector<Word> blocks;
    Word suffix;
};

/// The factorization of w on the period-2^q grid at the given offset, or
/// nullopt when some block fails to match the block pattern. Purely
/// structural; no factor-membership check.
std::optional<FrameFactorization>
frame_at(const Word& w, int q, std::size_t offset);

/// All offsets in [0, 2^q) at which w admits a period-2^q factorization.
/// Requires w to be a factor (throws not_a_factor).
std::set<std::size_t> reading_frames(const Word& w, int q);

/// The offset of the unique extensible period-2 frame of w. The candidate
/// offsets come from the structural check; if both survive (alternating
/// words), each candidate is filled and the fill tested for factorhood.
/// Requires |w| >= 4 (too_short) and factorhood (not_a_factor).
std::size_t extensible_2frame(const Word& w);

/// Completes the partial blocks of w's extensible period-2 frame; the added
/// letters are forced. Requires |w| >= 2 and an extensible frame to exist
/// (frame_ambiguous otherwise, e.g. for 01 or 010).
Word fill_frame(const Word& w);

struct MerfResult {
    Word extended;              // the forced superword
    std::uint64_t frame_size;   // period of its maximal extensible frame
    std::size_t original_offset;  // unique position of the input inside it
};

/// One round of the extension loop: the frame period reached, the word after
/// filling, and its morphism preimage.
struct MerfStep {
    int q = 0;
    Word filled;
    Word preimage;
};

/// Maximal forced extension of a factor: repeatedly fill the extensible
/// period-2 frame and pull back through the morphism until the word is one
/// of the six frame-neutral words, then map forward again. Requires a
/// nonempty factor (too_short / not_a_factor).
MerfResult merf(const Word& w);
MerfResult merf(const Word& w, std::vector<MerfStep>& steps);

/// extended size minus input size.
std::uint64_t determined_letters(const Word& w);

/// Closed-form sharp bounds (min, max) on determined_letters over all
/// factors of length n; n >= 1.
std::pair<std::uint64_t, std::uint64_t> unique_extension_bounds(std::uint64_t n);

/// Exact extremes of |extended| / |w| over all factors with 1 <= |w| <= n_max
/// (n_max >= 4), with witnesses. Fractions are reduced.
struct RatioExtrema {
    std::int64_t min_num = 0, min_den = 1;
    std::int64_t max_num = 0, max_den = 1;
    Word min_witness;
    Word max_witness;
};
RatioExtrema extension_ratio_extrema(std::size_t n_max);

}  // namespace tmc
