#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "tmc/word.hpp"

namespace tmc {

/// Letter t_i of the Thue-Morse word: the parity of the binary digit sum.
int tm_letter(std::uint64_t i);

/// The first n letters of the Thue-Morse word.
Word tm_prefix(std::size_t n);

/// Image under 0 -> 01, 1 -> 10.
Word morphism_image(const Word& w);

/// Preimage under the morphism; throws odd_length / not_in_image.
Word morphism_preimage(const Word& w);

/// Number of distinct Thue-Morse factors of length n.
std::uint64_t factor_complexity(std::uint64_t n);

/// The set of factors of one fixed length, sorted lexicographically.
class FactorSet {
public:
    FactorSet(std::size_t length, std::vector<Word> members);

    std::size_t length() const { return length_; }
    std::size_t size() const { return members_.size(); }
    bool contains(const Word& w) const;

    const std::vector<Word>& members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

private:
    std::size_t length_;
    std::vector<Word> members_;  // sorted, distinct
};

/// All factors of length n, computed from a sliding window over a prefix and
/// certified complete against factor_complexity(n). The result is cached in a
/// bounded, internally synchronized store; throws budget_exceeded if the
/// window never saturates.
std::shared_ptr<const FactorSet> enumerate_factors(std::size_t n);

/// Membership in the factor set of length w.size().
bool is_factor(const Word& w);

}  // namespace tmc
