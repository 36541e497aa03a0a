#pragma once

#include <compare>
#include <cstdint>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tmc {

/// A finite binary word, bit-packed 64 letters per limb (letter i lives at
/// limbs()[i / 64], bit i % 64). Unused tail bits are kept zero so that
/// equality and hashing can work limb-wise.
class Word {
public:
    Word() = default;

    /// Parses a string of '0'/'1'; throws std::invalid_argument otherwise.
    static Word from_string(std::string_view s);

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    int bit(std::size_t i) const {
        return static_cast<int>((limbs_[i >> 6] >> (i & 63)) & 1u);
    }
    int first() const { return bit(0); }
    int last() const { return bit(size_ - 1); }

    void push_back(int b);
    void append(const Word& w);
    void clear() { limbs_.clear(); size_ = 0; }

    /// Letterwise 0 <-> 1.
    Word complement() const;

    /// The subword of `len` letters starting at `pos`; pos + len <= size().
    Word subword(std::size_t pos, std::size_t len) const;

    std::string str() const;

    bool operator==(const Word& o) const {
        return size_ == o.size_ && limbs_ == o.limbs_;
    }
    /// Lexicographic order with 0 < 1; a prefix sorts before its extensions.
    std::strong_ordering operator<=>(const Word& o) const;

    std::span<const std::uint64_t> limbs() const { return limbs_; }

    /// Number of positions i with bit(i) == 1.
    std::size_t popcount() const;

private:
    std::vector<std::uint64_t> limbs_;
    std::size_t size_ = 0;
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

inline Word complement(const Word& w) { return w.complement(); }

/// A word over {alpha, complement-of-alpha}; symbol(i) == 1 means the
/// complemented letter. A nonempty pattern matches exactly two binary words.
class Pattern {
public:
    Pattern() = default;
    explicit Pattern(Word symbols) : symbols_(std::move(symbols)) {}

    /// pat(w): letter 0 becomes alpha, letter 1 its complement.
    static Pattern of(const Word& w) { return Pattern(w); }

    std::size_t size() const { return symbols_.size(); }
    int symbol(std::size_t i) const { return symbols_.bit(i); }

    /// The two words a nonempty pattern stands for ({w, complement(w)});
    /// the empty pattern matches only the empty word.
    std::pair<Word, Word> assignments() const;

    bool matches(const Word& w) const;

    /// True when the two patterns denote the same word set.
    bool same_as(const Pattern& o) const;

    /// 'a' for alpha, 'A' for its complement.
    std::string str() const;

private:
    Word symbols_;
};

}  // namespace tmc
