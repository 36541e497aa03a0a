#include "tmc/word.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace tmc {

Word Word::from_string(std::string_view s) {
    Word w;
    for (char c : s) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("word strings use only '0' and '1'");
        w.push_back(c - '0');
    }
    return w;
}

void Word::push_back(int b) {
    std::size_t slot = size_ & 63;
    if (slot == 0)
        limbs_.push_back(static_cast<std::uint64_t>(b & 1));
    else
        limbs_.back() |= static_cast<std::uint64_t>(b & 1) << slot;
    ++size_;
}

void Word::append(const Word& w) {
    if (&w == this) {
        Word copy = w;
        append(copy);
        return;
    }
    if (w.empty()) return;
    std::size_t shift = size_ & 63;
    std::size_t need = (size_ + w.size_ + 63) >> 6;
    std::size_t base = size_ >> 6;
    limbs_.resize(need, 0);
    if (shift == 0) {
        std::copy(w.limbs_.begin(), w.limbs_.end(), limbs_.begin() + base);
    } else {
        for (std::size_t j = 0; j < w.limbs_.size(); ++j) {
            limbs_[base + j] |= w.limbs_[j] << shift;
            if (base + j + 1 < need)
                limbs_[base + j + 1] |= w.limbs_[j] >> (64 - shift);
        }
    }
    size_ += w.size_;
}

Word Word::complement() const {
    Word out = *this;
    for (auto& l : out.limbs_) l = ~l;
    std::size_t tail = size_ & 63;
    if (tail != 0) out.limbs_.back() &= (std::uint64_t(1) << tail) - 1;
    return out;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
    if (pos + len > size_)
        throw std::out_of_range("subword range exceeds word size");
    Word out;
    out.size_ = len;
    out.limbs_.assign((len + 63) >> 6, 0);
    std::size_t start = pos >> 6, shift = pos & 63;
    for (std::size_t j = 0; j < out.limbs_.size(); ++j) {
        std::uint64_t lo = limbs_[start + j] >> shift;
        std::uint64_t hi = 0;
        if (shift != 0 && start + j + 1 < limbs_.size())
            hi = limbs_[start + j + 1] << (64 - shift);
        out.limbs_[j] = lo | hi;
    }
    std::size_t tail = len & 63;
    if (tail != 0) out.limbs_.back() &= (std::uint64_t(1) << tail) - 1;
    return out;
}

std::string Word::str() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (bit(i)) s[i] = '1';
    return s;
}

std::strong_ordering Word::operator<=>(const Word& o) const {
    std::size_t common = size_ < o.size_ ? size_ : o.size_;
    for (std::size_t j = 0; j * 64 < common; ++j) {
        std::uint64_t diff = limbs_[j] ^ o.limbs_[j];
        std::size_t rem = common - j * 64;
        if (rem < 64) diff &= (std::uint64_t(1) << rem) - 1;
        if (diff != 0) {
            int i = std::countr_zero(diff);
            return ((limbs_[j] >> i) & 1) ? std::strong_ordering::greater
                                          : std::strong_ordering::less;
        }
    }
    return size_ <=> o.size_;
}

std::size_t Word::popcount() const {
    std::size_t n = 0;
    for (auto l : limbs_) n += static_cast<std::size_t>(std::popcount(l));
    return n;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(w.size());
    for (auto l : w.limbs()) mix(l);
    return static_cast<std::size_t>(h);
}

std::pair<Word, Word> Pattern::assignments() const {
    return {symbols_, symbols_.complement()};
}

bool Pattern::matches(const Word& w) const {
    if (w.size() != symbols_.size()) return false;
    if (w.empty()) return true;
    return w == symbols_ || w == symbols_.complement();
}

bool Pattern::same_as(const Pattern& o) const {
    return matches(o.symbols_);
}

std::string Pattern::str() const {
    std::string s(symbols_.size(), 'a');
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_.bit(i)) s[i] = 'A';
    return s;
}

}  // namespace tmc
