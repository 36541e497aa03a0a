#include "tmc/frames.hpp"

#include <bit>
#include <numeric>
#include <utility>

#include "tmc/errors.hpp"
#include "tmc/thue_morse.hpp"

namespace tmc {

std::optional<FrameFactorization>
frame_at(const Word& w, int q, std::size_t offset) {
    if (q < 0 || q >= 62) throw std::invalid_argument("frame period out of range");
    std::size_t period = std::size_t(1) << q;
    if (offset >= period) throw std::invalid_argument("offset must be < 2^q");

    Word block = tm_prefix(period);
    int assign = -1;  // -1 unset, 0 block as-is, 1 complemented
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::size_t pos = (offset + i) & (period - 1);
        if (pos == 0) assign = -1;
        int delta = w.bit(i) ^ block.bit(pos);
        if (assign == -1)
            assign = delta;
        else if (delta != assign)
            return std::nullopt;
    }

    FrameFactorization out;
    out.q = q;
    out.offset = offset;
    std::size_t head = (period - offset) & (period - 1);
    if (head >= w.size()) {
        out.prefix = w;
        return out;
    }
    out.prefix = w.subword(0, head);
    std::size_t i = head;
    while (i + period <= w.size()) {
        out.blocks.push_back(w.subword(i, period));
        i += period;
    }
    out.suffix = w.subword(i, w.size() - i);
    return out;
}

std::set<std::size_t> reading_frames(const Word& w, int q) {
    if (!is_factor(w)) throw not_a_factor("reading_frames: not a factor");
    std::set<std::size_t> out;
    std::size_t period = std::size_t(1) << q;
    for (std::size_t off = 0; off < period; ++off)
        if (frame_at(w, q, off)) out.insert(off);
    return out;
}

namespace {

// Structural candidate offsets for the period-2 grid.
std::pair<bool, bool> frame2_candidates(const Word& w) {
    bool ok0 = frame_at(w, 1, 0).has_value();
    bool ok1 = frame_at(w, 1, 1).has_value();
    return {ok0, ok1};
}

Word fill_at(const Word& w, std::size_t offset) {
    Word out;
    if (offset == 1) out.push_back(1 - w.first());
    out.append(w);
    if ((offset + w.size()) % 2 == 1) out.push_back(1 - w.last());
    return out;
}

// The six words whose maximal extensible frame is the letter grid itself.
bool frame_neutral(const Word& w) {
    switch (w.size()) {
        case 1: return true;
        case 2: return w.bit(0) != w.bit(1);
        case 3: return w.bit(0) != w.bit(1) && w.bit(1) != w.bit(2);
        default: return false;
    }
}

// Offset of the extensible period-2 frame, assuming w is a factor with
// |w| >= 2 and a unique such frame. For |w| >= 4 the first two pairs decide;
// shorter pair-containing words are pinned by the pair.
std::size_t ext2_offset(const Word& w) {
    if (w.size() == 2) return 1;  // only called on pairs
    if (w.size() == 3) return w.bit(0) == w.bit(1) ? 1 : 0;
    return (w.bit(0) == w.bit(1) || w.bit(2) == w.bit(3)) ? 1 : 0;
}

}  // namespace

std::size_t extensible_2frame(const Word& w) {
    if (w.size() < 4) throw too_short("extensible_2frame needs |w| >= 4");
    if (!is_factor(w)) throw not_a_factor("extensible_2frame: not a factor");
    auto [ok0, ok1] = frame2_candidates(w);
    if (ok0 != ok1) return ok0 ? 0 : 1;
    if (!ok0) throw error("factor admits no period-2 frame");
    // Alternating word: exactly one candidate fills to a factor.
    bool f0 = is_factor(fill_at(w, 0));
    bool f1 = is_factor(fill_at(w, 1));
    if (f0 == f1) throw error("extensible period-2 frame is not unique");
    return f0 ? 0 : 1;
}

Word fill_frame(const Word& w) {
    if (w.size() < 2) throw too_short("fill_frame needs |w| >= 2");
    if (!is_factor(w)) throw not_a_factor("fill_frame: not a factor");
    if (w.size() >= 4) return fill_at(w, extensible_2frame(w));
    auto [ok0, ok1] = frame2_candidates(w);
    if (ok0 && ok1)
        throw frame_ambiguous("both period-2 offsets extend this short word");
    if (!ok0 && !ok1) throw error("factor admits no period-2 frame");
    return fill_at(w, ok0 ? 0 : 1);
}

MerfResult merf(const Word& w, std::vector<MerfStep>& steps) {
    if (w.empty()) throw too_short("merf needs a nonempty word");
    if (!is_factor(w)) throw not_a_factor("merf: not a factor");

    Word cur = w;
    int q = 0;
    while (!frame_neutral(cur)) {
        ++q;
        Word filled = fill_at(cur, ext2_offset(cur));
        Word pre = morphism_preimage(filled);
        steps.push_back({q, filled, std::move(pre)});
        cur = steps.back().preimage;
    }
    Word ext = cur;
    for (int i = 0; i < q; ++i) ext = morphism_image(ext);

    std::size_t offset = ext.size() + 1, hits = 0;
    for (std::size_t i = 0; i + w.size() <= ext.size(); ++i) {
        if (ext.subword(i, w.size()) == w) {
            ++hits;
            offset = i;
        }
    }
    if (hits != 1) throw error("input does not occur uniquely in its extension");
    return {std::move(ext), std::uint64_t(1) << q, offset};
}

MerfResult merf(const Word& w) {
    std::vector<MerfStep> steps;
    return merf(w, steps);
}

std::uint64_t determined_letters(const Word& w) {
    return merf(w).extended.size() - w.size();
}

std::pair<std::uint64_t, std::uint64_t>
unique_extension_bounds(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("bounds need n >= 1");
    if (n == 1) return {0, 0};
    if (n == 2) return {0, 2};
    if (n == 3) return {0, 1};
    std::uint64_t half = std::uint64_t(1) << (std::bit_width(n) - 2);
    std::uint64_t lo = (half - n % half) % half;
    std::uint64_t hi = (std::uint64_t(1) << (std::bit_width(n - 2) + 1)) - n;
    return {lo, hi};
}

RatioExtrema extension_ratio_extrema(std::size_t n_max) {
    if (n_max < 4) throw std::invalid_argument("ratio scan needs n_max >= 4");
    RatioExtrema r;
    bool init = false;
    for (std::size_t n = 1; n <= n_max; ++n) {
        for (const Word& w : *enumerate_factors(n)) {
            auto e = static_cast<std::int64_t>(merf(w).extended.size());
            auto d = static_cast<std::int64_t>(n);
            if (!init) {
                r.min_num = r.max_num = e;
                r.min_den = r.max_den = d;
                r.min_witness = r.max_witness = w;
                init = true;
                continue;
            }
            if (e * r.min_den < r.min_num * d) {
                r.min_num = e;
                r.min_den = d;
                r.min_witness = w;
            }
            if (e * r.max_den > r.max_num * d) {
                r.max_num = e;
                r.max_den = d;
                r.max_witness = w;
            }
        }
    }
    auto g1 = std::gcd(r.min_num, r.min_den);
    r.min_num /= g1;
    r.min_den /= g1;
    auto g2 = std::gcd(r.max_num, r.max_den);
    r.max_num /= g2;
    r.max_den /= g2;
    return r;
}

}  // namespace tmc
