#include "tmc/regularity.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <future>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "tmc/errors.hpp"

namespace tmc {

namespace {

KernelTerm term(std::int64_t coeff, std::int64_t modulus, std::int64_t residue) {
    return {coeff, modulus, residue};
}

std::int64_t checked_index(std::int64_t m, std::int64_t n, std::int64_t c) {
    if (n > (std::numeric_limits<std::int64_t>::max() - c) / m)
        throw overflow("subsequence index exceeds the int64 range");
    return m * n + c;
}

std::int64_t rhs_value(const KernelRelation& rel, std::int64_t n,
                       const Evaluator& eval) {
    std::int64_t sum = 0;
    for (const KernelTerm& t : rel.rhs)
        sum += t.coeff * eval(checked_index(t.modulus, n, t.residue));
    return sum;
}

}  // namespace

std::string KernelTerm::subsequence_str() const {
    std::string idx;
    if (modulus == 1)
        idx = "n";
    else
        idx = std::to_string(modulus) + "n";
    if (residue != 0) idx += "+" + std::to_string(residue);
    return "P[" + idx + "]";
}

std::string KernelRelation::str() const {
    std::string s = lhs.subsequence_str() + " =";
    bool first = true;
    for (const KernelTerm& t : rhs) {
        std::int64_t a = t.coeff;
        if (first) {
            s += a < 0 ? " -" : " ";
            first = false;
        } else {
            s += a < 0 ? " - " : " + ";
        }
        std::int64_t mag = a < 0 ? -a : a;
        if (mag != 1) s += std::to_string(mag) + "*";
        s += t.subsequence_str();
    }
    return s;
}

const std::vector<KernelRelation>& relations_catalog() {
    static const std::vector<KernelRelation> catalog = {
        {term(1, 4, 1), {term(1, 2, 1)}},
        {term(1, 8, 4), {term(1, 8, 3), term(1, 4, 3), term(-1, 4, 2)}},
        {term(1, 16, 0), {term(1, 8, 0)}},
        {term(1, 16, 2), {term(1, 8, 2)}},
        {term(1, 16, 6),
         {term(-1, 16, 3), term(1, 8, 3), term(3, 8, 2), term(1, 4, 3),
          term(-2, 4, 2), term(-1, 2, 1)}},
        {term(1, 16, 7),
         {term(-1, 16, 3), term(1, 8, 3), term(3, 8, 2), term(2, 4, 3),
          term(-3, 4, 2), term(-1, 2, 1)}},
        {term(1, 16, 8), {term(1, 8, 2), term(1, 4, 3), term(-1, 2, 1)}},
        {term(1, 16, 10), {term(1, 8, 2), term(1, 4, 3), term(-1, 2, 1)}},
        {term(1, 16, 11),
         {term(-1, 16, 3), term(3, 8, 2), term(1, 4, 3), term(-2, 2, 1)}},
        {term(1, 16, 14),
         {term(1, 16, 3), term(1, 8, 7), term(-1, 8, 3), term(-1, 8, 2),
          term(-1, 4, 3), term(3, 4, 2), term(-1, 2, 1)}},
        {term(1, 16, 15),
         {term(1, 16, 3), term(2, 8, 7), term(-3, 8, 6), term(-2, 8, 3),
          term(6, 4, 2), term(-3, 2, 1)}},
        {term(1, 32, 3), {term(1, 8, 3)}},
        {term(1, 32, 19),
         {term(-1, 16, 3), term(1, 8, 3), term(3, 8, 2), term(2, 4, 3),
          term(-3, 4, 2), term(-1, 2, 1)}},
    };
    return catalog;
}

const std::vector<KernelTerm>& generator_basis() {
    static const std::vector<KernelTerm> basis = {
        term(1, 2, 1), term(1, 4, 2), term(1, 4, 3),
        term(1, 8, 0), term(1, 8, 2), term(1, 8, 3),
        term(1, 8, 6), term(1, 8, 7), term(1, 16, 3),
    };
    return basis;
}

VerifyReport verify_relation(const KernelRelation& rel, std::int64_t n_lo,
                             std::int64_t n_hi, const Evaluator& eval) {
    if (n_lo < 0 || n_hi < n_lo)
        throw std::invalid_argument("verification range is empty or negative");

    auto scan = [&rel, &eval](std::int64_t lo,
                              std::int64_t hi) -> std::optional<std::int64_t> {
        for (std::int64_t n = lo; n <= hi; ++n) {
            std::int64_t lhs =
                eval(checked_index(rel.lhs.modulus, n, rel.lhs.residue));
            if (lhs != rhs_value(rel, n, eval)) return n;
        }
        return std::nullopt;
    };

    std::int64_t span = n_hi - n_lo + 1;
    unsigned hw = std::thread::hardware_concurrency();
    std::int64_t workers = std::min<std::int64_t>(hw == 0 ? 1 : hw, span);
    if (span < 1024 || workers <= 1) {
        auto hit = scan(n_lo, n_hi);
        return {!hit.has_value(), hit};
    }

    std::int64_t chunk = (span + workers - 1) / workers;
    std::vector<std::future<std::optional<std::int64_t>>> futs;
    for (std::int64_t w = 0; w < workers; ++w) {
        std::int64_t lo = n_lo + w * chunk;
        std::int64_t hi = std::min(n_hi, lo + chunk - 1);
        if (lo > n_hi) break;
        futs.push_back(std::async(std::launch::async, scan, lo, hi));
    }
    std::optional<std::int64_t> first;
    for (auto& f : futs) {
        auto hit = f.get();
        if (hit && !first) first = hit;  // chunks are in ascending order
    }
    return {!first.has_value(), first};
}

CoverageReport residue_coverage(const std::vector<KernelRelation>& rels,
                                std::int64_t modulus) {
    if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
    CoverageReport rep;
    for (const KernelRelation& rel : rels) {
        std::int64_t g = std::gcd(rel.lhs.modulus, modulus);
        for (std::int64_t r = rel.lhs.residue % g; r < modulus; r += g)
            rep.covered.insert(r);
    }
    rep.complete =
        rep.covered.size() == static_cast<std::size_t>(modulus);
    return rep;
}

bool basis_closure_check(const std::vector<KernelRelation>& rels,
                         const std::vector<KernelTerm>& basis, int depth) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    std::set<std::pair<std::int64_t, std::int64_t>> in_basis;
    for (const KernelTerm& b : basis) in_basis.insert({b.modulus, b.residue});

    // Rewrites (m, c) through the relation with the largest dividing lhs
    // modulus; each substitution strictly decreases (modulus, residue), so
    // the guard only trips on a genuinely stuck subsequence.
    std::function<void(std::int64_t, std::int64_t, int)> reduce =
        [&](std::int64_t m, std::int64_t c, int guard) {
            if (in_basis.contains({m, c})) return;
            if (guard > 256)
                throw non_closure("rewriting did not terminate", m, c);
            const KernelRelation* best = nullptr;
            for (const KernelRelation& rel : rels) {
                std::int64_t lm = rel.lhs.modulus;
                if (m % lm != 0 || c % lm != rel.lhs.residue) continue;
                if (!best || lm > best->lhs.modulus) best = &rel;
            }
            if (!best)
                throw non_closure("no relation applies", m, c);
            std::int64_t stretch = m / best->lhs.modulus;
            std::int64_t shift = (c - best->lhs.residue) / best->lhs.modulus;
            for (const KernelTerm& t : best->rhs)
                reduce(t.modulus * stretch, t.modulus * shift + t.residue,
                       guard + 1);
        };

    std::function<void(std::int64_t, std::int64_t, int)> expand =
        [&](std::int64_t m, std::int64_t c, int level) {
            if (level == depth) return;
            for (std::int64_t child : {c, m + c}) {
                reduce(2 * m, child, 0);
                expand(2 * m, child, level + 1);
            }
        };

    for (const KernelTerm& b : basis) expand(b.modulus, b.residue, 0);
    return true;
}

namespace {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

struct EchelonRow {
    std::vector<Rat> vec;
    std::size_t pivot = 0;
    std::map<std::size_t, Rat> rep;  // vec as a combination of columns
};

std::int64_t max_abs_coeff(const KernelRelation& rel) {
    std::int64_t m = 1;
    for (const KernelTerm& t : rel.rhs) m = std::max(m, std::abs(t.coeff));
    return m;
}

}  // namespace

std::vector<KernelRelation> discover_relations(std::int64_t n_max,
                                               std::int64_t max_modulus,
                                               std::size_t max_terms) {
    if (n_max < 1 || max_modulus < 1 || max_terms < 2)
        throw std::invalid_argument("discovery needs n_max >= 1, "
                                    "max_modulus >= 1, max_terms >= 2");

    std::vector<KernelTerm> cols;
    for (std::int64_t m = 1; m <= max_modulus; m *= 2)
        for (std::int64_t c = 0; c < m; ++c) cols.push_back(term(1, m, c));

    std::size_t rows = static_cast<std::size_t>(n_max) + 1;
    if (rows <= cols.size())
        throw insufficient_samples("need more sample rows than columns");

    Evaluator eval = fast_evaluator();
    std::vector<std::vector<std::int64_t>> samples(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        samples[j].resize(rows);
        for (std::size_t n = 0; n < rows; ++n)
            samples[j][n] = eval(checked_index(
                cols[j].modulus, static_cast<std::int64_t>(n), cols[j].residue));
    }

    std::vector<KernelRelation> found;
    std::set<std::string> seen;
    auto push_candidate = [&](KernelRelation rel) {
        if (1 + rel.rhs.size() > max_terms) return;
        std::string key = rel.str();
        if (!seen.insert(key).second) return;
        auto report = verify_relation(rel, n_max + 1, 8 * n_max, eval);
        if (report.holds) found.push_back(std::move(rel));
    };

    // Equal column pairs give the identity-shaped relations directly.
    for (std::size_t j = 1; j < cols.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (samples[j] == samples[i])
                push_candidate({cols[j], {cols[i]}});

    // Exact elimination: express each dependent column over earlier pivots.
    std::vector<EchelonRow> ech;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        std::vector<Rat> v(samples[j].begin(), samples[j].end());
        std::map<std::size_t, Rat> rep{{j, Rat(1)}};
        for (const EchelonRow& e : ech) {
            Rat f = v[e.pivot] / e.vec[e.pivot];
            if (f == 0) continue;
            for (std::size_t i = 0; i < rows; ++i) v[i] -= f * e.vec[i];
            for (const auto& [c, co] : e.rep) rep[c] -= f * co;
        }
        std::size_t pivot = rows;
        for (std::size_t i = 0; i < rows; ++i) {
            if (v[i] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < rows) {
            ech.push_back({std::move(v), pivot, std::move(rep)});
            continue;
        }
        // Dependent column: col_j = -sum of the other rep entries.
        KernelRelation rel{cols[j], {}};
        bool integral = true;
        for (const auto& [c, co] : rep) {
            if (c == j || co == 0) continue;
            Rat coeff = -co;
            if (boost::multiprecision::denominator(coeff) != 1) {
                integral = false;
                break;
            }
            Int num = boost::multiprecision::numerator(coeff);
            if (num > std::numeric_limits<std::int64_t>::max() ||
                num < std::numeric_limits<std::int64_t>::min()) {
                integral = false;
                break;
            }
            rel.rhs.push_back(term(num.convert_to<std::int64_t>(),
                                   cols[c].modulus, cols[c].residue));
        }
        if (integral && !rel.rhs.empty()) push_candidate(std::move(rel));
    }

    std::stable_sort(found.begin(), found.end(),
                     [](const KernelRelation& a, const KernelRelation& b) {
                         auto ka = std::tuple(a.lhs.modulus, a.rhs.size(),
                                              max_abs_coeff(a), a.lhs.residue);
                         auto kb = std::tuple(b.lhs.modulus, b.rhs.size(),
                                              max_abs_coeff(b), b.lhs.residue);
                         return ka < kb;
                     });
    return found;
}

}  // namespace tmc
