#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tmc/pairs.hpp"

namespace tmc {

/// coeff * P[modulus * n + residue]; modulus a power of two,
/// 0 <= residue < modulus.
struct KernelTerm {
    std::int64_t coeff = 1;
    std::int64_t modulus = 1;
    std::int64_t residue = 0;

    auto operator<=>(const KernelTerm&) const = default;
    /// "P[16n+3]", "P[2n+1]", "P[8n]", "P[n]"
    std::string subsequence_str() const;
};

/// lhs = sum of rhs, for every n >= 0; lhs coefficient is 1.
struct KernelRelation {
    KernelTerm lhs;
    std::vector<KernelTerm> rhs;

    bool operator==(const KernelRelation&) const = default;
    /// "P[16n+15] = P[16n+3] + 2*P[8n+7] - 3*P[8n+6] - ..."
    std::string str() const;
};

/// The 13 relations that pin the sequence down, in catalog order.
const std::vector<KernelRelation>& relations_catalog();

/// The 9 subsequences every P[2^e n + c] reduces to.
const std::vector<KernelTerm>& generator_basis();

struct VerifyReport {
    bool holds = true;
    std::optional<std::int64_t> first_failure;
};

/// Checks the relation for every n in [n_lo, n_hi] under the evaluator,
/// splitting the range across hardware threads; the reported failure is the
/// smallest failing n.
VerifyReport verify_relation(const KernelRelation& rel, std::int64_t n_lo,
                             std::int64_t n_hi, const Evaluator& eval);

struct CoverageReport {
    std::set<std::int64_t> covered;
    bool complete = false;
};

/// Residues mod `modulus` reachable from the relations' left-hand sides
/// (each lhs P[mn+c] covers every residue congruent to c mod m).
CoverageReport residue_coverage(const std::vector<KernelRelation>& rels,
                                std::int64_t modulus);

/// Expands every basis subsequence `depth` levels (P[mn+c] has children
/// P[2mn+c] and P[2mn+m+c]) and checks each child rewrites, through the
/// relations, into an integer combination of basis subsequences. Returns
/// true on success; throws non_closure naming the first stuck subsequence.
bool basis_closure_check(const std::vector<KernelRelation>& rels,
                         const std::vector<KernelTerm>& basis, int depth);

/// Searches for linear relations among the subsequences P[2^e n + c] with
/// 2^e <= max_modulus by exact integer elimination over the sample matrix
/// n = 0..n_max, plus a scan for equal column pairs. Candidates with more
/// than max_terms terms are dropped; every survivor is re-verified on
/// [n_max+1, 8*n_max] before being returned, ranked by (lhs modulus, term
/// count, largest coefficient). Throws insufficient_samples when the matrix
/// has no more rows than columns.
std::vector<KernelRelation> discover_relations(std::int64_t n_max,
                                               std::int64_t max_modulus,
                                               std::size_t max_terms);

}  // namespace tmc
