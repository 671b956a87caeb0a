#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pms/matching_set.hpp"
#include "pms/partition.hpp"
#include "pms/set_partition.hpp"
#include "pms/zonal.hpp"

namespace pms {

/// Verdict of a by-definition factorisation check. When the answer is no, the
/// first set partition (in canonical order) whose refinement count deviates is
/// kept as a witness.
struct FactorisationReport {
    Partition lambda;
    bool is_factorisation = false;
    long long index = 0;  // the constant c, when is_factorisation
    std::optional<SetPartition> witness;
    long long witness_count = 0;  // refinement count at the witness
};

/// Counts, for every set partition P of shape 2λ, the members of D refining P.
/// Yes iff the count is one constant c; otherwise no, with the first deviating
/// partition as witness. D must be nonempty.
FactorisationReport check_by_definition(const MatchingSet& d, const Partition& lambda);

/// The dual-distribution criterion: true iff a′_μ(D) = 0 for every μ ⊢ n with
/// λ ⊴ μ and μ ≠ (n). Agrees with check_by_definition on every input.
bool check_by_design(const MatchingSet& d, const Partition& lambda, const ZonalTable& table);

/// |D| = c·(2n−1)!!/∏(2λ_i−1)!! for any λ-factorisation of index c.
/// Throws if the quotient is not an integer (the pair (λ,c) is infeasible).
BigInt expected_size(const Partition& lambda, const BigInt& c);

/// The index a λ-factorisation of index c_λ has as a μ-factorisation:
/// c_λ·∏(2μ_i−1)!!/∏(2λ_i−1)!!. Requires λ ⊴ μ. Non-integral results certify
/// that no λ-factorisation of index c_λ exists.
Rational index_conversion(const Partition& lambda, const Partition& mu, const BigInt& c_lambda);

struct ScreenViolation {
    std::string rule;      // "size", "part-pair", "two-part-chain", "two-ones", "known-shape"
    Partition shape;       // the (sub-)shape whose constraint failed
    std::string detail;
};

struct ScreenOptions {
    /// Shapes with a proven nonexistent factorisation at a given index;
    /// extensible by search results. A shape entry rules out every λ
    /// containing it as a sub-multiset of parts, at the matching index.
    std::vector<std::pair<Partition, BigInt>> known_nonexistent = default_known_nonexistent();
    static std::vector<std::pair<Partition, BigInt>> default_known_nonexistent();
};

/// Divisibility/feasibility screen for a (λ, c) pair. Every distinct
/// sub-multiset μ of λ's parts (a derived factorisation, same index) is put
/// through: expected-size integrality, the part-pair divisibility test
/// 2k−1 | (2l+1)c, the full index-conversion chain for two-part shapes, the
/// (2,1,…,1) index-1 exclusion (|μ| ≥ 5), and the known-shape table.
/// An empty result means "not ruled out" — never an existence claim.
std::vector<ScreenViolation> feasibility_screen(const Partition& lambda, const BigInt& c,
                                                const ScreenOptions& options = {});

struct DominanceConsequence {
    Partition mu;
    Rational index;  // converted index c_μ
    bool integral = false;
};

/// Every μ strictly dominating λ with its converted index; non-integral
/// entries are contradictions (no λ-factorisation of index c exists).
std::vector<DominanceConsequence> dominance_consequences(const Partition& lambda, const BigInt& c);

/// Derivation of D at a point set S of even size 2k: the members refining
/// {S, complement}, restricted to the complement and relabelled
/// order-preservingly to {1,…,2(n−k)}. May be empty (the caller decides what
/// that means).
MatchingSet derive(const MatchingSet& d, const std::vector<int>& s);

}  // namespace pms
