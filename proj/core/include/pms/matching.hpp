#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "pms/partition.hpp"
#include "pms/permutation.hpp"

namespace pms {

/// Perfect matching of {1,…,2n}: n disjoint pairs covering every point.
/// Canonical form: each pair (a,b) with a<b, pairs sorted by first entry;
/// equivalently the partner table, which is what is stored.
class Matching {
public:
    Matching() = default;

    /// The base matching {{1,2},{3,4},…,{2n−1,2n}}.
    static Matching base(int n);
    /// Pairs are 1-based and validated.
    static Matching from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);
    /// Trusted 0-based partner table (an involution without fixed points).
    static Matching from_partner_raw(std::vector<int> partner);

    int points() const { return static_cast<int>(partner_.size()); }
    int n() const { return points() / 2; }

    /// Mate of v, 1-based.
    int partner(int v) const { return partner_[static_cast<size_t>(v - 1)] + 1; }
    const std::vector<int>& partner_raw() const { return partner_; }

    /// Canonical pair list, 1-based.
    std::vector<std::pair<int, int>> pairs() const;

    bool operator==(const Matching&) const = default;
    auto operator<=>(const Matching&) const = default;

    /// "1-2 3-4 5-6"
    std::string str() const;

private:
    std::vector<int> partner_;  // 0-based
};

/// All (2n−1)!! matchings, deterministic order: the mate of the smallest free
/// point is chosen ascending, so index 0 is the base matching. Guarded to
/// n ≤ 8 ((2·8−1)!! = 2,027,025).
std::vector<Matching> all_matchings(int n);

/// (2n−1)!! as an integer.
BigInt matching_count(int n);

/// Index of m in the all_matchings(m.n()) order, computed directly.
long long matching_rank(const Matching& m);

/// The coset distance of two matchings on the same point set: half-lengths of
/// the cycles of their union multigraph, sorted decreasing; a partition of n.
Partition coset_distance(const Matching& a, const Matching& b);

/// {{σ(a),σ(b)} : {a,b} ∈ m}, re-canonicalised.
Matching apply_perm(const Permutation& sigma, const Matching& m);

}  // namespace pms
