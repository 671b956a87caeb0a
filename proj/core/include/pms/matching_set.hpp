#pragma once

#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "pms/matching.hpp"
#include "pms/partition.hpp"
#include "pms/rational.hpp"
#include "pms/zonal.hpp"

namespace pms {

/// Relation-frequency vector of a set of matchings (inner distribution,
/// indexed by relations ρ) or its transform (dual distribution, indexed by
/// eigenspaces μ). Entries follow the partitions_of(n) order.
struct Distribution {
    std::vector<Partition> index;
    std::vector<Rational> value;

    const Rational& at(const Partition& p) const;
    Rational sum() const;
};

/// Finite set of perfect matchings of K_{2n}, stored sorted and without
/// duplicates. Immutable after construction; distribution results are cached.
class MatchingSet {
public:
    MatchingSet(int n, std::vector<Matching> matchings);

    int n() const { return n_; }
    size_t size() const { return matchings_.size(); }
    bool empty() const { return matchings_.empty(); }
    const std::vector<Matching>& matchings() const { return matchings_; }
    bool contains(const Matching& m) const;

    MatchingSet(const MatchingSet& other);
    MatchingSet& operator=(const MatchingSet& other);
    MatchingSet(MatchingSet&&) noexcept = default;
    MatchingSet& operator=(MatchingSet&&) noexcept = default;

    /// a_ρ = (1/|Z|)·#{(x,y) ∈ Z² : d(x,y) = ρ}. Requires a nonempty set.
    const Distribution& inner_distribution() const;

    /// a′_μ = (2n−1)!!·χ^{2μ}(1)/|Z| · Σ_ρ ω^μ_ρ·a_ρ. Normalised so that
    /// a′_{(n)} = (2n−1)!! for every nonempty Z; all entries are ≥ 0 and
    /// a′_μ = 0 exactly when 1_Z is orthogonal to the μ-eigenspace.
    const Distribution& dual_distribution(const ZonalTable& table) const;

    // --- interchange formats ---
    /// {"n": int, "matchings": [[[a,b],...],...]} with canonical pair order.
    std::string to_json() const;
    /// One matching per line: "1-2 3-4 5-6".
    std::string to_text() const;
    /// Accepts either format; JSON if the first non-space byte is '{'.
    static MatchingSet parse(const std::string& content);
    static MatchingSet load_file(const std::string& path);
    void save_file(const std::string& path) const;

private:
    int n_ = 0;
    std::vector<Matching> matchings_;
    mutable std::unique_ptr<std::mutex> cache_mutex_;
    mutable std::optional<Distribution> inner_;
    mutable std::optional<Distribution> dual_;
};

/// Free-function forms of the cached computations above.
Distribution inner_distribution(const MatchingSet& z);
Distribution dual_distribution(const MatchingSet& z, const ZonalTable& table);

}  // namespace pms
