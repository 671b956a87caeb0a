#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pms/factorisation.hpp"
#include "pms/matching_set.hpp"
#include "pms/partition.hpp"
#include "pms/set_partition.hpp"

namespace pms {

/// Incidence system for the λ-factorisation search on K_{2n}: one row per set
/// partition of shape 2λ, one column per matching; a bit is set iff the
/// matching refines the partition. A solution is a column set meeting every
/// row exactly `index_target` times.
struct ConstraintSystem {
    int n = 0;
    Partition lambda;
    long long index_target = 1;  // c

    std::vector<Matching> columns;       // all matchings, canonical order
    std::vector<SetPartition> rows;      // shape-2λ partitions, canonical order
    std::vector<std::vector<uint64_t>> row_bits;  // per-row bitset over columns
    std::vector<std::vector<int>> row_cols;       // incident columns per row
    std::vector<std::vector<int>> col_rows;       // incident rows per column

    bool row_has(int row, int col) const {
        return (row_bits[static_cast<size_t>(row)][static_cast<size_t>(col) >> 6] >>
                (static_cast<unsigned>(col) & 63u)) & 1u;
    }
};

/// Builds the system and verifies both weight invariants (row weight
/// ∏(2λ_i−1)!!, column weight n!/∏ i!^{m_i}m_i!). n ≤ 6.
ConstraintSystem build_system(int n, const Partition& lambda, long long c);

enum class SearchStatus { SAT, UNSAT, ABORTED };

struct SearchStats {
    long long nodes = 0;         // branch decisions
    long long propagations = 0;  // forced column exclusions
    long long solutions = 0;     // only > 1 when enumerating
    double wall_seconds = 0;
};

struct SearchOptions {
    /// Force the base matching into the solution. Sound symmetry breaking:
    /// S_{2n} is transitive on matchings and maps solutions to solutions, so
    /// a solution exists iff one through the base matching exists.
    bool force_base = false;
    /// Stop after this many branch decisions and report ABORTED (< 0: none).
    long long node_limit = -1;
    /// Keep searching after the first solution and count all of them.
    bool enumerate_all = false;
    /// Explore the two root branches concurrently. Verdicts are unaffected;
    /// single-threaded mode is the reproducibility contract for statistics.
    int threads = 1;
    /// Pre-assigned columns (index, include?) applied before the search.
    std::vector<std::pair<int, bool>> pins;
    /// Cap on stored solutions when enumerating (the count stays exact).
    size_t max_stored_solutions = 8;
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::UNSAT;
    std::optional<MatchingSet> solution;            // first found, if any
    std::vector<MatchingSet> solutions;             // when enumerating
    SearchStats stats;
};

/// Complete backtracking search. Branches on the first available column of
/// the most constrained unsatisfied row (fewest available − needed), include
/// branch first; a row reaching its target excludes its remaining columns; a
/// row that can no longer reach the target fails the branch. SAT solutions
/// are re-verified by both factorisation checkers before being returned.
SearchOutcome solve(const ConstraintSystem& system, const SearchOptions& options = {});

/// Pins encoding "the derivation at S equals d_sub": every column refining
/// {S, complement} whose restriction is not in d_sub is excluded; when
/// |S| = 2 the unique extension of each member of d_sub is included. |S|/2
/// must be a part of the system's λ.
std::vector<std::pair<int, bool>> seed_from_derivation(const ConstraintSystem& system,
                                                       const MatchingSet& d_sub,
                                                       const std::vector<int>& s);

}  // namespace pms
