#include "pms/search.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <stdexcept>

#include "pms/zonal.hpp"

namespace pms {

namespace {

/// All matchings of an arbitrary (sorted, even-sized) point set, as pair lists.
void block_matchings(std::vector<int>& pts, std::vector<std::pair<int, int>>& acc,
                     std::vector<std::vector<std::pair<int, int>>>& out) {
    if (pts.empty()) {
        out.push_back(acc);
        return;
    }
    const int first = pts.front();
    for (size_t i = 1; i < pts.size(); ++i) {
        const int mate = pts[i];
        std::vector<int> rest;
        rest.reserve(pts.size() - 2);
        for (size_t j = 1; j < pts.size(); ++j)
            if (j != i) rest.push_back(pts[j]);
        acc.emplace_back(first, mate);
        block_matchings(rest, acc, out);
        acc.pop_back();
    }
}

/// Matchings refining a set partition: independent matchings of each block.
std::vector<Matching> refining_matchings(int n, const SetPartition& sp) {
    std::vector<std::vector<std::vector<std::pair<int, int>>>> perBlock;
    for (const auto& block : sp.blocks) {
        std::vector<int> pts = block;
        std::vector<std::pair<int, int>> acc;
        std::vector<std::vector<std::pair<int, int>>> ms;
        block_matchings(pts, acc, ms);
        perBlock.push_back(std::move(ms));
    }
    std::vector<Matching> out;
    std::vector<size_t> pick(perBlock.size(), 0);
    for (;;) {
        std::vector<std::pair<int, int>> pairs;
        for (size_t b = 0; b < perBlock.size(); ++b)
            for (auto pr : perBlock[b][pick[b]]) pairs.push_back(pr);
        out.push_back(Matching::from_pairs(n, pairs));
        size_t pos = 0;
        while (pos < perBlock.size() && pick[pos] + 1 == perBlock[pos].size()) pick[pos++] = 0;
        if (pos == perBlock.size()) break;
        ++pick[pos];
    }
    return out;
}

}  // namespace

ConstraintSystem build_system(int n, const Partition& lambda, long long c) {
    if (n < 1 || n > 6) throw std::invalid_argument("build_system: n must be in 1..6");
    if (lambda.size() != n) throw std::invalid_argument("build_system: |lambda| must equal n");
    if (c < 1) throw std::invalid_argument("build_system: index must be positive");

    ConstraintSystem sys;
    sys.n = n;
    sys.lambda = lambda;
    sys.index_target = c;
    sys.columns = all_matchings(n);
    sys.rows = set_partitions_of_shape(2 * n, lambda.doubled());

    const size_t words = (sys.columns.size() + 63) / 64;
    sys.row_bits.assign(sys.rows.size(), std::vector<uint64_t>(words, 0));
    sys.row_cols.resize(sys.rows.size());
    sys.col_rows.resize(sys.columns.size());

    BigInt rowWeight = 1;
    for (int p : lambda.parts()) rowWeight *= odd_double_factorial(p);

    for (size_t r = 0; r < sys.rows.size(); ++r) {
        std::vector<int> cols;
        for (const Matching& m : refining_matchings(n, sys.rows[r]))
            cols.push_back(static_cast<int>(matching_rank(m)));
        std::sort(cols.begin(), cols.end());
        if (BigInt(static_cast<long>(cols.size())) != rowWeight)
            throw std::logic_error("build_system: row weight does not match ∏(2λ_i−1)!!");
        for (int cIdx : cols) {
            sys.row_bits[r][static_cast<size_t>(cIdx) >> 6] |= uint64_t(1)
                                                              << (static_cast<unsigned>(cIdx) & 63u);
            sys.col_rows[static_cast<size_t>(cIdx)].push_back(static_cast<int>(r));
        }
        sys.row_cols[r] = std::move(cols);
    }

    const BigInt colWeight = refinement_count(lambda);
    for (size_t cIdx = 0; cIdx < sys.columns.size(); ++cIdx)
        if (BigInt(static_cast<long>(sys.col_rows[cIdx].size())) != colWeight)
            throw std::logic_error("build_system: column weight does not match refinement count");
    return sys;
}

namespace {

enum class ColState : int8_t { Undecided = 0, In = 1, Out = 2 };

struct Solver {
    const ConstraintSystem& sys;
    const long long target;
    long long nodeLimit;
    bool enumerateAll;
    size_t maxStored;

    std::vector<ColState> state;
    std::vector<int> satisfied;
    std::vector<int> available;
    std::vector<int> trail;  // decided columns, in order
    long long nodes = 0;
    long long propagations = 0;
    long long solutionCount = 0;
    std::vector<std::vector<int>> storedSolutions;
    bool aborted = false;

    explicit Solver(const ConstraintSystem& s, const SearchOptions& opt)
        : sys(s),
          target(s.index_target),
          nodeLimit(opt.node_limit),
          enumerateAll(opt.enumerate_all),
          maxStored(opt.max_stored_solutions),
          state(s.columns.size(), ColState::Undecided),
          satisfied(s.rows.size(), 0),
          available(s.rows.size(), 0) {
        for (size_t r = 0; r < s.rows.size(); ++r)
            available[r] = static_cast<int>(s.row_cols[r].size());
    }

    // Sets a column and updates row counters; false on an inconsistent pin.
    bool assign(int col, bool include) {
        ColState& st = state[static_cast<size_t>(col)];
        if (st != ColState::Undecided)
            return st == (include ? ColState::In : ColState::Out);
        st = include ? ColState::In : ColState::Out;
        trail.push_back(col);
        for (int r : sys.col_rows[static_cast<size_t>(col)]) {
            --available[static_cast<size_t>(r)];
            if (include) ++satisfied[static_cast<size_t>(r)];
        }
        if (!include) ++propagations;
        return true;
    }

    void undo_to(size_t mark) {
        while (trail.size() > mark) {
            const int col = trail.back();
            trail.pop_back();
            const bool wasIn = state[static_cast<size_t>(col)] == ColState::In;
            state[static_cast<size_t>(col)] = ColState::Undecided;
            for (int r : sys.col_rows[static_cast<size_t>(col)]) {
                ++available[static_cast<size_t>(r)];
                if (wasIn) --satisfied[static_cast<size_t>(r)];
            }
        }
    }

    // Fixpoint: saturated rows shed their remaining columns; starved rows fail.
    bool propagate(size_t from) {
        size_t cursor = from;
        while (cursor < trail.size()) {
            const int col = trail[cursor++];
            for (int r : sys.col_rows[static_cast<size_t>(col)]) {
                const int sat = satisfied[static_cast<size_t>(r)];
                const int avail = available[static_cast<size_t>(r)];
                if (sat > target) return false;
                if (sat + avail < target) return false;
                if (sat == static_cast<int>(target) && avail > 0) {
                    for (int cc : sys.row_cols[static_cast<size_t>(r)])
                        if (state[static_cast<size_t>(cc)] == ColState::Undecided)
                            if (!assign(cc, false)) return false;
                }
            }
        }
        return true;
    }

    // Most constrained unsatisfied row: least available − needed, then index.
    int pick_row() const {
        int best = -1;
        long long bestSlack = 0;
        for (size_t r = 0; r < sys.rows.size(); ++r) {
            const int need = static_cast<int>(target) - satisfied[r];
            if (need <= 0) continue;
            const long long slack = available[r] - need;
            if (best < 0 || slack < bestSlack) {
                best = static_cast<int>(r);
                bestSlack = slack;
            }
        }
        return best;
    }

    enum class Result { Exhausted, FoundStop, Aborted };

    Result search() {
        const int row = pick_row();
        if (row < 0) {
            // every row satisfied; record the chosen column set
            ++solutionCount;
            if (storedSolutions.size() < maxStored) {
                std::vector<int> chosen;
                for (size_t cIdx = 0; cIdx < state.size(); ++cIdx)
                    if (state[cIdx] == ColState::In) chosen.push_back(static_cast<int>(cIdx));
                storedSolutions.push_back(std::move(chosen));
            }
            return enumerateAll ? Result::Exhausted : Result::FoundStop;
        }

        int branchCol = -1;
        for (int cc : sys.row_cols[static_cast<size_t>(row)]) {
            if (state[static_cast<size_t>(cc)] == ColState::Undecided) {
                branchCol = cc;
                break;
            }
        }
        if (branchCol < 0) return Result::Exhausted;  // starved row; propagate caught it earlier

        for (const bool include : {true, false}) {
            ++nodes;
            if (nodeLimit >= 0 && nodes > nodeLimit) {
                aborted = true;
                return Result::Aborted;
            }
            const size_t mark = trail.size();
            if (assign(branchCol, include) && propagate(mark)) {
                const Result sub = search();
                if (sub != Result::Exhausted) return sub;
            }
            undo_to(mark);
        }
        return Result::Exhausted;
    }

    // Applies pins, propagates, then runs the full search.
    Result run(const std::vector<std::pair<int, bool>>& pins) {
        const size_t mark = trail.size();
        for (auto [col, include] : pins)
            if (!assign(col, include)) return Result::Exhausted;
        if (!propagate(mark)) return Result::Exhausted;
        return search();
    }
};

MatchingSet solution_set(const ConstraintSystem& sys, const std::vector<int>& cols) {
    std::vector<Matching> ms;
    ms.reserve(cols.size());
    for (int cIdx : cols) ms.push_back(sys.columns[static_cast<size_t>(cIdx)]);
    return MatchingSet(sys.n, std::move(ms));
}

void verify_solution(const ConstraintSystem& sys, const MatchingSet& d) {
    const FactorisationReport rep = check_by_definition(d, sys.lambda);
    if (!rep.is_factorisation || rep.index != sys.index_target)
        throw std::logic_error("solve: SAT solution fails the by-definition check");
    const ZonalTable table = zonal_table(sys.n);
    if (!check_by_design(d, sys.lambda, table))
        throw std::logic_error("solve: SAT solution fails the design criterion");
}

}  // namespace

SearchOutcome solve(const ConstraintSystem& system, const SearchOptions& options) {
    const auto start = std::chrono::steady_clock::now();

    std::vector<std::pair<int, bool>> pins = options.pins;
    if (options.force_base) pins.emplace_back(0, true);  // base matching is column 0

    SearchOutcome outcome;
    auto finish = [&](Solver::Result res, Solver& solver) {
        outcome.stats.nodes += solver.nodes;
        outcome.stats.propagations += solver.propagations;
        outcome.stats.solutions += solver.solutionCount;
        if (res == Solver::Result::Aborted || solver.aborted) outcome.status = SearchStatus::ABORTED;
        for (auto& cols : solver.storedSolutions) {
            if (outcome.solutions.size() < options.max_stored_solutions)
                outcome.solutions.push_back(solution_set(system, cols));
        }
    };

    if (options.threads <= 1) {
        Solver solver(system, options);
        const Solver::Result res = solver.run(pins);
        finish(res, solver);
    } else {
        // Split on the include/exclude of the first branch column; each side
        // runs the same deterministic sequential search.
        Solver probe(system, options);
        bool rootConsistent = true;
        {
            const size_t mark = probe.trail.size();
            for (auto [col, include] : pins)
                if (!probe.assign(col, include)) rootConsistent = false;
            if (rootConsistent && !probe.propagate(mark)) rootConsistent = false;
        }
        const int row = rootConsistent ? probe.pick_row() : -1;
        int branchCol = -1;
        if (row >= 0)
            for (int cc : system.row_cols[static_cast<size_t>(row)])
                if (probe.state[static_cast<size_t>(cc)] == ColState::Undecided) {
                    branchCol = cc;
                    break;
                }
        if (!rootConsistent || branchCol < 0) {
            Solver solver(system, options);
            const Solver::Result res = solver.run(pins);
            finish(res, solver);
        } else {
            auto runBranch = [&](bool include) {
                auto solver = std::make_unique<Solver>(system, options);
                auto branchPins = pins;
                branchPins.emplace_back(branchCol, include);
                const Solver::Result res = solver->run(branchPins);
                return std::make_pair(res, std::move(solver));
            };
            auto futureOut = std::async(std::launch::async, runBranch, false);
            auto [resIn, solverIn] = runBranch(true);
            auto [resOut, solverOut] = futureOut.get();
            outcome.stats.nodes += 1;  // the root split
            finish(resIn, *solverIn);
            finish(resOut, *solverOut);
        }
    }

    const bool anyAborted = outcome.status == SearchStatus::ABORTED;
    if (options.enumerate_all) {
        // an aborted enumeration has an incomplete count, never a verdict
        outcome.status = anyAborted
                             ? SearchStatus::ABORTED
                             : (outcome.stats.solutions > 0 ? SearchStatus::SAT : SearchStatus::UNSAT);
    } else if (outcome.stats.solutions > 0) {
        outcome.status = SearchStatus::SAT;
    } else {
        outcome.status = anyAborted ? SearchStatus::ABORTED : SearchStatus::UNSAT;
    }
    for (const MatchingSet& sol : outcome.solutions) verify_solution(system, sol);
    if (!outcome.solutions.empty()) outcome.solution = outcome.solutions.front();

    const auto end = std::chrono::steady_clock::now();
    outcome.stats.wall_seconds = std::chrono::duration<double>(end - start).count();
    return outcome;
}

std::vector<std::pair<int, bool>> seed_from_derivation(const ConstraintSystem& system,
                                                       const MatchingSet& d_sub,
                                                       const std::vector<int>& s) {
    if (s.size() % 2 != 0) throw std::invalid_argument("seed_from_derivation: |S| must be even");
    const int k = static_cast<int>(s.size()) / 2;
    if (k > 0) {
        const auto& parts = system.lambda.parts();
        if (std::find(parts.begin(), parts.end(), k) == parts.end())
            throw std::invalid_argument("seed_from_derivation: |S|/2 must be a part of lambda");
        if (!d_sub.empty() && d_sub.n() != system.n - k)
            throw std::invalid_argument("seed_from_derivation: sub-factorisation on wrong point set");
    }
    if (d_sub.empty() || k == 0) return {};  // nothing to pin

    const int points = 2 * system.n;
    std::vector<char> inS(static_cast<size_t>(points) + 1, 0);
    for (int v : s) {
        if (v < 1 || v > points) throw std::invalid_argument("seed_from_derivation: point out of range");
        inS[static_cast<size_t>(v)] = 1;
    }
    std::vector<int> newLabel(static_cast<size_t>(points) + 1, 0);
    int next = 0;
    for (int v = 1; v <= points; ++v)
        if (!inS[static_cast<size_t>(v)]) newLabel[static_cast<size_t>(v)] = ++next;

    std::vector<std::pair<int, bool>> pins;
    for (size_t cIdx = 0; cIdx < system.columns.size(); ++cIdx) {
        const Matching& m = system.columns[cIdx];
        bool splits = true;
        std::vector<std::pair<int, int>> restPairs;
        for (auto [a, b] : m.pairs()) {
            if (inS[static_cast<size_t>(a)] != inS[static_cast<size_t>(b)]) {
                splits = false;
                break;
            }
            if (!inS[static_cast<size_t>(a)])
                restPairs.emplace_back(newLabel[static_cast<size_t>(a)],
                                       newLabel[static_cast<size_t>(b)]);
        }
        if (!splits) continue;
        const Matching restricted = Matching::from_pairs(system.n - k, restPairs);
        if (!d_sub.contains(restricted))
            pins.emplace_back(static_cast<int>(cIdx), false);
        else if (k == 1)
            pins.emplace_back(static_cast<int>(cIdx), true);  // unique extension
    }
    return pins;
}

}  // namespace pms
