// Acceptance suite: runs every contract criterion and prints one line per
// criterion. Exit code 0 iff all gating criteria hold; the final seeded
// nonexistence reproduction is informational and never gates.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "pms/characters.hpp"
#include "pms/constructions.hpp"
#include "pms/factorisation.hpp"
#include "pms/matching_set.hpp"
#include "pms/search.hpp"
#include "pms/zonal.hpp"

using namespace pms;

namespace {

int failures = 0;

void criterion(int id, const std::string& name, const std::function<bool(std::string&)>& body,
               bool gating = true) {
    std::string note;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        note = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (ok ? "PASS" : (gating ? "FAIL" : "INFO")) << "  [" << id << "] " << name;
    if (!note.empty()) line << " — " << note;
    line.precision(1);
    line << " (" << std::fixed << secs << "s)";
    std::cout << line.str() << std::endl;
    if (!ok && gating) ++failures;
}

Rational minus_half_power(int e) {
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= Rational(BigInt(-1), BigInt(2));
    return r;
}

bool spectral_identities(int n, std::string& note) {
    const ZonalTable t = zonal_table(n, 2);
    const int d = t.count();
    const BigInt points = t.points();
    for (int r = 0; r < d; ++r) {
        if (t.omega[0][static_cast<size_t>(r)] != Rational(1)) return false;
        if (t.omega[static_cast<size_t>(d - 1)][static_cast<size_t>(r)] !=
            minus_half_power(n - t.index[static_cast<size_t>(r)].length()))
            return false;
    }
    BigInt ksum = 0;
    for (const auto& k : t.valency) ksum += k;
    if (ksum != points) return false;
    for (int a = 0; a < d; ++a)
        for (int b = a; b < d; ++b) {
            Rational s = 0;
            for (int r = 0; r < d; ++r)
                s += Rational(t.valency[static_cast<size_t>(r)], points) *
                     t.omega[static_cast<size_t>(a)][static_cast<size_t>(r)] *
                     t.omega[static_cast<size_t>(b)][static_cast<size_t>(r)];
            const Rational want =
                a == b ? Rational(BigInt(1),
                                  BigInt(static_cast<long>(t.degree[static_cast<size_t>(a)])))
                       : Rational(0);
            if (s != want) return false;
        }
    const EigenMatrices em = eigenvalue_matrices(t);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            Rational s = 0;
            for (int r = 0; r < d; ++r)
                s += em.p[static_cast<size_t>(a)][static_cast<size_t>(r)] *
                     em.q[static_cast<size_t>(b)][static_cast<size_t>(r)];
            if (s != (a == b ? Rational(points) : Rational(0))) return false;
        }
    note += "n=" + std::to_string(n) + " ok; ";
    return true;
}

bool verify_construction(const MatchingSet& d, const Partition& lambda, long long index,
                         size_t size, const ZonalTable& table) {
    if (d.size() != size) return false;
    const auto rep = check_by_definition(d, lambda);
    if (!rep.is_factorisation || rep.index != index) return false;
    return check_by_design(d, lambda, table);
}

MatchingSet random_subset(const std::vector<Matching>& all, std::mt19937_64& rng) {
    const size_t size = 1 + rng() % all.size();
    std::vector<size_t> idx(all.size());
    std::iota(idx.begin(), idx.end(), size_t{0});
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<Matching> chosen;
    for (size_t i = 0; i < size; ++i) chosen.push_back(all[idx[i]]);
    return MatchingSet(all.front().n(), std::move(chosen));
}

bool checkers_agree_everywhere(const MatchingSet& z, const std::vector<Partition>& lambdas,
                               const ZonalTable& table) {
    for (const Partition& lambda : lambdas) {
        const bool byDef = check_by_definition(z, lambda).is_factorisation;
        const bool byDesign = check_by_design(z, lambda, table);
        if (byDef != byDesign) return false;
    }
    return true;
}

bool screen_clean(const Partition& lambda) { return feasibility_screen(lambda, BigInt(1)).empty(); }

}  // namespace

int main() {
    criterion(1, "coset distance of the documented crossing pair is (3,1)", [](std::string&) {
        const Matching blue = Matching::from_pairs(4, {{1, 2}, {3, 6}, {4, 8}, {5, 7}});
        const Matching red = Matching::from_pairs(4, {{1, 2}, {3, 8}, {4, 5}, {6, 7}});
        return coset_distance(blue, red) == Partition{3, 1};
    });

    criterion(2, "spectral identities (exact rationals), n = 3..7", [](std::string& note) {
        bool ok = true;
        for (int n = 3; n <= 7; ++n) ok = spectral_identities(n, note) && ok;
        return ok;
    });

    criterion(3, "idempotents multiply as projections with the right ranks, n = 3,4",
              [](std::string&) {
                  for (int n = 3; n <= 4; ++n) {
                      const ZonalTable t = zonal_table(n);
                      const auto es = idempotents(n);
                      const size_t x = static_cast<size_t>(all_matchings(n).size());
                      for (size_t a = 0; a < es.size(); ++a) {
                          for (size_t b = a; b < es.size(); ++b) {
                              const RationalMatrix prod = rational_mul(es[a], es[b]);
                              for (size_t i = 0; i < x; ++i)
                                  for (size_t j = 0; j < x; ++j)
                                      if (prod[i][j] != (a == b ? es[a][i][j] : Rational(0)))
                                          return false;
                          }
                          if (rational_rank(es[a]) != t.degree[a]) return false;
                      }
                  }
                  return true;
              });

    criterion(4, "cubic zonal sum vanishes for n = 5,6,7 and not for n = 4; content polynomial",
              [](std::string&) {
                  if (krein_q_mumumu(zonal_table(4)).is_zero()) return false;
                  for (int n = 5; n <= 7; ++n)
                      if (!krein_q_mumumu(zonal_table(n)).is_zero()) return false;
                  for (int n = 5; n <= 8; ++n) {
                      const Partition ones(std::vector<int>(static_cast<size_t>(n), 1));
                      if (content_polynomial_at(ones, 4) != 0) return false;
                  }
                  return true;
              });

    criterion(5, "constructions verified by both checkers", [](std::string&) {
        for (int n = 3; n <= 6; ++n)
            if (!verify_construction(round_robin(n), Partition{n - 1, 1}, 1,
                                     static_cast<size_t>(2 * n - 1), zonal_table(n)))
                return false;
        if (!verify_construction(hyperoval_factorisation(3), Partition{3, 1, 1}, 1, 63,
                                 zonal_table(5)))
            return false;
        const ZonalTable t6 = zonal_table(6);
        const MatchingSet agl = agl11_factorisation();
        return verify_construction(agl, Partition{4, 2}, 1, 33, t6) &&
               verify_construction(agl, Partition{5, 1}, 3, 33, t6);
    });

    criterion(6, "checker equivalence on 500 random subsets, constructions, perturbations",
              [](std::string& note) {
                  std::mt19937_64 rng(20250810);
                  long long tested = 0;
                  for (int n = 2; n <= 5; ++n) {
                      const auto all = all_matchings(n);
                      const ZonalTable table = zonal_table(n, 2);
                      const auto lambdas = partitions_of(n);

                      std::vector<MatchingSet> cases;
                      for (int trial = 0; trial < 125; ++trial)
                          cases.push_back(random_subset(all, rng));
                      cases.push_back(full_set(n));
                      if (n >= 3) cases.push_back(round_robin(n));
                      if (n == 3) cases.push_back(hyperoval_factorisation(2));
                      if (n == 5) cases.push_back(hyperoval_factorisation(3));

                      const size_t namedFrom = 125;
                      const size_t namedTo = cases.size();
                      for (size_t c = namedFrom; c < namedTo; ++c) {
                          const auto& base = cases[c].matchings();
                          for (size_t drop = 0; drop < base.size(); ++drop) {
                              std::vector<Matching> rest;
                              for (size_t i = 0; i < base.size(); ++i)
                                  if (i != drop) rest.push_back(base[i]);
                              if (!rest.empty()) cases.emplace_back(n, std::move(rest));
                          }
                      }

                      for (const MatchingSet& z : cases) {
                          if (!checkers_agree_everywhere(z, lambdas, table)) return false;
                          ++tested;
                      }
                  }
                  note = std::to_string(tested) + " sets, zero disagreements";
                  return true;
              });

    criterion(7, "divisibility screen reproduces the index-1 constraint table up to n = 50",
              [](std::string&) {
                  for (int n = 4; n <= 50; ++n)
                      if (!screen_clean(Partition{n - 1, 1})) return false;
                  for (int n = 4; n <= 50; ++n)
                      if (screen_clean(Partition{n - 2, 2}) != (n % 3 == 0)) return false;
                  for (int n = 6; n <= 50; ++n)
                      if (screen_clean(Partition{n - 3, 3}) != (n % 15 == 0 || n % 15 == 10))
                          return false;
                  for (int n = 6; n <= 50; ++n)
                      if (screen_clean(Partition{n - 3, 2, 1}) != (n % 3 == 1)) return false;
                  for (int n = 8; n <= 50; ++n)
                      if (screen_clean(Partition{n - 4, 4}) != (n % 35 == 0 || n % 35 == 21))
                          return false;
                  for (int n = 8; n <= 50; ++n)
                      if (screen_clean(Partition{n - 4, 3, 1}) != (n % 15 == 1 || n % 15 == 11))
                          return false;
                  for (int n = 7; n <= 50; ++n)
                      if (screen_clean(Partition{n - 4, 2, 2}) ||
                          screen_clean(Partition{n - 4, 2, 1, 1}))
                          return false;
                  const std::set<int> residues{0, 36, 126, 162, 225, 252};
                  for (int n = 10; n <= 50; ++n)
                      if (screen_clean(Partition{n - 5, 5}) != (residues.count(n % 315) > 0))
                          return false;
                  for (int n = 4; n <= 50; ++n)
                      for (int t = 1; t <= n - 1; ++t) {
                          std::vector<int> parts{n - t};
                          for (int i = 0; i < t; ++i) parts.push_back(1);
                          std::sort(parts.rbegin(), parts.rend());
                          if (screen_clean(Partition(parts)) != (t != n - 2)) return false;
                      }
                  return true;
              });

    criterion(8, "n = 6 summary: five shapes screened out, two witnessed", [](std::string&) {
        for (const Partition& lambda :
             {Partition{2, 1, 1, 1, 1}, Partition{2, 2, 1, 1}, Partition{2, 2, 2},
              Partition{3, 2, 1}, Partition{3, 3}})
            if (screen_clean(lambda)) return false;
        // the screen must stay silent where it cannot decide
        for (const Partition& lambda : {Partition{3, 1, 1, 1}, Partition{4, 1, 1}})
            if (!screen_clean(lambda)) return false;
        const ZonalTable t6 = zonal_table(6);
        return verify_construction(agl11_factorisation(), Partition{4, 2}, 1, 33, t6) &&
               verify_construction(round_robin(6), Partition{5, 1}, 1, 11, t6);
    });

    criterion(9, "search: SAT at n=3 (2,1); complete UNSAT at n=4 (2,1,1) and (2,2)",
              [](std::string& note) {
                  const SearchOutcome sat = solve(build_system(3, Partition{2, 1}, 1));
                  if (sat.status != SearchStatus::SAT || sat.solution->size() != 5) return false;
                  const SearchOutcome u1 = solve(build_system(4, Partition{2, 1, 1}, 1));
                  if (u1.status != SearchStatus::UNSAT) return false;
                  const SearchOutcome u2 = solve(build_system(4, Partition{2, 2}, 1));
                  if (u2.status != SearchStatus::UNSAT) return false;
                  note = "(2,1,1) nodes=" + std::to_string(u1.stats.nodes) +
                         ", (2,2) nodes=" + std::to_string(u2.stats.nodes);
                  return true;
              });

    criterion(10, "derivation at each of the 45 edges gives a 7-member index-1 factorisation",
              [](std::string&) {
                  const MatchingSet hyper = hyperoval_factorisation(3);
                  for (int a = 1; a <= 10; ++a)
                      for (int b = a + 1; b <= 10; ++b) {
                          const MatchingSet derived = derive(hyper, {a, b});
                          if (derived.size() != 7) return false;
                          const auto rep = check_by_definition(derived, Partition{3, 1});
                          if (!rep.is_factorisation || rep.index != 1) return false;
                      }
                  return true;
              });

    criterion(11, "antidesign inner distribution equals the Young-subgroup count (n = 4)",
              [](std::string&) {
                  const int n = 4;
                  const auto all = all_matchings(n);
                  for (const Partition& lambda :
                       {Partition{2, 2}, Partition{3, 1}, Partition{2, 1, 1}}) {
                      const auto sp = set_partitions_of_shape(2 * n, lambda.doubled()).front();
                      const auto blockOf = sp.block_of();
                      std::vector<Matching> refining;
                      for (const Matching& m : all) {
                          bool ok = true;
                          for (auto [a, b] : m.pairs())
                              if (blockOf[static_cast<size_t>(a)] != blockOf[static_cast<size_t>(b)]) {
                                  ok = false;
                                  break;
                              }
                          if (ok) refining.push_back(m);
                      }
                      const MatchingSet antidesign(n, refining);
                      const Distribution& inner = antidesign.inner_distribution();

                      // enumerate the Young subgroup on consecutive blocks
                      std::map<Partition, long long> tally;
                      {
                          const auto parts = lambda.doubled().parts();
                          std::vector<std::vector<std::vector<int>>> perBlock;
                          int start = 1;
                          for (int size : parts) {
                              std::vector<int> pts(static_cast<size_t>(size));
                              std::iota(pts.begin(), pts.end(), start);
                              std::vector<std::vector<int>> perms;
                              std::vector<int> p = pts;
                              do perms.push_back(p);
                              while (std::next_permutation(p.begin(), p.end()));
                              perBlock.push_back(std::move(perms));
                              start += size;
                          }
                          const Matching base = Matching::base(n);
                          std::vector<size_t> pick(perBlock.size(), 0);
                          for (;;) {
                              std::vector<int> img(static_cast<size_t>(2 * n));
                              int offset = 0;
                              for (size_t b = 0; b < perBlock.size(); ++b) {
                                  for (size_t i = 0; i < perBlock[b][pick[b]].size(); ++i)
                                      img[static_cast<size_t>(offset) + i] = perBlock[b][pick[b]][i];
                                  offset += static_cast<int>(perBlock[b][pick[b]].size());
                              }
                              const Permutation sigma = Permutation::from_images(img);
                              ++tally[coset_distance(base, apply_perm(sigma, base))];
                              size_t pos = 0;
                              while (pos < perBlock.size() && pick[pos] + 1 == perBlock[pos].size())
                                  pick[pos++] = 0;
                              if (pos == perBlock.size()) break;
                              ++pick[pos];
                          }
                      }
                      BigInt denom = lambda.factorial_product();
                      denom *= BigInt(1) << n;
                      for (size_t r = 0; r < inner.index.size(); ++r) {
                          const auto it = tally.find(inner.index[r]);
                          const BigInt count =
                              it == tally.end() ? BigInt(0) : BigInt(static_cast<long>(it->second));
                          if (inner.value[r] != Rational(count, denom)) return false;
                      }
                  }
                  return true;
              });

    criterion(
        12, "seeded nonexistence reproduction at n=6 (3,1,1,1) [stretch]",
        [](std::string& note) {
            long long nodeLimit = 50'000'000;
            if (const char* env = std::getenv("PMS_STRETCH_NODE_LIMIT"))
                nodeLimit = std::atoll(env);
            const ConstraintSystem sys = build_system(6, Partition{3, 1, 1, 1}, 1);
            const MatchingSet hyper = hyperoval_factorisation(3);
            SearchOptions options;
            options.pins = seed_from_derivation(sys, hyper, {11, 12});
            options.node_limit = nodeLimit;
            options.threads = 2;
            const SearchOutcome out = solve(sys, options);
            switch (out.status) {
                case SearchStatus::UNSAT:
                    note = "UNSAT, complete, nodes=" + std::to_string(out.stats.nodes);
                    return true;
                case SearchStatus::ABORTED:
                    note = "ABORTED at node limit " + std::to_string(nodeLimit) +
                           " (recorded, not a verdict)";
                    return true;  // informational either way
                case SearchStatus::SAT:
                    note = "SAT — unexpected, please investigate";
                    return false;
            }
            return false;
        },
        /*gating=*/false);

    if (failures == 0)
        std::cout << "all gating criteria passed" << std::endl;
    else
        std::cout << failures << " gating criteria FAILED" << std::endl;
    return failures == 0 ? 0 : 1;
}
