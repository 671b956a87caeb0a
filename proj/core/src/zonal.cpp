#include "pms/zonal.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "pms/characters.hpp"

namespace pms {

int ZonalTable::index_of(const Partition& p) const {
    for (int i = 0; i < count(); ++i)
        if (index[static_cast<size_t>(i)] == p) return i;
    throw std::invalid_argument("ZonalTable: unknown partition " + p.str());
}

const Rational& ZonalTable::omega_at(const Partition& mu, const Partition& rho) const {
    return omega[static_cast<size_t>(index_of(mu))][static_cast<size_t>(index_of(rho))];
}

const BigInt& ZonalTable::valency_of(const Partition& rho) const {
    return valency[static_cast<size_t>(index_of(rho))];
}

long long ZonalTable::degree_of(const Partition& mu) const {
    return degree[static_cast<size_t>(index_of(mu))];
}

namespace {

BigInt hyperoctahedral_order(int n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    BigInt pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), 2, static_cast<unsigned long>(n));
    return r * pw;
}

BigInt valency_formula(int n, const Partition& rho) {
    return hyperoctahedral_order(n) / rho.doubled().z_value();
}

}  // namespace

std::map<Partition, BigInt> sphere_sizes(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("sphere_sizes: n must be in 1..8");
    std::map<Partition, BigInt> byEnumeration;
    const Matching base = Matching::base(n);
    for (const Matching& m : all_matchings(n)) byEnumeration[coset_distance(base, m)] += 1;

    for (const Partition& rho : partitions_of(n)) {
        const BigInt formula = valency_formula(n, rho);
        auto it = byEnumeration.find(rho);
        const BigInt seen = it == byEnumeration.end() ? BigInt(0) : it->second;
        if (seen != formula)
            throw std::logic_error("sphere_sizes: enumeration disagrees with 2^n n!/z_{2rho} at rho=" +
                                   rho.str());
    }
    return byEnumeration;
}

namespace {

// Tally of cycle types of σ_ρ·b over b ∈ B_n, keyed by partition of 2n.
std::map<Partition, long long> coset_class_tally(int n, const Partition& rho) {
    const Permutation rep = coset_type_rep(rho);
    const auto& repImg = rep.raw();
    std::map<Partition, long long> tally;

    const int points = 2 * n;
    std::vector<int> product(static_cast<size_t>(points));
    std::vector<char> seen(static_cast<size_t>(points));
    std::vector<int> lens;
    for_each_hyperoctahedral(n, [&](const Permutation& b) {
        const auto& bImg = b.raw();
        for (int i = 0; i < points; ++i)
            product[static_cast<size_t>(i)] = repImg[static_cast<size_t>(bImg[static_cast<size_t>(i)])];
        std::fill(seen.begin(), seen.end(), 0);
        lens.clear();
        for (int i = 0; i < points; ++i) {
            if (seen[static_cast<size_t>(i)]) continue;
            int len = 0;
            int j = i;
            while (!seen[static_cast<size_t>(j)]) {
                seen[static_cast<size_t>(j)] = 1;
                j = product[static_cast<size_t>(j)];
                ++len;
            }
            lens.push_back(len);
        }
        std::sort(lens.rbegin(), lens.rend());
        ++tally[Partition(lens)];
        return true;
    });
    return tally;
}

}  // namespace

ZonalTable zonal_table(int n, int threads) {
    if (n < 1 || n > 7) throw std::invalid_argument("zonal_table: n must be in 1..7");
    ZonalTable t;
    t.n = n;
    t.index = partitions_of(n);
    const int d = t.count();

    std::vector<std::map<Partition, long long>> tallies(static_cast<size_t>(d));
    if (threads <= 1) {
        for (int r = 0; r < d; ++r)
            tallies[static_cast<size_t>(r)] = coset_class_tally(n, t.index[static_cast<size_t>(r)]);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        const int workers = std::min(threads, d);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    const int r = next.fetch_add(1);
                    if (r >= d) return;
                    tallies[static_cast<size_t>(r)] = coset_class_tally(n, t.index[static_cast<size_t>(r)]);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    const BigInt groupOrder = hyperoctahedral_order(n);
    t.omega.assign(static_cast<size_t>(d), std::vector<Rational>(static_cast<size_t>(d)));
    t.valency.resize(static_cast<size_t>(d));
    t.degree.resize(static_cast<size_t>(d));
    for (int m = 0; m < d; ++m) {
        const Partition twoMu = t.index[static_cast<size_t>(m)].doubled();
        t.degree[static_cast<size_t>(m)] = character_degree(twoMu);
        for (int r = 0; r < d; ++r) {
            BigInt sum = 0;
            for (const auto& [type, count] : tallies[static_cast<size_t>(r)])
                sum += BigInt(static_cast<long>(count)) * BigInt(static_cast<long>(character_value(twoMu, type)));
            t.omega[static_cast<size_t>(m)][static_cast<size_t>(r)] = Rational(sum, groupOrder);
        }
    }
    for (int r = 0; r < d; ++r)
        t.valency[static_cast<size_t>(r)] = valency_formula(n, t.index[static_cast<size_t>(r)]);
    return t;
}

EigenMatrices eigenvalue_matrices(const ZonalTable& table) {
    const int d = table.count();
    EigenMatrices em;
    em.index = table.index;
    em.p.assign(static_cast<size_t>(d), std::vector<Rational>(static_cast<size_t>(d)));
    em.q.assign(static_cast<size_t>(d), std::vector<Rational>(static_cast<size_t>(d)));
    for (int m = 0; m < d; ++m) {
        for (int r = 0; r < d; ++r) {
            const Rational& w = table.omega[static_cast<size_t>(m)][static_cast<size_t>(r)];
            em.p[static_cast<size_t>(m)][static_cast<size_t>(r)] =
                w * Rational(table.valency[static_cast<size_t>(r)]);
            em.q[static_cast<size_t>(m)][static_cast<size_t>(r)] =
                w * Rational(BigInt(static_cast<long>(table.degree[static_cast<size_t>(m)])));
        }
    }
    return em;
}

Rational krein_q_mumumu(const ZonalTable& table) {
    std::vector<int> ones(static_cast<size_t>(table.n), 1);
    const int mu = table.index_of(Partition(ones));
    Rational sum = 0;
    for (int r = 0; r < table.count(); ++r) {
        const Rational& w = table.omega[static_cast<size_t>(mu)][static_cast<size_t>(r)];
        sum += Rational(table.valency[static_cast<size_t>(r)]) * w * w * w;
    }
    return sum;
}

std::vector<RationalMatrix> idempotents(int n) {
    if (n < 1 || n > 5) throw std::invalid_argument("idempotents: n must be in 1..5");
    const ZonalTable table = zonal_table(n);
    const std::vector<Matching> all = all_matchings(n);
    const int x = static_cast<int>(all.size());
    const int d = table.count();

    // distance index of every pair, computed once
    std::vector<std::vector<int>> dist(static_cast<size_t>(x), std::vector<int>(static_cast<size_t>(x)));
    for (int i = 0; i < x; ++i) {
        dist[static_cast<size_t>(i)][static_cast<size_t>(i)] = d - 1;  // (1,…,1) is last
        for (int j = i + 1; j < x; ++j) {
            const int r = table.index_of(coset_distance(all[static_cast<size_t>(i)], all[static_cast<size_t>(j)]));
            dist[static_cast<size_t>(i)][static_cast<size_t>(j)] = r;
            dist[static_cast<size_t>(j)][static_cast<size_t>(i)] = r;
        }
    }

    const Rational scale(BigInt(1), table.points());
    std::vector<RationalMatrix> out;
    out.reserve(static_cast<size_t>(d));
    for (int m = 0; m < d; ++m) {
        std::vector<Rational> byDistance(static_cast<size_t>(d));
        for (int r = 0; r < d; ++r)
            byDistance[static_cast<size_t>(r)] =
                table.omega[static_cast<size_t>(m)][static_cast<size_t>(r)] *
                Rational(BigInt(static_cast<long>(table.degree[static_cast<size_t>(m)]))) * scale;
        RationalMatrix e(static_cast<size_t>(x), std::vector<Rational>(static_cast<size_t>(x)));
        for (int i = 0; i < x; ++i)
            for (int j = 0; j < x; ++j)
                e[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    byDistance[static_cast<size_t>(dist[static_cast<size_t>(i)][static_cast<size_t>(j)])];
        out.push_back(std::move(e));
    }
    return out;
}

RationalMatrix rational_identity(int n) {
    RationalMatrix m(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return m;
}

RationalMatrix rational_mul(const RationalMatrix& a, const RationalMatrix& b) {
    const size_t rows = a.size();
    const size_t inner = b.size();
    const size_t cols = inner ? b[0].size() : 0;
    RationalMatrix c(rows, std::vector<Rational>(cols));
    for (size_t i = 0; i < rows; ++i) {
        if (a[i].size() != inner) throw std::invalid_argument("rational_mul: shape mismatch");
        for (size_t k = 0; k < inner; ++k) {
            const Rational& aik = a[i][k];
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < cols; ++j) {
                const Rational& bkj = b[k][j];
                if (!bkj.is_zero()) c[i][j] += aik * bkj;
            }
        }
    }
    return c;
}

int rational_rank(RationalMatrix a) {
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    int rank = 0;
    size_t pivotRow = 0;
    for (size_t col = 0; col < cols && pivotRow < rows; ++col) {
        size_t sel = pivotRow;
        while (sel < rows && a[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[pivotRow]);
        const Rational inv = Rational(1) / a[pivotRow][col];
        for (size_t j = col; j < cols; ++j) a[pivotRow][j] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == pivotRow || a[r][col].is_zero()) continue;
            const Rational f = a[r][col];
            for (size_t j = col; j < cols; ++j) a[r][j] -= f * a[pivotRow][j];
        }
        ++pivotRow;
        ++rank;
    }
    return rank;
}

}  // namespace pms
