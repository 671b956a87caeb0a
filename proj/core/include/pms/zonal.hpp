#pragma once

#include <map>
#include <vector>

#include "pms/matching.hpp"
#include "pms/partition.hpp"
#include "pms/rational.hpp"

namespace pms {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact spectral data of the perfect-matching scheme on K_{2n}.
/// Rows and columns of every table follow the partitions_of(n) order.
struct ZonalTable {
    int n = 0;
    std::vector<Partition> index;            // partitions_of(n)
    std::vector<std::vector<Rational>> omega;  // omega[mu][rho] = ω^μ_ρ
    std::vector<BigInt> valency;             // k_ρ = 2^n n!/z_{2ρ}
    std::vector<long long> degree;           // χ^{2μ}(1)

    int count() const { return static_cast<int>(index.size()); }
    int index_of(const Partition& p) const;
    const Rational& omega_at(const Partition& mu, const Partition& rho) const;
    const BigInt& valency_of(const Partition& rho) const;
    long long degree_of(const Partition& mu) const;
    BigInt points() const { return odd_double_factorial(n); }  // (2n−1)!!
};

/// Valencies k_ρ of the scheme, computed two independent ways (direct
/// enumeration over all matchings and 2^n n!/z_{2ρ}); throws if they ever
/// disagree. n ≤ 8.
std::map<Partition, BigInt> sphere_sizes(int n);

/// Builds the full table of zonal spherical function values
///   ω^μ_ρ = (1/|B_n|) Σ_{b ∈ B_n} χ^{2μ}(σ_ρ b)
/// by tallying the cycle types of σ_ρ·b once per ρ and reusing the tally for
/// every μ. n ≤ 7. threads > 1 parallelises over ρ.
ZonalTable zonal_table(int n, int threads = 1);

/// Eigenvalue and dual-eigenvalue tables, both stored with rows indexed by
/// the eigenspace μ and columns by the relation ρ:
///   p[μ][ρ] = k_ρ·ω^μ_ρ,   q[μ][ρ] = χ^{2μ}(1)·ω^μ_ρ.
/// The defining identity pairs them over the relation index:
///   Σ_ρ p[μ][ρ]·q[ν][ρ] = (2n−1)!!·δ_{μν}.
struct EigenMatrices {
    std::vector<Partition> index;
    RationalMatrix p;
    RationalMatrix q;
};
EigenMatrices eigenvalue_matrices(const ZonalTable& table);

/// Σ_ρ k_ρ·(ω^{(1,…,1)}_ρ)³ — a positive multiple of the Krein parameter
/// q^μ_{μμ} for μ = (1,…,1); only its vanishing/sign is meaningful.
Rational krein_q_mumumu(const ZonalTable& table);

/// The minimal idempotents as full |X|×|X| rational matrices,
/// E_μ(x,y) = χ^{2μ}(1)·ω^μ_{d(x,y)}/(2n−1)!!, in canonical μ order.
/// Memory-guarded to n ≤ 5.
std::vector<RationalMatrix> idempotents(int n);

// small exact-matrix helpers
RationalMatrix rational_identity(int n);
RationalMatrix rational_mul(const RationalMatrix& a, const RationalMatrix& b);
int rational_rank(RationalMatrix a);  // by value: elimination scratch

}  // namespace pms
