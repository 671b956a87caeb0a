#pragma once

#include <vector>

#include "pms/partition.hpp"

namespace pms {

/// χ^λ evaluated on the conjugacy class of cycle type rho, by the
/// Murnaghan–Nakayama border-strip recursion. Memoised on (λ, ρ); lookups
/// are safe from multiple threads.
long long character_value(const Partition& lambda, const Partition& rho);

/// χ^λ(1) by the hook-length formula.
long long character_degree(const Partition& lambda);

/// The irreducible constituents of the permutation character on the cosets
/// of a Young subgroup of shape λ: all μ ⊢ |λ| with λ ⊴ μ, canonical order.
std::vector<Partition> young_rule_constituents(const Partition& lambda);

}  // namespace pms
