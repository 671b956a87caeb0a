#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pms/partition.hpp"

namespace pms {

/// Permutation of {1,…,m}. Points are 1-based in the public interface.
class Permutation {
public:
    Permutation() = default;
    static Permutation identity(int m);
    /// images[i] is the image of point i+1 (all values 1..m exactly once).
    static Permutation from_images(std::vector<int> images);
    /// Trusted constructor from a 0-based image table; no validation.
    static Permutation from_raw(std::vector<int> zero_based);

    int degree() const { return static_cast<int>(img_.size()); }
    int image_of(int v) const { return img_[static_cast<size_t>(v - 1)] + 1; }

    /// (*this) ∘ other: apply other first.
    Permutation compose(const Permutation& other) const;
    Permutation inverse() const;

    Partition cycle_type() const;

    bool operator==(const Permutation&) const = default;

    /// Cycle notation, fixed points omitted: "(1 2 3 4)(5 6)"; identity is "()".
    std::string cycle_string() const;

    /// 0-based image table, for hot loops.
    const std::vector<int>& raw() const { return img_; }

private:
    std::vector<int> img_;  // 0-based images
};

/// Enumerates the stabiliser of the base matching {{1,2},{3,4},…} inside
/// S_{2n}: all pairs of a block permutation π ∈ S_n and a flip vector
/// ε ∈ {0,1}^n, 2^n·n! elements. Callback may return false to stop.
void for_each_hyperoctahedral(int n, const std::function<bool(const Permutation&)>& fn);

/// Materialised variant (2^n · n! elements).
std::vector<Permutation> hyperoctahedral_elements(int n);

/// A deterministic permutation of coset type rho ⊢ n in S_{2n}: on each
/// consecutive run of 2·rho_i points it is the full cycle
/// (s+1, s+2, …, s+2·rho_i).
Permutation coset_type_rep(const Partition& rho);

}  // namespace pms
