#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "pms/rational.hpp"

namespace pms {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// (of 0) is valid; trailing zeros are never stored, so equality is plain
/// sequence equality.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    int size() const { return size_; }  // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; }
    const std::vector<int>& parts() const { return parts_; }

    /// 2λ: every part doubled.
    Partition doubled() const;

    /// (part value, multiplicity) pairs, values decreasing.
    std::vector<std::pair<int, int>> multiplicities() const;

    /// λ! = ∏ λ_i!
    BigInt factorial_product() const;

    /// z_λ = ∏ i^{m_i} · m_i!  (centraliser order of the class λ in S_{|λ|}).
    BigInt z_value() const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    /// Canonical form "4,2"; the empty partition prints as "".
    std::string str() const;
    /// Lenient: whitespace ignored, "" or "0" is the empty partition.
    static Partition parse(const std::string& text);

private:
    std::vector<int> parts_;
    int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// All partitions of n in reverse-lexicographic order, (n) first.
/// partitions_of(0) = { () }.
std::vector<Partition> partitions_of(int n);

/// True iff lambda ⊴ mu in the dominance order (prefix sums of lambda
/// bounded by those of mu). Requires |mu| == |lambda|.
bool dominates(const Partition& mu, const Partition& lambda);

/// (2k−1)!! = (2k−1)(2k−3)···3·1, with the empty product 1 for k = 0.
BigInt odd_double_factorial(int k);

/// ∏ over Young-diagram cells (i,j), rows/columns 1-indexed, of (x − i + 2j − 1).
BigInt content_polynomial_at(const Partition& lambda, long x);

}  // namespace pms
