#pragma once

#include <array>
#include <vector>

#include "pms/matching_set.hpp"

namespace pms {

/// GF(2^a) as polynomial residues, elements encoded as a-bit integers.
/// Fixed irreducible moduli: a=2: x²+x+1, a=3: x³+x+1, a=4: x⁴+x+1.
struct BinaryField {
    int a = 0;
    int q = 0;        // 2^a
    int modulus = 0;  // bit-encoded irreducible polynomial

    explicit BinaryField(int a_);
    int add(int x, int y) const { return x ^ y; }
    int mul(int x, int y) const;
    int inv(int x) const;
};

/// Point of PG(2,q), homogeneous coordinates normalised so the first nonzero
/// coordinate is 1.
using ProjectivePoint = std::array<int, 3>;

std::vector<ProjectivePoint> pg2_points(const BinaryField& f);
ProjectivePoint pg2_normalise(const BinaryField& f, ProjectivePoint p);

/// The regular hyperoval {(1,t,t²) : t ∈ GF(q)} ∪ {(0,1,0),(0,0,1)}, in the
/// fixed enumeration order (t = 0,1,…,q−1 by bit value, then the two extra
/// points). Every line of PG(2,q) meets it in 0 or 2 points.
std::vector<ProjectivePoint> regular_hyperoval(const BinaryField& f);

/// Circle-method 1-factorisation of K_{2n}: point 2n fixed, the rest on a
/// cycle; 2n−1 rounds, every edge covered exactly once.
MatchingSet round_robin(int n);

/// All (2n−1)!! matchings. n ≤ 8.
MatchingSet full_set(int n);

/// Cameron's construction: each point P off the hyperoval pairs X ∈ O with
/// the second hyperoval point on the line PX. Returns q²−1 matchings of the
/// q+2 hyperoval points — an (n−2,1,1)-factorisation of index 1 with
/// 2n = q+2. a ∈ {2,3,4}.
MatchingSet hyperoval_factorisation(int a);

/// The union of the AGL(1,11)-orbits (sizes 11 and 22) of the two seed
/// matchings {{0,∞}} ∪ {{x,−x}} and {{0,∞}} ∪ {{x,7x}} on the projective
/// line over GF(11), labelled 0→1,…,10→11,∞→12. A (4,2)-factorisation of
/// index 1 with 33 matchings.
MatchingSet agl11_factorisation();

/// The two orbits separately (first the size-11 one), for orbit-level tests.
std::pair<MatchingSet, MatchingSet> agl11_orbits();

}  // namespace pms
