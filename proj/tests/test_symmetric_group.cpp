#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "pms/characters.hpp"
#include "pms/matching.hpp"
#include "pms/partition.hpp"
#include "pms/permutation.hpp"

using namespace pms;

namespace {

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

/// One permutation per cycle type: consecutive full cycles.
Permutation class_rep(const Partition& rho) {
    std::vector<int> img(static_cast<size_t>(rho.size()));
    int start = 0;
    for (int i = 0; i < rho.length(); ++i) {
        const int len = rho.part(i);
        for (int j = 0; j < len; ++j)
            img[static_cast<size_t>(start + j)] = start + (j + 1) % len + 1;
        start += len;
    }
    return Permutation::from_images(img);
}

}  // namespace

TEST_CASE("cycle types") {
    CHECK(Permutation::identity(6).cycle_type() == Partition{1, 1, 1, 1, 1, 1});
    CHECK(Permutation::from_images({2, 3, 4, 1, 6, 5}).cycle_type() == Partition{4, 2});
    for (int m = 2; m <= 6; ++m) {
        std::vector<int> img(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) img[static_cast<size_t>(i)] = i + 1;
        std::swap(img[0], img[1]);
        std::vector<int> want{2};
        for (int i = 0; i < m - 2; ++i) want.push_back(1);
        CHECK(Permutation::from_images(img).cycle_type() == Partition(want));
    }
}

TEST_CASE("cycle notation") {
    CHECK(Permutation::from_images({2, 3, 4, 1, 6, 5}).cycle_string() == "(1 2 3 4)(5 6)");
    CHECK(Permutation::identity(4).cycle_string() == "()");
    CHECK(Permutation::from_images({1, 2, 4, 3}).cycle_string() == "(3 4)");
}

TEST_CASE("compose and inverse") {
    const auto s = Permutation::from_images({2, 1, 3});
    const auto t = Permutation::from_images({1, 3, 2});
    CHECK(s.compose(t).image_of(2) == s.image_of(t.image_of(2)));
    CHECK(s.compose(s.inverse()) == Permutation::identity(3));
}

TEST_CASE("trivial and sign characters") {
    for (int m = 1; m <= 6; ++m) {
        std::vector<int> triv{m}, sign(static_cast<size_t>(m), 1);
        for (const Partition& rho : partitions_of(m)) {
            CHECK(character_value(Partition(triv), rho) == 1);
            const long long expect = ((m - rho.length()) % 2 == 0) ? 1 : -1;
            CHECK(character_value(Partition(sign), rho) == expect);
        }
    }
}

TEST_CASE("standard representation of S3 as an oracle") {
    // Permutation matrices minus the trivial summand: trace is fix(σ) − 1.
    for (const Partition& rho : partitions_of(3)) {
        const Permutation rep = class_rep(rho);
        int fixed = 0;
        for (int v = 1; v <= 3; ++v)
            if (rep.image_of(v) == v) ++fixed;
        CHECK(character_value(Partition{2, 1}, rho) == fixed - 1);
    }
    CHECK(character_value(Partition{2, 1}, Partition{3}) == -1);
}

TEST_CASE("character orthogonality up to m = 8") {
    for (int m = 1; m <= 8; ++m) {
        const auto ps = partitions_of(m);
        const BigInt mfact = factorial(m);
        std::vector<BigInt> classSize;
        for (const auto& rho : ps) classSize.push_back(mfact / rho.z_value());
        for (size_t a = 0; a < ps.size(); ++a) {
            for (size_t b = a; b < ps.size(); ++b) {
                BigInt sum = 0;
                for (size_t r = 0; r < ps.size(); ++r)
                    sum += classSize[r] *
                           BigInt(static_cast<long>(character_value(ps[a], ps[r]))) *
                           BigInt(static_cast<long>(character_value(ps[b], ps[r])));
                CHECK(sum == (a == b ? mfact : BigInt(0)));
            }
        }
    }
}

TEST_CASE("degrees: hooks agree with the sum-of-squares identity and MN") {
    CHECK(character_degree(Partition{7}) == 1);
    CHECK(character_degree(Partition{2, 2}) == 2);
    CHECK(character_degree(Partition{4, 2}) == 9);
    for (int m = 1; m <= 10; ++m) {
        BigInt sum = 0;
        for (const auto& lam : partitions_of(m)) {
            const long long d = character_degree(lam);
            CHECK(d > 0);
            sum += BigInt(static_cast<long>(d)) * BigInt(static_cast<long>(d));
        }
        CHECK(sum == factorial(m));
    }
    for (int m = 1; m <= 8; ++m) {
        const Partition ones(std::vector<int>(static_cast<size_t>(m), 1));
        for (const auto& lam : partitions_of(m))
            CHECK(character_value(lam, ones) == character_degree(lam));
    }
}

TEST_CASE("hyperoctahedral enumeration") {
    CHECK(hyperoctahedral_elements(2).size() == 8);

    for (int n = 1; n <= 6; ++n) {
        const Matching base = Matching::base(n);
        long long count = 0;
        std::set<std::vector<int>> distinct;
        for_each_hyperoctahedral(n, [&](const Permutation& p) {
            ++count;
            if (n <= 4) distinct.insert(p.raw());
            CHECK(apply_perm(p, base) == base);
            return true;
        });
        long long order = 1;
        for (int i = 1; i <= n; ++i) order *= 2 * i;  // 2^n n!
        CHECK(count == order);
        if (n <= 4) CHECK(static_cast<long long>(distinct.size()) == count);
    }
}

TEST_CASE("coset type representatives have the advertised type") {
    const auto rep2 = coset_type_rep(Partition{2});
    CHECK(rep2.cycle_string() == "(1 2 3 4)");
    const Matching image = apply_perm(rep2, Matching::base(2));
    CHECK(image == Matching::from_pairs(2, {{2, 3}, {1, 4}}));

    for (int n = 1; n <= 6; ++n) {
        const Matching base = Matching::base(n);
        for (const Partition& rho : partitions_of(n)) {
            const Permutation rep = coset_type_rep(rho);
            CHECK(coset_distance(base, apply_perm(rep, base)) == rho);
        }
    }

    // all-ones type comes from an element of the stabiliser
    const auto repOnes = coset_type_rep(Partition{1, 1, 1});
    CHECK(apply_perm(repOnes, Matching::base(3)) == Matching::base(3));
}

TEST_CASE("dominance describes the constituents of Young permutation characters") {
    CHECK(young_rule_constituents(Partition{5}) == std::vector<Partition>{Partition{5}});
    CHECK(young_rule_constituents(Partition{2, 1}) ==
          std::vector<Partition>{Partition{3}, Partition{2, 1}});
    CHECK(young_rule_constituents(Partition{2, 2}) ==
          std::vector<Partition>{Partition{4}, Partition{3, 1}, Partition{2, 2}});

    // degree check: Σ multiplicities·degrees... here just containment sanity
    for (const auto& lam : partitions_of(6)) {
        const auto cons = young_rule_constituents(lam);
        CHECK(cons.front() == Partition{6});
        CHECK(cons.back() == lam);
    }
}
