#include "pms/factorisation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace pms {

namespace {

/// m refines P iff every block of P is closed under m's partner map.
bool refines(const Matching& m, const std::vector<int>& blockOf) {
    const auto& partner = m.partner_raw();
    for (int v = 1; v <= m.points(); ++v)
        if (blockOf[static_cast<size_t>(v)] !=
            blockOf[static_cast<size_t>(partner[static_cast<size_t>(v - 1)] + 1)])
            return false;
    return true;
}

}  // namespace

FactorisationReport check_by_definition(const MatchingSet& d, const Partition& lambda) {
    if (d.empty()) throw std::invalid_argument("check_by_definition: empty set");
    if (lambda.size() != d.n())
        throw std::invalid_argument("check_by_definition: |lambda| must equal n");

    FactorisationReport report;
    report.lambda = lambda;
    long long expected = -1;
    bool ok = true;
    for_each_set_partition_of_shape(2 * d.n(), lambda.doubled(), [&](const SetPartition& sp) {
        const std::vector<int> blockOf = sp.block_of();
        long long count = 0;
        for (const Matching& m : d.matchings())
            if (refines(m, blockOf)) ++count;
        if (expected == -1) expected = count;
        if (count != expected) {
            ok = false;
            report.witness = sp;
            report.witness_count = count;
            return false;  // first deviating partition in canonical order
        }
        return true;
    });
    report.is_factorisation = ok;
    report.index = ok ? expected : 0;
    return report;
}

bool check_by_design(const MatchingSet& d, const Partition& lambda, const ZonalTable& table) {
    if (d.empty()) throw std::invalid_argument("check_by_design: empty set");
    if (lambda.size() != d.n())
        throw std::invalid_argument("check_by_design: |lambda| must equal n");
    const Distribution& dual = d.dual_distribution(table);
    for (size_t m = 0; m < dual.index.size(); ++m) {
        const Partition& mu = dual.index[m];
        if (mu.length() == 1) continue;  // (n) is never required to vanish
        if (dominates(mu, lambda) && !dual.value[m].is_zero()) return false;
    }
    return true;
}

BigInt expected_size(const Partition& lambda, const BigInt& c) {
    if (c <= 0) throw std::invalid_argument("expected_size: index must be positive");
    BigInt den = 1;
    for (int p : lambda.parts()) den *= odd_double_factorial(p);
    const BigInt num = c * odd_double_factorial(lambda.size());
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::invalid_argument("expected_size: " + lambda.str() + " with index " + c.get_str() +
                                    " has non-integral size " + Rational(num, den).str());
    return num / den;
}

Rational index_conversion(const Partition& lambda, const Partition& mu, const BigInt& c_lambda) {
    if (!dominates(mu, lambda))
        throw std::invalid_argument("index_conversion: need lambda ⊴ mu");
    BigInt num = c_lambda;
    for (int p : mu.parts()) num *= odd_double_factorial(p);
    BigInt den = 1;
    for (int p : lambda.parts()) den *= odd_double_factorial(p);
    return Rational(num, den);
}

std::vector<std::pair<Partition, BigInt>> ScreenOptions::default_known_nonexistent() {
    return {{Partition{2, 2}, BigInt(1)}, {Partition{2, 1, 1}, BigInt(1)}};
}

namespace {

void screen_one_shape(const Partition& shape, const BigInt& c, const ScreenOptions& options,
                      std::vector<ScreenViolation>& out) {
    // expected-size integrality
    {
        BigInt den = 1;
        for (int p : shape.parts()) den *= odd_double_factorial(p);
        const BigInt num = c * odd_double_factorial(shape.size());
        if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
            out.push_back({"size", shape,
                           "size " + Rational(num, den).str() + " is not an integer"});
    }

    // pairwise part test: 2k−1 | (2l+1)·c for parts k ≤ l in distinct positions
    const auto& parts = shape.parts();
    std::set<std::pair<int, int>> donePairs;
    for (size_t i = 0; i < parts.size(); ++i) {
        for (size_t j = i + 1; j < parts.size(); ++j) {
            const int k = std::min(parts[i], parts[j]);
            const int l = std::max(parts[i], parts[j]);
            if (!donePairs.insert({k, l}).second) continue;
            const BigInt lhs = 2 * k - 1;
            const BigInt rhs = BigInt(2 * l + 1) * c;
            if (!mpz_divisible_p(rhs.get_mpz_t(), lhs.get_mpz_t()))
                out.push_back({"part-pair", shape,
                               std::to_string(2 * k - 1) + " does not divide (" +
                                   std::to_string(2 * l + 1) + ")·" + c.get_str()});
        }
    }

    // two-part shapes: converted index down the whole chain must stay integral
    if (shape.length() == 2) {
        const int n = shape.size();
        const int t = shape.part(1);
        for (int k = t - 1; k >= 1; --k) {
            const Partition target{n - k, k};
            const Rational converted = index_conversion(shape, target, c);
            if (!converted.is_integer())
                out.push_back({"two-part-chain", shape,
                               "index as " + target.str() + "-factorisation would be " +
                                   converted.str()});
        }
    }

    // (2,1,…,1) of size ≥ 5 has no index-1 factorisation
    if (c == 1 && shape.size() >= 5 && shape.length() == shape.size() - 1 && shape.part(0) == 2)
        out.push_back({"two-ones", shape, "no (2,1,…,1)-factorisation of index 1 exists"});

    // proven nonexistent shapes
    for (const auto& [known, knownIndex] : options.known_nonexistent)
        if (shape == known && c == knownIndex)
            out.push_back({"known-shape", shape,
                           "no " + known.str() + "-factorisation of index " +
                               knownIndex.get_str() + " exists"});
}

}  // namespace

std::vector<ScreenViolation> feasibility_screen(const Partition& lambda, const BigInt& c,
                                                const ScreenOptions& options) {
    if (c <= 0) throw std::invalid_argument("feasibility_screen: index must be positive");
    // Distinct nonempty sub-multisets of parts, λ itself first. Each one is a
    // derived factorisation with the same index, so each is screened alike.
    const auto mults = lambda.multiplicities();
    std::vector<Partition> shapes;
    std::vector<int> take(mults.size(), 0);
    for (;;) {
        std::vector<int> parts;
        for (size_t i = 0; i < mults.size(); ++i)
            for (int r = 0; r < take[i]; ++r) parts.push_back(mults[i].first);
        if (!parts.empty()) shapes.emplace_back(std::move(parts));
        size_t pos = 0;
        while (pos < mults.size() && take[pos] == mults[pos].second) take[pos++] = 0;
        if (pos == mults.size()) break;
        ++take[pos];
    }
    std::sort(shapes.begin(), shapes.end(), [&](const Partition& a, const Partition& b) {
        if (a == lambda) return b != lambda;
        if (b == lambda) return false;
        return b < a;  // larger shapes first, deterministic
    });

    std::vector<ScreenViolation> out;
    for (const Partition& shape : shapes) screen_one_shape(shape, c, options, out);
    return out;
}

std::vector<DominanceConsequence> dominance_consequences(const Partition& lambda, const BigInt& c) {
    std::vector<DominanceConsequence> out;
    for (const Partition& mu : partitions_of(lambda.size())) {
        if (mu == lambda || !dominates(mu, lambda)) continue;
        DominanceConsequence dc;
        dc.mu = mu;
        dc.index = index_conversion(lambda, mu, c);
        dc.integral = dc.index.is_integer();
        out.push_back(std::move(dc));
    }
    return out;
}

MatchingSet derive(const MatchingSet& d, const std::vector<int>& s) {
    if (d.empty()) throw std::invalid_argument("derive: empty set");
    if (s.size() % 2 != 0) throw std::invalid_argument("derive: |S| must be even");
    const int points = 2 * d.n();
    std::vector<char> inS(static_cast<size_t>(points) + 1, 0);
    for (int v : s) {
        if (v < 1 || v > points) throw std::invalid_argument("derive: point out of range");
        if (inS[static_cast<size_t>(v)]) throw std::invalid_argument("derive: repeated point");
        inS[static_cast<size_t>(v)] = 1;
    }
    // order-preserving relabelling of the complement to 1..2(n−k)
    std::vector<int> newLabel(static_cast<size_t>(points) + 1, 0);
    int next = 0;
    for (int v = 1; v <= points; ++v)
        if (!inS[static_cast<size_t>(v)]) newLabel[static_cast<size_t>(v)] = ++next;

    const int restN = next / 2;
    std::vector<Matching> out;
    for (const Matching& m : d.matchings()) {
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
        if (splits) out.push_back(Matching::from_pairs(restN, restPairs));
    }
    return MatchingSet(restN, std::move(out));
}

}  // namespace pms
