#include "pms/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pms {

BinaryField::BinaryField(int a_) : a(a_), q(1 << a_) {
    switch (a_) {
        case 2: modulus = 0b111; break;      // x²+x+1
        case 3: modulus = 0b1011; break;     // x³+x+1
        case 4: modulus = 0b10011; break;    // x⁴+x+1
        default: throw std::invalid_argument("BinaryField: a must be 2, 3 or 4");
    }
}

int BinaryField::mul(int x, int y) const {
    int r = 0;
    while (y) {
        if (y & 1) r ^= x;
        y >>= 1;
        x <<= 1;
        if (x & q) x ^= modulus;
    }
    return r;
}

int BinaryField::inv(int x) const {
    if (x == 0) throw std::invalid_argument("BinaryField: 0 has no inverse");
    // x^(q−2) in a group of order q−1
    int e = q - 2;
    int base = x;
    int r = 1;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

ProjectivePoint pg2_normalise(const BinaryField& f, ProjectivePoint p) {
    for (int i = 0; i < 3; ++i) {
        if (p[static_cast<size_t>(i)] == 0) continue;
        const int s = f.inv(p[static_cast<size_t>(i)]);
        for (int j = 0; j < 3; ++j) p[static_cast<size_t>(j)] = f.mul(p[static_cast<size_t>(j)], s);
        return p;
    }
    throw std::invalid_argument("pg2_normalise: zero vector");
}

std::vector<ProjectivePoint> pg2_points(const BinaryField& f) {
    std::vector<ProjectivePoint> pts;
    pts.reserve(static_cast<size_t>(f.q * f.q + f.q + 1));
    for (int y = 0; y < f.q; ++y)
        for (int z = 0; z < f.q; ++z) pts.push_back({1, y, z});
    for (int z = 0; z < f.q; ++z) pts.push_back({0, 1, z});
    pts.push_back({0, 0, 1});
    return pts;
}

std::vector<ProjectivePoint> regular_hyperoval(const BinaryField& f) {
    std::vector<ProjectivePoint> o;
    o.reserve(static_cast<size_t>(f.q + 2));
    for (int t = 0; t < f.q; ++t) o.push_back({1, t, f.mul(t, t)});
    o.push_back({0, 1, 0});
    o.push_back({0, 0, 1});
    return o;
}

MatchingSet round_robin(int n) {
    if (n < 2) throw std::invalid_argument("round_robin: n must be at least 2");
    const int m = 2 * n - 1;  // cycle length
    std::vector<Matching> rounds;
    for (int r = 0; r < m; ++r) {
        std::vector<std::pair<int, int>> pairs;
        pairs.emplace_back(2 * n, r + 1);
        for (int i = 1; i < n; ++i) {
            const int a = (r + i) % m + 1;
            const int b = (r - i % m + m) % m + 1;
            pairs.emplace_back(a, b);
        }
        rounds.push_back(Matching::from_pairs(n, pairs));
    }
    return MatchingSet(n, std::move(rounds));
}

MatchingSet full_set(int n) { return MatchingSet(n, all_matchings(n)); }

MatchingSet hyperoval_factorisation(int a) {
    const BinaryField f(a);
    const std::vector<ProjectivePoint> oval = regular_hyperoval(f);
    const int ovalSize = static_cast<int>(oval.size());  // q+2

    std::set<ProjectivePoint> ovalLookup(oval.begin(), oval.end());
    auto crossZero = [&](const ProjectivePoint& u, const ProjectivePoint& v,
                         const ProjectivePoint& w) {
        // determinant over GF(2^a); zero iff u, v, w are collinear
        int det = 0;
        det ^= f.mul(u[0], f.add(f.mul(v[1], w[2]), f.mul(v[2], w[1])));
        det ^= f.mul(u[1], f.add(f.mul(v[0], w[2]), f.mul(v[2], w[0])));
        det ^= f.mul(u[2], f.add(f.mul(v[0], w[1]), f.mul(v[1], w[0])));
        return det == 0;
    };

    std::vector<Matching> out;
    for (const ProjectivePoint& p : pg2_points(f)) {
        if (ovalLookup.count(p)) continue;
        std::vector<std::pair<int, int>> pairs;
        std::vector<char> done(static_cast<size_t>(ovalSize), 0);
        for (int i = 0; i < ovalSize; ++i) {
            if (done[static_cast<size_t>(i)]) continue;
            int mate = -1;
            for (int j = i + 1; j < ovalSize; ++j) {
                if (done[static_cast<size_t>(j)]) continue;
                if (crossZero(p, oval[static_cast<size_t>(i)], oval[static_cast<size_t>(j)])) {
                    mate = j;
                    break;
                }
            }
            if (mate < 0)
                throw std::logic_error("hyperoval_factorisation: no second oval point on the line");
            done[static_cast<size_t>(i)] = 1;
            done[static_cast<size_t>(mate)] = 1;
            pairs.emplace_back(i + 1, mate + 1);
        }
        out.push_back(Matching::from_pairs(ovalSize / 2, pairs));
    }
    return MatchingSet(ovalSize / 2, std::move(out));
}

namespace {

constexpr int kP = 11;

/// PG(1,11) labels: field element x ↦ x+1, the point at infinity ↦ 12.
int label_of(int x) { return x + 1; }
constexpr int kInfinityLabel = 12;

Matching agl11_apply(int a, int b, const Matching& m) {
    // x ↦ ax+b on field labels, ∞ fixed
    std::vector<std::pair<int, int>> pairs;
    auto map = [&](int v) {
        if (v == kInfinityLabel) return kInfinityLabel;
        return label_of((a * (v - 1) + b) % kP);
    };
    for (auto [u, w] : m.pairs()) pairs.emplace_back(map(u), map(w));
    return Matching::from_pairs(m.n(), pairs);
}

MatchingSet agl11_orbit(const Matching& seed) {
    std::set<Matching> orbit;
    for (int a = 1; a < kP; ++a)
        for (int b = 0; b < kP; ++b) orbit.insert(agl11_apply(a, b, seed));
    return MatchingSet(seed.n(), std::vector<Matching>(orbit.begin(), orbit.end()));
}

}  // namespace

std::pair<MatchingSet, MatchingSet> agl11_orbits() {
    const std::vector<int> squares{1, 3, 4, 5, 9};  // nonzero squares mod 11

    std::vector<std::pair<int, int>> m1{{label_of(0), kInfinityLabel}};
    for (int x : squares) m1.emplace_back(label_of(x), label_of((kP - x) % kP));
    std::vector<std::pair<int, int>> m2{{label_of(0), kInfinityLabel}};
    for (int x : squares) m2.emplace_back(label_of(x), label_of(7 * x % kP));

    return {agl11_orbit(Matching::from_pairs(6, m1)), agl11_orbit(Matching::from_pairs(6, m2))};
}

MatchingSet agl11_factorisation() {
    auto [o1, o2] = agl11_orbits();
    std::vector<Matching> all = o1.matchings();
    all.insert(all.end(), o2.matchings().begin(), o2.matchings().end());
    return MatchingSet(6, std::move(all));
}

}  // namespace pms
