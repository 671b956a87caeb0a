#include "pms/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace pms {

Matching Matching::base(int n) {
    std::vector<int> partner(static_cast<size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        partner[static_cast<size_t>(2 * i)] = 2 * i + 1;
        partner[static_cast<size_t>(2 * i + 1)] = 2 * i;
    }
    return from_partner_raw(std::move(partner));
}

Matching Matching::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (static_cast<int>(pairs.size()) != n)
        throw std::invalid_argument("matching: expected " + std::to_string(n) + " pairs");
    std::vector<int> partner(static_cast<size_t>(2 * n), -1);
    for (auto [a, b] : pairs) {
        if (a < 1 || a > 2 * n || b < 1 || b > 2 * n || a == b)
            throw std::invalid_argument("matching: pair out of range");
        if (partner[static_cast<size_t>(a - 1)] != -1 || partner[static_cast<size_t>(b - 1)] != -1)
            throw std::invalid_argument("matching: point covered twice");
        partner[static_cast<size_t>(a - 1)] = b - 1;
        partner[static_cast<size_t>(b - 1)] = a - 1;
    }
    return from_partner_raw(std::move(partner));
}

Matching Matching::from_partner_raw(std::vector<int> partner) {
    Matching m;
    m.partner_ = std::move(partner);
    return m;
}

std::vector<std::pair<int, int>> Matching::pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(partner_.size() / 2);
    for (int v = 0; v < points(); ++v)
        if (partner_[static_cast<size_t>(v)] > v)
            out.emplace_back(v + 1, partner_[static_cast<size_t>(v)] + 1);
    return out;
}

std::string Matching::str() const {
    std::string s;
    for (auto [a, b] : pairs()) {
        if (!s.empty()) s += ' ';
        s += std::to_string(a) + "-" + std::to_string(b);
    }
    return s;
}

namespace {

void enumerate(std::vector<int>& partner, int points, std::vector<Matching>& out) {
    int v = 0;
    while (v < points && partner[static_cast<size_t>(v)] != -1) ++v;
    if (v == points) {
        out.push_back(Matching::from_partner_raw(partner));
        return;
    }
    for (int w = v + 1; w < points; ++w) {
        if (partner[static_cast<size_t>(w)] != -1) continue;
        partner[static_cast<size_t>(v)] = w;
        partner[static_cast<size_t>(w)] = v;
        enumerate(partner, points, out);
        partner[static_cast<size_t>(v)] = -1;
        partner[static_cast<size_t>(w)] = -1;
    }
}

}  // namespace

std::vector<Matching> all_matchings(int n) {
    if (n < 1 || n > 8)
        throw std::invalid_argument("all_matchings: n must be in 1..8");
    std::vector<Matching> out;
    out.reserve(static_cast<size_t>(matching_count(n).get_ui()));
    std::vector<int> partner(static_cast<size_t>(2 * n), -1);
    enumerate(partner, 2 * n, out);
    return out;
}

BigInt matching_count(int n) { return odd_double_factorial(n); }

long long matching_rank(const Matching& m) {
    const int points = m.points();
    std::vector<char> placed(static_cast<size_t>(points), 0);
    long long rank = 0;
    int freeCount = points;
    for (int v = 0; v < points; ++v) {
        if (placed[static_cast<size_t>(v)]) continue;
        const int w = m.partner_raw()[static_cast<size_t>(v)];
        // How many smaller choices of mate were available for v?
        int before = 0;
        for (int u = v + 1; u < w; ++u)
            if (!placed[static_cast<size_t>(u)]) ++before;
        // Each earlier mate choice fixes (freeCount−3)!! completions.
        long long completions = 1;
        for (int i = freeCount - 3; i >= 3; i -= 2) completions *= i;
        rank += before * completions;
        placed[static_cast<size_t>(v)] = 1;
        placed[static_cast<size_t>(w)] = 1;
        freeCount -= 2;
    }
    return rank;
}

Partition coset_distance(const Matching& a, const Matching& b) {
    if (a.points() != b.points())
        throw std::invalid_argument("coset_distance: point-set size mismatch");
    const auto& pa = a.partner_raw();
    const auto& pb = b.partner_raw();
    std::vector<char> seen(pa.size(), 0);
    std::vector<int> halves;
    for (size_t v = 0; v < pa.size(); ++v) {
        if (seen[v]) continue;
        int len = 0;
        size_t cur = v;
        // Alternate edges of a and b until the cycle closes.
        do {
            seen[cur] = 1;
            cur = static_cast<size_t>(pa[cur]);
            seen[cur] = 1;
            cur = static_cast<size_t>(pb[cur]);
            ++len;
        } while (cur != v);
        halves.push_back(len);
    }
    std::sort(halves.rbegin(), halves.rend());
    return Partition(std::move(halves));
}

Matching apply_perm(const Permutation& sigma, const Matching& m) {
    if (sigma.degree() != m.points())
        throw std::invalid_argument("apply_perm: degree mismatch");
    const auto& img = sigma.raw();
    const auto& p = m.partner_raw();
    std::vector<int> partner(p.size());
    for (size_t v = 0; v < p.size(); ++v)
        partner[static_cast<size_t>(img[v])] = img[static_cast<size_t>(p[v])];
    return Matching::from_partner_raw(std::move(partner));
}

}  // namespace pms
