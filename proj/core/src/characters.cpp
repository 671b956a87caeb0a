#include "pms/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace pms {

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

std::map<Key, long long>& memo() {
    static std::map<Key, long long> m;
    return m;
}
std::mutex& memo_mutex() {
    static std::mutex mu;
    return mu;
}

// Murnaghan–Nakayama on beta-sets: removing a border strip of length r is
// replacing a beta number b by b−r; the strip height is the number of beta
// numbers strictly between them.
long long mn(const std::vector<int>& lambda, const std::vector<int>& rho, size_t rhoPos) {
    if (rhoPos == rho.size()) return 1;  // lambda is empty here too

    Key key(lambda, std::vector<int>(rho.begin() + static_cast<long>(rhoPos), rho.end()));
    {
        std::lock_guard<std::mutex> lock(memo_mutex());
        auto it = memo().find(key);
        if (it != memo().end()) return it->second;
    }

    const int r = rho[rhoPos];
    const int k = static_cast<int>(lambda.size());
    std::vector<int> beta(lambda.size());
    for (int i = 0; i < k; ++i) beta[static_cast<size_t>(i)] = lambda[static_cast<size_t>(i)] + (k - 1 - i);

    long long total = 0;
    for (int i = 0; i < k; ++i) {
        const int target = beta[static_cast<size_t>(i)] - r;
        if (target < 0) continue;
        bool occupied = false;
        int between = 0;
        for (int j = 0; j < k; ++j) {
            if (j == i) continue;
            const int bj = beta[static_cast<size_t>(j)];
            if (bj == target) { occupied = true; break; }
            if (bj > target && bj < beta[static_cast<size_t>(i)]) ++between;
        }
        if (occupied) continue;

        std::vector<int> nb = beta;
        nb[static_cast<size_t>(i)] = target;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<int> next;
        next.reserve(nb.size());
        for (int j = 0; j < k; ++j) {
            const int part = nb[static_cast<size_t>(j)] - (k - 1 - j);
            if (part > 0) next.push_back(part);
        }
        const long long sub = mn(next, rho, rhoPos + 1);
        total += (between % 2 == 0) ? sub : -sub;
    }

    std::lock_guard<std::mutex> lock(memo_mutex());
    memo().emplace(std::move(key), total);
    return total;
}

}  // namespace

long long character_value(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size())
        throw std::invalid_argument("character_value: |lambda| must equal |rho|");
    return mn(lambda.parts(), rho.parts(), 0);
}

long long character_degree(const Partition& lambda) {
    const int m = lambda.size();
    if (m == 0) return 1;
    // conjugate partition for leg lengths
    std::vector<int> conj(static_cast<size_t>(lambda.part(0)), 0);
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j) ++conj[static_cast<size_t>(j)];

    BigInt num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(m));
    BigInt den = 1;
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda.part(i); ++j) {
            const int hook = (lambda.part(i) - j) + (conj[static_cast<size_t>(j)] - i) - 1;
            den *= hook;
        }
    }
    BigInt d = num / den;
    return static_cast<long long>(d.get_si());
}

std::vector<Partition> young_rule_constituents(const Partition& lambda) {
    std::vector<Partition> out;
    for (const Partition& mu : partitions_of(lambda.size()))
        if (dominates(mu, lambda)) out.push_back(mu);
    return out;
}

}  // namespace pms
