#include "pms/partition.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace pms {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::doubled() const {
    std::vector<int> d(parts_);
    for (int& p : d) p *= 2;
    return Partition(std::move(d));
}

std::vector<std::pair<int, int>> Partition::multiplicities() const {
    std::vector<std::pair<int, int>> out;
    for (int p : parts_) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    }
    return out;
}

BigInt Partition::factorial_product() const {
    BigInt r = 1;
    for (int p : parts_) {
        BigInt f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(p));
        r *= f;
    }
    return r;
}

BigInt Partition::z_value() const {
    BigInt r = 1;
    for (auto [value, mult] : multiplicities()) {
        BigInt pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(value),
                      static_cast<unsigned long>(mult));
        BigInt mf;
        mpz_fac_ui(mf.get_mpz_t(), static_cast<unsigned long>(mult));
        r *= pw * mf;
    }
    return r;
}

std::string Partition::str() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        size_t pos = 0;
        int v = std::stoi(token, &pos);
        if (pos != token.size()) throw std::invalid_argument("bad partition part: " + token);
        if (v != 0) parts.push_back(v);  // "0" tolerated as the empty partition
        token.clear();
    };
    for (char ch : text) {
        if (ch == ',') {
            flush();
        } else if (ch == ' ' || ch == '\t' || ch == '(' || ch == ')') {
            continue;
        } else {
            token += ch;
        }
    }
    flush();
    if (!std::is_sorted(parts.rbegin(), parts.rend()))
        throw std::invalid_argument("partition parts must be weakly decreasing: " + text);
    return Partition(std::move(parts));
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    // Reverse-lexicographic descent from (n) down to (1,...,1).
    std::vector<int> cur{n};
    for (;;) {
        out.emplace_back(cur);
        // Find the rightmost part > 1; if none we are done.
        int k = static_cast<int>(cur.size()) - 1;
        while (k >= 0 && cur[static_cast<size_t>(k)] == 1) --k;
        if (k < 0) break;
        int rem = static_cast<int>(cur.size()) - k;  // the k-th part plus trailing ones
        int newPart = cur[static_cast<size_t>(k)] - 1;
        int total = cur[static_cast<size_t>(k)] + (rem - 1);
        cur.resize(static_cast<size_t>(k));
        while (total > 0) {
            int take = std::min(newPart, total);
            cur.push_back(take);
            total -= take;
        }
    }
    return out;
}

bool dominates(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size())
        throw std::invalid_argument("dominates: partitions must have equal size");
    long sumMu = 0, sumLa = 0;
    int len = std::max(mu.length(), lambda.length());
    for (int i = 0; i < len; ++i) {
        sumMu += i < mu.length() ? mu.part(i) : 0;
        sumLa += i < lambda.length() ? lambda.part(i) : 0;
        if (sumLa > sumMu) return false;
    }
    return true;
}

BigInt odd_double_factorial(int k) {
    if (k < 0) throw std::invalid_argument("odd_double_factorial: k must be nonnegative");
    BigInt r = 1;
    for (int i = 2 * k - 1; i >= 3; i -= 2) r *= i;
    return r;
}

BigInt content_polynomial_at(const Partition& lambda, long x) {
    BigInt r = 1;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i - 1); ++j)
            r *= BigInt(x - i + 2 * j - 1);
    return r;
}

}  // namespace pms
