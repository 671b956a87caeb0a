#include "pms/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pms {

Permutation Permutation::identity(int m) {
    Permutation p;
    p.img_.resize(static_cast<size_t>(m));
    std::iota(p.img_.begin(), p.img_.end(), 0);
    return p;
}

Permutation Permutation::from_images(std::vector<int> images) {
    const int m = static_cast<int>(images.size());
    std::vector<char> seen(static_cast<size_t>(m), 0);
    for (int& v : images) {
        if (v < 1 || v > m || seen[static_cast<size_t>(v - 1)])
            throw std::invalid_argument("not a permutation");
        seen[static_cast<size_t>(v - 1)] = 1;
        --v;  // store 0-based
    }
    Permutation p;
    p.img_ = std::move(images);
    return p;
}

Permutation Permutation::from_raw(std::vector<int> zero_based) {
    Permutation p;
    p.img_ = std::move(zero_based);
    return p;
}

Permutation Permutation::compose(const Permutation& other) const {
    if (degree() != other.degree())
        throw std::invalid_argument("compose: degree mismatch");
    Permutation r;
    r.img_.resize(img_.size());
    for (size_t i = 0; i < img_.size(); ++i)
        r.img_[i] = img_[static_cast<size_t>(other.img_[i])];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.img_.resize(img_.size());
    for (size_t i = 0; i < img_.size(); ++i)
        r.img_[static_cast<size_t>(img_[i])] = static_cast<int>(i);
    return r;
}

Partition Permutation::cycle_type() const {
    std::vector<char> seen(img_.size(), 0);
    std::vector<int> lens;
    for (size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = static_cast<size_t>(img_[j]);
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return Partition(std::move(lens));
}

std::string Permutation::cycle_string() const {
    std::vector<char> seen(img_.size(), 0);
    std::string out;
    for (size_t i = 0; i < img_.size(); ++i) {
        if (seen[i] || img_[i] == static_cast<int>(i)) continue;
        out += '(';
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = 1;
            if (!first) out += ' ';
            out += std::to_string(j + 1);
            first = false;
            j = static_cast<size_t>(img_[j]);
        }
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

void for_each_hyperoctahedral(int n, const std::function<bool(const Permutation&)>& fn) {
    if (n < 1) throw std::invalid_argument("for_each_hyperoctahedral: n must be positive");
    std::vector<int> blockPerm(static_cast<size_t>(n));
    std::iota(blockPerm.begin(), blockPerm.end(), 0);
    std::vector<int> img(static_cast<size_t>(2 * n));
    do {
        for (unsigned flips = 0; flips < (1u << n); ++flips) {
            for (int i = 0; i < n; ++i) {
                const int target = blockPerm[static_cast<size_t>(i)];
                const int swap = static_cast<int>((flips >> i) & 1u);
                img[static_cast<size_t>(2 * i)] = 2 * target + swap;
                img[static_cast<size_t>(2 * i + 1)] = 2 * target + 1 - swap;
            }
            if (!fn(Permutation::from_raw(img))) return;
        }
    } while (std::next_permutation(blockPerm.begin(), blockPerm.end()));
}

std::vector<Permutation> hyperoctahedral_elements(int n) {
    std::vector<Permutation> out;
    size_t count = static_cast<size_t>(1) << n;
    for (int i = 2; i <= n; ++i) count *= static_cast<size_t>(i);
    out.reserve(count);
    for_each_hyperoctahedral(n, [&](const Permutation& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

Permutation coset_type_rep(const Partition& rho) {
    const int n = rho.size();
    std::vector<int> img(static_cast<size_t>(2 * n));
    int start = 0;
    for (int i = 0; i < rho.length(); ++i) {
        const int len = 2 * rho.part(i);
        for (int j = 0; j < len; ++j)
            img[static_cast<size_t>(start + j)] = start + (j + 1) % len + 1;  // 1-based
        start += len;
    }
    return Permutation::from_images(std::move(img));
}

}  // namespace pms
