#include "pms/set_partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace pms {

Partition SetPartition::shape() const {
    std::vector<int> sizes;
    sizes.reserve(blocks.size());
    for (const auto& b : blocks) sizes.push_back(static_cast<int>(b.size()));
    std::sort(sizes.rbegin(), sizes.rend());
    return Partition(std::move(sizes));
}

std::vector<int> SetPartition::block_of() const {
    std::vector<int> owner(static_cast<size_t>(ground_size) + 1, -1);
    for (size_t b = 0; b < blocks.size(); ++b)
        for (int v : blocks[b]) owner[static_cast<size_t>(v)] = static_cast<int>(b);
    return owner;
}

BigInt set_partition_count(int N, const Partition& shape) {
    if (shape.size() != N)
        throw std::invalid_argument("set_partition_count: shape size must equal N");
    BigInt num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(N));
    BigInt den = 1;
    for (auto [value, mult] : shape.multiplicities()) {
        BigInt f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(value));
        BigInt pw;
        mpz_pow_ui(pw.get_mpz_t(), f.get_mpz_t(), static_cast<unsigned long>(mult));
        BigInt mf;
        mpz_fac_ui(mf.get_mpz_t(), static_cast<unsigned long>(mult));
        den *= pw * mf;
    }
    return num / den;
}

BigInt refinement_count(const Partition& lambda) {
    BigInt num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(lambda.size()));
    BigInt den = 1;
    for (auto [value, mult] : lambda.multiplicities()) {
        BigInt f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(value));
        BigInt pw;
        mpz_pow_ui(pw.get_mpz_t(), f.get_mpz_t(), static_cast<unsigned long>(mult));
        BigInt mf;
        mpz_fac_ui(mf.get_mpz_t(), static_cast<unsigned long>(mult));
        den *= pw * mf;
    }
    return num / den;
}

namespace {

struct Enumerator {
    int N;
    std::vector<int> remaining_sizes;  // multiset of block sizes still to place, desc
    std::vector<char> used;            // 1-based
    SetPartition current;
    const std::function<bool(const SetPartition&)>* fn;
    bool stopped = false;

    void run() {
        current.ground_size = N;
        recurse(static_cast<int>(remaining_sizes.size()));
    }

    // Each block is anchored at the smallest unused element, so no block
    // multiset is ever produced twice as long as equal sizes are tried once.
    void recurse(int blocksLeft) {
        if (stopped) return;
        if (blocksLeft == 0) {
            if (!(*fn)(current)) stopped = true;
            return;
        }
        int anchor = 1;
        while (anchor <= N && used[static_cast<size_t>(anchor)]) ++anchor;

        int prevSize = -1;
        for (size_t si = 0; si < remaining_sizes.size(); ++si) {
            int size = remaining_sizes[si];
            if (size == prevSize) continue;  // equal sizes are interchangeable
            prevSize = size;

            remaining_sizes.erase(remaining_sizes.begin() + static_cast<long>(si));
            used[static_cast<size_t>(anchor)] = 1;
            std::vector<int> block{anchor};
            chooseMembers(block, anchor + 1, size - 1, blocksLeft);
            used[static_cast<size_t>(anchor)] = 0;
            remaining_sizes.insert(remaining_sizes.begin() + static_cast<long>(si), size);
            if (stopped) return;
        }
    }

    void chooseMembers(std::vector<int>& block, int from, int need, int blocksLeft) {
        if (stopped) return;
        if (need == 0) {
            current.blocks.push_back(block);
            recurse(blocksLeft - 1);
            current.blocks.pop_back();
            return;
        }
        for (int v = from; v <= N - need + 1; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            used[static_cast<size_t>(v)] = 1;
            block.push_back(v);
            chooseMembers(block, v + 1, need - 1, blocksLeft);
            block.pop_back();
            used[static_cast<size_t>(v)] = 0;
            if (stopped) return;
        }
    }
};

}  // namespace

void for_each_set_partition_of_shape(int N, const Partition& shape,
                                     const std::function<bool(const SetPartition&)>& fn) {
    if (shape.size() != N)
        throw std::invalid_argument("set_partitions_of_shape: shape size must equal N");
    if (N == 0) {
        SetPartition empty;
        fn(empty);
        return;
    }
    Enumerator e;
    e.N = N;
    e.remaining_sizes = shape.parts();
    e.used.assign(static_cast<size_t>(N) + 1, 0);
    e.fn = &fn;
    e.run();
}

std::vector<SetPartition> set_partitions_of_shape(int N, const Partition& shape) {
    std::vector<SetPartition> out;
    for_each_set_partition_of_shape(N, shape, [&](const SetPartition& sp) {
        out.push_back(sp);
        return true;
    });
    return out;
}

}  // namespace pms
