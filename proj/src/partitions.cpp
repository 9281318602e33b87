#include "toughseq/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace toughseq {

namespace {

void validate(const PartitionQuery& q) {
    if (q.r < 0) throw std::invalid_argument("partitions: r must be >= 0");
    if (q.max_parts && *q.max_parts < 0) throw std::invalid_argument("partitions: max_parts must be >= 0");
    if (q.max_part && *q.max_part < 0) throw std::invalid_argument("partitions: max_part must be >= 0");
}

void enumerate_into(int remaining, int cap, int parts_left, std::vector<int>& current,
                    std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    if (parts_left == 0) return;
    for (int part = std::min(cap, remaining); part >= 1; --part) {
        current.push_back(part);
        enumerate_into(remaining - part, part, parts_left - 1, current, out);
        current.pop_back();
    }
}

}  // namespace

BigInt count_partitions(const PartitionQuery& q) {
    validate(q);
    const int r = q.r;
    const int parts = std::min(q.max_parts.value_or(r), r);
    const int largest = std::min(q.max_part.value_or(r), r);
    if (r == 0) return 1;
    if (parts == 0 || largest == 0) return 0;

    // ways[c][s]: partitions of s into exactly c parts, each part <= the current size bound.
    // Part sizes are admitted one at a time (unbounded knapsack in the size dimension).
    std::vector<std::vector<BigInt>> ways(static_cast<std::size_t>(parts) + 1,
                                          std::vector<BigInt>(static_cast<std::size_t>(r) + 1));
    ways[0][0] = 1;
    for (int size = 1; size <= largest; ++size) {
        for (int c = 1; c <= parts; ++c) {
            for (int s = size; s <= r; ++s) {
                ways[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)] +=
                    ways[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(s - size)];
            }
        }
    }
    BigInt total = 0;
    for (int c = 0; c <= parts; ++c) total += ways[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
    return total;
}

BigInt partition_count(int r) { return count_partitions({r, std::nullopt, std::nullopt}); }

BigInt partition_count_at_most(int r, int max_parts) { return count_partitions({r, max_parts, std::nullopt}); }

std::vector<std::vector<int>> enumerate_partitions(const PartitionQuery& q) {
    validate(q);
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    enumerate_into(q.r, q.max_part.value_or(q.r), q.max_parts.value_or(q.r), current, out);
    return out;
}

bool conjugate_equivalence_check(int r, int l) {
    return count_partitions({r, l, std::nullopt}) == count_partitions({r, std::nullopt, l});
}

bool claim4_identity(int k, int big_n) {
    if (k < 1 || big_n <= 2 * k) {
        throw std::domain_error("claim4_identity: requires k >= 1 and N > 2k (got k = " + std::to_string(k) +
                                ", N = " + std::to_string(big_n) + ")");
    }
    BigInt rhs = 1;
    for (int s = 1; s <= k - 1; ++s) rhs += partition_count(s);
    return partition_count(big_n) - partition_count_at_most(big_n, big_n - k) == rhs;
}

}  // namespace toughseq
