#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace toughseq {

using BigInt = boost::multiprecision::cpp_int;

/// Partitions of r into positive parts, optionally with at most max_parts
/// parts and/or every part at most max_part. p(0) = 1 (the empty partition).
struct PartitionQuery {
    int r = 0;
    std::optional<int> max_parts;
    std::optional<int> max_part;
};

BigInt count_partitions(const PartitionQuery& q);

/// p(r)
BigInt partition_count(int r);
/// p_l(r): partitions of r into at most l parts.
BigInt partition_count_at_most(int r, int max_parts);

/// Nonincreasing part lists, largest-first lexicographic order
/// (e.g. r = 4 gives [4], [3,1], [2,2], [2,1,1], [1,1,1,1]).
std::vector<std::vector<int>> enumerate_partitions(const PartitionQuery& q);

/// At most l parts and largest part at most l are counted by conjugate
/// partitions; returns whether the two counts agree.
bool conjugate_equivalence_check(int r, int l);

/// p(N) - p_{N-k}(N) == 1 + p(1) + ... + p(k-1). Requires k >= 1 and N > 2k;
/// throws std::domain_error outside that range.
bool claim4_identity(int k, int big_n);

}  // namespace toughseq
