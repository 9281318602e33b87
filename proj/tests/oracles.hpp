#pragma once

// Test-only reference implementations. These deliberately avoid the
// library's bitset graph code: adjacency lists, BFS and plain enumeration.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Adjacency = std::vector<std::vector<int>>;

inline std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

inline Adjacency adjacency_from_code(int n, std::uint64_t code) {
    Adjacency adj(static_cast<std::size_t>(n));
    const auto pairs = all_pairs(n);
    for (std::size_t e = 0; e < pairs.size(); ++e) {
        if ((code >> e) & 1U) {
            adj[static_cast<std::size_t>(pairs[e].first)].push_back(pairs[e].second);
            adj[static_cast<std::size_t>(pairs[e].second)].push_back(pairs[e].first);
        }
    }
    return adj;
}

inline std::vector<int> sorted_degrees(const Adjacency& adj) {
    std::vector<int> d;
    for (const auto& row : adj) d.push_back(static_cast<int>(row.size()));
    std::sort(d.begin(), d.end());
    return d;
}

/// Every sorted degree sequence realized by some labeled graph on n vertices.
inline std::set<std::vector<int>> realizable_sequences(int n) {
    std::set<std::vector<int>> out;
    const auto pairs = all_pairs(n);
    const std::uint64_t limit = std::uint64_t{1} << pairs.size();
    for (std::uint64_t code = 0; code < limit; ++code) {
        std::vector<int> d(static_cast<std::size_t>(n), 0);
        for (std::size_t e = 0; e < pairs.size(); ++e) {
            if ((code >> e) & 1U) {
                ++d[static_cast<std::size_t>(pairs[e].first)];
                ++d[static_cast<std::size_t>(pairs[e].second)];
            }
        }
        std::sort(d.begin(), d.end());
        out.insert(d);
    }
    return out;
}

/// Components of the graph with the vertices in `removed` deleted (BFS).
inline int components_without(const Adjacency& adj, const std::vector<bool>& removed) {
    const int n = static_cast<int>(adj.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    int count = 0;
    for (int s = 0; s < n; ++s) {
        if (removed[static_cast<std::size_t>(s)] || seen[static_cast<std::size_t>(s)]) continue;
        ++count;
        std::queue<int> q;
        q.push(s);
        seen[static_cast<std::size_t>(s)] = true;
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (const int v : adj[static_cast<std::size_t>(u)]) {
                if (!removed[static_cast<std::size_t>(v)] && !seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = true;
                    q.push(v);
                }
            }
        }
    }
    return count;
}

/// t = p/q; checks p * omega(G - X) <= q * |X| for every X with omega >= 2,
/// plus the complete-graph convention tau(K_n) = n - 1.
inline bool is_t_tough(const Adjacency& adj, long long p, long long q) {
    const int n = static_cast<int>(adj.size());
    std::size_t edges = 0;
    for (const auto& row : adj) edges += row.size();
    if (edges == static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1)) return p <= q * (n - 1);
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        std::vector<bool> removed(static_cast<std::size_t>(n));
        int size = 0;
        for (int v = 0; v < n; ++v) {
            removed[static_cast<std::size_t>(v)] = (mask >> v) & 1U;
            size += removed[static_cast<std::size_t>(v)] ? 1 : 0;
        }
        const int omega = components_without(adj, removed);
        if (omega >= 2 && p * omega > q * size) return false;
    }
    return true;
}

/// Minimum |X| / omega(G - X) as a (num, den) pair compared by cross multiplication.
inline std::pair<int, int> toughness(const Adjacency& adj) {
    const int n = static_cast<int>(adj.size());
    std::size_t edges = 0;
    for (const auto& row : adj) edges += row.size();
    if (edges == static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1)) return {n - 1, 1};
    std::pair<int, int> best{-1, 1};
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        std::vector<bool> removed(static_cast<std::size_t>(n));
        int size = 0;
        for (int v = 0; v < n; ++v) {
            removed[static_cast<std::size_t>(v)] = (mask >> v) & 1U;
            size += removed[static_cast<std::size_t>(v)] ? 1 : 0;
        }
        const int omega = components_without(adj, removed);
        if (omega < 2) continue;
        if (best.first < 0 || static_cast<long long>(size) * best.second < static_cast<long long>(best.first) * omega) {
            best = {size, omega};
        }
    }
    const int g = std::gcd(best.first, best.second);
    return {best.first / g, best.second / g};
}

/// Hamiltonian cycle by trying every vertex order that starts at 0.
inline bool is_hamiltonian(const Adjacency& adj) {
    const int n = static_cast<int>(adj.size());
    if (n < 3) return false;
    std::vector<std::vector<bool>> m(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    for (int u = 0; u < n; ++u)
        for (const int v : adj[static_cast<std::size_t>(u)]) m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
    std::vector<int> order(static_cast<std::size_t>(n - 1));
    std::iota(order.begin(), order.end(), 1);
    do {
        int prev = 0;
        bool ok = true;
        for (const int v : order) {
            if (!m[static_cast<std::size_t>(prev)][static_cast<std::size_t>(v)]) {
                ok = false;
                break;
            }
            prev = v;
        }
        if (ok && m[static_cast<std::size_t>(prev)][0]) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

/// Connectivity by deleting every vertex set smaller than k.
inline bool is_k_connected(const Adjacency& adj, int k) {
    const int n = static_cast<int>(adj.size());
    if (k <= 0) return true;
    if (n <= k) return false;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        std::vector<bool> removed(static_cast<std::size_t>(n));
        int size = 0;
        for (int v = 0; v < n; ++v) {
            removed[static_cast<std::size_t>(v)] = (mask >> v) & 1U;
            size += removed[static_cast<std::size_t>(v)] ? 1 : 0;
        }
        if (size < k && components_without(adj, removed) != 1) return false;
    }
    return true;
}

/// Partitions of r into parts each <= cap with at most `slots` parts, by recursion.
inline long long count_partitions(int r, int cap, int slots) {
    if (r == 0) return 1;
    if (slots == 0 || cap == 0) return 0;
    long long total = 0;
    for (int part = std::min(cap, r); part >= 1; --part) total += count_partitions(r - part, part, slots - 1);
    return total;
}

/// Every nondecreasing sequence over [0, n-1].
inline std::vector<std::vector<int>> all_sequences(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> d(static_cast<std::size_t>(n), 0);
    while (true) {
        out.push_back(d);
        int pos = n - 1;
        while (pos >= 0 && d[static_cast<std::size_t>(pos)] == n - 1) --pos;
        if (pos < 0) break;
        const int v = d[static_cast<std::size_t>(pos)] + 1;
        for (int q = pos; q < n; ++q) d[static_cast<std::size_t>(q)] = v;
    }
    return out;
}

/// Random Chvátal-type clause list: increasing indices, nondecreasing thresholds in [1, n].
template <class Rng>
std::vector<std::pair<int, int>> random_clauses(Rng& rng, int n) {
    std::vector<std::pair<int, int>> out;
    std::uniform_int_distribution<int> coin(0, 2);
    std::uniform_int_distribution<int> step(0, 2);
    int threshold = 1 + static_cast<int>(rng() % 2);
    for (int i = 1; i <= n && threshold <= n; ++i) {
        if (coin(rng) == 0) {
            out.emplace_back(i, threshold);
            threshold += step(rng);
        }
    }
    return out;
}

/// Random nondecreasing n-sequence with entries in [0, n-1].
template <class Rng>
std::vector<int> random_sequence(Rng& rng, int n) {
    std::uniform_int_distribution<int> entry(0, n - 1);
    std::vector<int> d(static_cast<std::size_t>(n));
    for (auto& x : d) x = entry(rng);
    std::sort(d.begin(), d.end());
    return d;
}

/// A random sequence majorizing `base`: add random increments, then restore
/// monotonicity with a running maximum (which never lowers an entry).
template <class Rng>
std::vector<int> random_majorant(Rng& rng, const std::vector<int>& base) {
    const int n = static_cast<int>(base.size());
    std::uniform_int_distribution<int> bump(0, 2);
    std::vector<int> up(base);
    for (auto& x : up) x = std::min(n - 1, x + bump(rng));
    for (std::size_t j = 1; j < up.size(); ++j) up[j] = std::max(up[j], up[j - 1]);
    return up;
}

}  // namespace oracle
