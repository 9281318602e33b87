#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "toughseq/rational.hpp"
#include "toughseq/sequences.hpp"

namespace toughseq {

/// Vertex sets are bitmasks; bit v stands for vertex v.
using VertexSet = std::uint32_t;

/// Small simple undirected graph on vertices 0..n-1 with bitset rows.
class Graph {
public:
    static constexpr int kMaxVertices = 32;

    explicit Graph(int n);

    int n() const noexcept { return n_; }
    VertexSet all() const noexcept;
    VertexSet neighbors(int v) const { return rows_.at(static_cast<std::size_t>(v)); }

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int v) const;
    int edge_count() const noexcept;
    bool is_complete() const noexcept;
    DegreeSequence degree_sequence() const;
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_;
    std::vector<VertexSet> rows_;
};

Graph clique(int m);
Graph empty_graph(int m);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

/// K_core + (co-K_independent ∪ K_{c1} ∪ ... ∪ K_{cr}). Any of the pieces may
/// be absent (size zero) as long as the result has at least one vertex.
Graph core_join_cliques(int core, int independent, const std::vector<int>& cliques);

/// Number of connected components of the subgraph induced by `alive`.
int components(const Graph& g, VertexSet alive);
int components(const Graph& g);

struct ToughnessResult {
    Rational value;
    std::optional<VertexSet> witness_cutset;  // absent for complete graphs
    int witness_components = 0;
};

/// Exact toughness by enumerating every vertex subset. Witness ties go to the
/// smallest cutset, then the lexicographically smallest sorted vertex list.
ToughnessResult toughness(const Graph& g);

/// t * omega(G - X) <= |X| for every cutset X; complete graphs compare n-1 to t.
bool is_t_tough(const Graph& g, const Rational& t);

/// Held–Karp style reachability over subsets; false for n < 3.
bool is_hamiltonian(const Graph& g);
bool is_k_connected(const Graph& g, int k);

/// Edge code of a labeled graph: bit e is set iff the e-th pair in the order
/// (0,1), (0,2), ..., (0,n-1), (1,2), ... is an edge.
std::uint64_t edge_code(const Graph& g);
Graph graph_from_code(int n, std::uint64_t code);
int pair_count(int n);

/// Calls `visit` for every labeled graph on n vertices in increasing edge-code order.
void for_each_graph(int n, const std::function<void(const Graph&, std::uint64_t)>& visit);

/// Largest n accepted by the exhaustive labeled-graph sweeps.
inline constexpr int kMaxSweepVertices = 8;

struct ForcibleResult {
    bool forcibly = true;
    std::optional<Graph> counterexample;  // lowest edge code among failing realizations
    std::size_t realizations = 0;
};

/// Checks `property` on every labeled realization of `seq` (n <= kMaxSweepVertices).
ForcibleResult forcibly_oracle(const DegreeSequence& seq, const std::function<bool(const Graph&)>& property);

/// Edge-list text: first line n, then one "u v" pair per line. Duplicates,
/// loops and out-of-range vertices are rejected.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

std::string format_vertex_set(VertexSet set);

}  // namespace toughseq
