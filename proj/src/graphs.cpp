#include "toughseq/graphs.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace toughseq {

namespace {

constexpr int kMaxHamiltonianVertices = 20;

void check_vertex(int n, int v) {
    if (v < 0 || v >= n) throw std::out_of_range("graph: vertex " + std::to_string(v) + " out of range");
}

int lowest(VertexSet s) { return std::countr_zero(s); }

}  // namespace

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices) {
        throw std::length_error("graph: vertex count must be in [1, " + std::to_string(kMaxVertices) + "]");
    }
    rows_.assign(static_cast<std::size_t>(n), 0);
}

VertexSet Graph::all() const noexcept {
    return n_ == 32 ? ~VertexSet{0} : ((VertexSet{1} << n_) - 1);
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(n_, u);
    check_vertex(n_, v);
    return (rows_[static_cast<std::size_t>(u)] >> v) & 1U;
}

void Graph::add_edge(int u, int v) {
    check_vertex(n_, u);
    check_vertex(n_, v);
    if (u == v) throw std::invalid_argument("graph: loops are not allowed");
    rows_[static_cast<std::size_t>(u)] |= VertexSet{1} << v;
    rows_[static_cast<std::size_t>(v)] |= VertexSet{1} << u;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(n_, u);
    check_vertex(n_, v);
    rows_[static_cast<std::size_t>(u)] &= ~(VertexSet{1} << v);
    rows_[static_cast<std::size_t>(v)] &= ~(VertexSet{1} << u);
}

int Graph::degree(int v) const { return std::popcount(neighbors(v)); }

int Graph::edge_count() const noexcept {
    int twice = 0;
    for (const auto row : rows_) twice += std::popcount(row);
    return twice / 2;
}

bool Graph::is_complete() const noexcept { return edge_count() == n_ * (n_ - 1) / 2; }

DegreeSequence Graph::degree_sequence() const {
    std::vector<int> degs;
    degs.reserve(rows_.size());
    for (const auto row : rows_) degs.push_back(std::popcount(row));
    return DegreeSequence(std::move(degs));
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            if ((rows_[static_cast<std::size_t>(u)] >> v) & 1U) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph clique(int m) {
    Graph g(m);
    for (int u = 0; u < m; ++u) {
        for (int v = u + 1; v < m; ++v) g.add_edge(u, v);
    }
    return g;
}

Graph empty_graph(int m) { return Graph(m); }

Graph disjoint_union(const Graph& g, const Graph& h) {
    Graph out(g.n() + h.n());
    for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
    for (const auto& [u, v] : h.edges()) out.add_edge(g.n() + u, g.n() + v);
    return out;
}

Graph join(const Graph& g, const Graph& h) {
    Graph out = disjoint_union(g, h);
    for (int u = 0; u < g.n(); ++u) {
        for (int v = 0; v < h.n(); ++v) out.add_edge(u, g.n() + v);
    }
    return out;
}

Graph core_join_cliques(int core, int independent, const std::vector<int>& cliques) {
    if (core < 0 || independent < 0) throw std::invalid_argument("graph: negative block size");
    std::optional<Graph> rest;
    auto append = [&rest](const Graph& piece) { rest = rest ? disjoint_union(*rest, piece) : piece; };
    if (independent > 0) append(empty_graph(independent));
    for (const int c : cliques) {
        if (c < 0) throw std::invalid_argument("graph: negative block size");
        if (c > 0) append(clique(c));
    }
    if (core == 0) {
        if (!rest) throw std::invalid_argument("graph: construction has no vertices");
        return *rest;
    }
    return rest ? join(clique(core), *rest) : clique(core);
}

int components(const Graph& g, VertexSet alive) {
    alive &= g.all();
    int count = 0;
    while (alive != 0) {
        VertexSet comp = VertexSet{1} << lowest(alive);
        VertexSet frontier = comp;
        while (frontier != 0) {
            VertexSet next = 0;
            for (VertexSet f = frontier; f != 0; f &= f - 1) next |= g.neighbors(lowest(f));
            next &= alive & ~comp;
            comp |= next;
            frontier = next;
        }
        alive &= ~comp;
        ++count;
    }
    return count;
}

int components(const Graph& g) { return components(g, g.all()); }

ToughnessResult toughness(const Graph& g) {
    const int n = g.n();
    if (g.is_complete()) return {Rational(n - 1), std::nullopt, 0};
    if (n > 26) throw std::length_error("toughness: exact sweep limited to 26 vertices");

    const VertexSet full = g.all();
    bool found = false;
    VertexSet best_set = 0;
    int best_size = 0;
    int best_omega = 1;
    for (VertexSet x = 0; x < full; ++x) {
        const int omega = components(g, full & ~x);
        if (omega < 2) continue;
        const int size = std::popcount(x);
        bool better = !found;
        if (found) {
            const long long lhs = static_cast<long long>(size) * best_omega;
            const long long rhs = static_cast<long long>(best_size) * omega;
            if (lhs != rhs) {
                better = lhs < rhs;
            } else if (size != best_size) {
                better = size < best_size;
            } else {
                const VertexSet diff = x ^ best_set;
                better = diff != 0 && ((x >> lowest(diff)) & 1U);
            }
        }
        if (better) {
            found = true;
            best_set = x;
            best_size = size;
            best_omega = omega;
        }
    }
    return {Rational(best_size, best_omega), best_set, best_omega};
}

bool is_t_tough(const Graph& g, const Rational& t) {
    const int n = g.n();
    if (g.is_complete()) return Rational(n - 1) >= t;
    if (n > 26) throw std::length_error("toughness: exact sweep limited to 26 vertices");
    const VertexSet full = g.all();
    for (VertexSet x = 0; x < full; ++x) {
        const int omega = components(g, full & ~x);
        if (omega < 2) continue;
        // t * omega <= |X|  <=>  num * omega <= |X| * den
        const __int128 lhs = static_cast<__int128>(t.num()) * omega;
        const __int128 rhs = static_cast<__int128>(std::popcount(x)) * t.den();
        if (lhs > rhs) return false;
    }
    return true;
}

bool is_hamiltonian(const Graph& g) {
    const int n = g.n();
    if (n < 3) return false;
    if (n > kMaxHamiltonianVertices) {
        throw std::length_error("hamiltonian: limited to " + std::to_string(kMaxHamiltonianVertices) + " vertices");
    }
    // ends[mask]: vertices v such that some path from 0 covers exactly mask and stops at v.
    const std::size_t masks = std::size_t{1} << n;
    std::vector<VertexSet> ends(masks, 0);
    ends[1] = 1;
    for (std::size_t mask = 1; mask < masks; mask += 2) {
        for (VertexSet e = ends[mask]; e != 0; e &= e - 1) {
            const int v = lowest(e);
            for (VertexSet nb = g.neighbors(v) & ~static_cast<VertexSet>(mask); nb != 0; nb &= nb - 1) {
                const int u = lowest(nb);
                ends[mask | (std::size_t{1} << u)] |= VertexSet{1} << u;
            }
        }
    }
    return (ends[masks - 1] & g.neighbors(0)) != 0;
}

bool is_k_connected(const Graph& g, int k) {
    if (k <= 0) return true;
    const int n = g.n();
    if (n <= k) return false;
    if (n > 26) throw std::length_error("connectivity: limited to 26 vertices");
    const VertexSet full = g.all();
    for (VertexSet s = 0; s < full; ++s) {
        if (std::popcount(s) >= k) continue;
        if (components(g, full & ~s) != 1) return false;
    }
    return true;
}

int pair_count(int n) { return n * (n - 1) / 2; }

std::uint64_t edge_code(const Graph& g) {
    std::uint64_t code = 0;
    int bit = 0;
    for (int u = 0; u < g.n(); ++u) {
        for (int v = u + 1; v < g.n(); ++v, ++bit) {
            if (bit >= 64) throw std::length_error("edge_code: too many vertex pairs");
            if (g.has_edge(u, v)) code |= std::uint64_t{1} << bit;
        }
    }
    return code;
}

Graph graph_from_code(int n, std::uint64_t code) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++bit) {
            if ((code >> bit) & 1U) g.add_edge(u, v);
        }
    }
    return g;
}

void for_each_graph(int n, const std::function<void(const Graph&, std::uint64_t)>& visit) {
    if (n < 1 || n > kMaxSweepVertices) {
        throw std::length_error("sweep: n must be in [1, " + std::to_string(kMaxSweepVertices) + "]");
    }
    const std::uint64_t limit = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t code = 0; code < limit; ++code) visit(graph_from_code(n, code), code);
}

ForcibleResult forcibly_oracle(const DegreeSequence& seq, const std::function<bool(const Graph&)>& property) {
    const int n = seq.n();
    if (n > kMaxSweepVertices) {
        throw std::length_error("forcibly_oracle: n must be <= " + std::to_string(kMaxSweepVertices));
    }
    if (!is_graphical(seq)) throw std::invalid_argument("forcibly_oracle: sequence is not graphical");

    const int pairs = pair_count(n);
    const int edges = static_cast<int>(seq.sum() / 2);
    std::vector<std::pair<int, int>> pair_of;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) pair_of.emplace_back(u, v);
    }

    ForcibleResult result;
    auto consider = [&](std::uint64_t code) {
        std::vector<int> degs(static_cast<std::size_t>(n), 0);
        for (std::uint64_t c = code; c != 0; c &= c - 1) {
            const auto& [u, v] = pair_of[static_cast<std::size_t>(std::countr_zero(c))];
            ++degs[static_cast<std::size_t>(u)];
            ++degs[static_cast<std::size_t>(v)];
        }
        if (DegreeSequence(std::move(degs)) != seq) return;
        ++result.realizations;
        if (result.forcibly) {
            Graph g = graph_from_code(n, code);
            if (!property(g)) {
                result.forcibly = false;
                result.counterexample = std::move(g);
            }
        }
    };

    if (edges == 0) {
        consider(0);
        return result;
    }
    // Gosper's hack visits every code with `edges` bits set in increasing order.
    const std::uint64_t limit = std::uint64_t{1} << pairs;
    for (std::uint64_t code = (std::uint64_t{1} << edges) - 1; code < limit;) {
        consider(code);
        const std::uint64_t low = code & (~code + 1);
        const std::uint64_t ripple = code + low;
        code = (((ripple ^ code) >> 2) / low) | ripple;
    }
    return result;
}

Graph parse_graph(std::string_view text) {
    std::vector<long long> tokens;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
        long long value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, value);
        if (ec != std::errc{} || ptr != text.data() + end) {
            throw std::invalid_argument("graph file: malformed token '" + std::string(text.substr(pos, end - pos)) + "'");
        }
        tokens.push_back(value);
        pos = end;
    }
    if (tokens.empty()) throw std::invalid_argument("graph file: missing vertex count");
    if (tokens.size() % 2 == 0) throw std::invalid_argument("graph file: dangling endpoint");
    if (tokens[0] < 1 || tokens[0] > Graph::kMaxVertices) {
        throw std::invalid_argument("graph file: vertex count out of range");
    }
    Graph g(static_cast<int>(tokens[0]));
    for (std::size_t s = 1; s < tokens.size(); s += 2) {
        const long long u = tokens[s];
        const long long v = tokens[s + 1];
        if (u < 0 || v < 0 || u >= g.n() || v >= g.n()) throw std::invalid_argument("graph file: vertex out of range");
        if (u == v) throw std::invalid_argument("graph file: loop at vertex " + std::to_string(u));
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v))) {
            throw std::invalid_argument("graph file: duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        }
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

std::string format_graph(const Graph& g) {
    std::ostringstream os;
    os << g.n() << '\n';
    for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

std::string format_vertex_set(VertexSet set) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (; set != 0; set &= set - 1) {
        if (!first) os << ',';
        os << lowest(set);
        first = false;
    }
    os << '}';
    return os.str();
}

}  // namespace toughseq
