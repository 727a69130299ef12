#include "turan/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace turan {

namespace {

void check_order(long n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (n > kMaxVertices)
        throw std::out_of_range("vertex count " + std::to_string(n) + " exceeds cap " +
                                std::to_string(kMaxVertices));
}

}  // namespace

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
    check_order(n);
    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw std::invalid_argument("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                        ") out of range for n=" + std::to_string(n));
        if (a == b) throw std::invalid_argument("loop at vertex " + std::to_string(a));
        rows[static_cast<std::size_t>(a)].set(b);
        rows[static_cast<std::size_t>(b)].set(a);
    }
    return Graph(std::move(rows));
}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
    check_order(static_cast<long>(rows.size()));
    Graph g(std::move(rows));
    g.validate();
    return g;
}

void Graph::validate() const {
    const int n = order();
    const VertexSet all = vertices();
    for (int i = 0; i < n; ++i) {
        const auto& row = adj_[static_cast<std::size_t>(i)];
        if (row.test(i)) throw std::invalid_argument("loop at vertex " + std::to_string(i));
        if (!row.is_subset_of(all)) throw std::invalid_argument("row bits beyond vertex count");
        row.for_each([&](int j) {
            if (!adj_[static_cast<std::size_t>(j)].test(i))
                throw std::invalid_argument("asymmetric adjacency");
        });
    }
}

int Graph::size() const {
    int twice = 0;
    for (const auto& r : adj_) twice += r.count();
    return twice / 2;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& r : adj_) d = std::max(d, r.count());
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int i = 0; i < order(); ++i)
        neighbors(i).for_each([&](int j) {
            if (j > i) out.emplace_back(i, j);
        });
    return out;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d;
    d.reserve(adj_.size());
    for (const auto& r : adj_) d.push_back(r.count());
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

bool Graph::is_clique(const VertexSet& s) const {
    bool ok = true;
    s.for_each([&](int v) {
        VertexSet rest = s;
        rest.reset(v);
        if (!rest.is_subset_of(neighbors(v))) ok = false;
    });
    return ok;
}

Graph complete_graph(int n) {
    check_order(n);
    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        rows[static_cast<std::size_t>(i)] = VertexSet::range(n);
        rows[static_cast<std::size_t>(i)].reset(i);
    }
    return Graph::from_rows(std::move(rows));
}

Graph empty_graph(int n) {
    check_order(n);
    return Graph::from_rows(std::vector<VertexSet>(static_cast<std::size_t>(n)));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, e);
}

Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, e);
}

Graph disjoint_union(std::span<const std::pair<Graph, int>> parts) {
    long total = 0;
    for (const auto& [g, mult] : parts) {
        if (mult < 0) throw std::invalid_argument("negative multiplicity");
        total += static_cast<long>(g.order()) * mult;
    }
    check_order(total);
    std::vector<Edge> edges;
    int offset = 0;
    for (const auto& [g, mult] : parts) {
        const auto ge = g.edges();
        for (int copy = 0; copy < mult; ++copy) {
            for (auto [a, b] : ge) edges.emplace_back(a + offset, b + offset);
            offset += g.order();
        }
    }
    return Graph::from_edge_list(static_cast<int>(total), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const std::pair<Graph, int> parts[] = {{a, 1}, {b, 1}};
    return disjoint_union(parts);
}

Graph multiple(const Graph& g, int times) {
    const std::pair<Graph, int> parts[] = {{g, times}};
    return disjoint_union(parts);
}

Graph join(const Graph& a, const Graph& b) {
    const int n1 = a.order();
    const int n2 = b.order();
    check_order(static_cast<long>(n1) + n2);
    std::vector<Edge> edges = a.edges();
    for (auto [x, y] : b.edges()) edges.emplace_back(x + n1, y + n1);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) edges.emplace_back(i, n1 + j);
    return Graph::from_edge_list(n1 + n2, edges);
}

Graph complement(const Graph& g) {
    const int n = g.order();
    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    const VertexSet all = g.vertices();
    for (int i = 0; i < n; ++i) {
        rows[static_cast<std::size_t>(i)] = all - g.neighbors(i);
        rows[static_cast<std::size_t>(i)].reset(i);
    }
    return Graph::from_rows(std::move(rows));
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (!s.is_subset_of(g.vertices())) throw std::invalid_argument("vertex set not contained in graph");
    const std::vector<int> keep = s.to_vector();
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) index[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    std::vector<VertexSet> rows(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        (g.neighbors(keep[i]) & s).for_each([&](int v) { rows[i].set(index[static_cast<std::size_t>(v)]); });
    return Graph::from_rows(std::move(rows));
}

Graph remove_vertices(const Graph& g, const VertexSet& s) {
    return induced_subgraph(g, g.vertices() - s);
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation size mismatch");
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges())
        edges.emplace_back(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
    return Graph::from_edge_list(n, edges);
}

VertexSet common_neighborhood(const Graph& g, const VertexSet& c) {
    if (c.empty()) throw std::invalid_argument("common neighborhood of an empty set is undefined");
    if (!c.is_subset_of(g.vertices())) throw std::invalid_argument("vertex set not contained in graph");
    VertexSet out = g.vertices();
    c.for_each([&](int v) { out &= g.neighbors(v); });
    return out;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet unseen = g.vertices();
    while (unseen.any()) {
        VertexSet comp;
        VertexSet frontier;
        frontier.set(unseen.first());
        while (frontier.any()) {
            comp |= frontier;
            VertexSet next;
            frontier.for_each([&](int v) { next |= g.neighbors(v); });
            frontier = next - comp;
        }
        unseen -= comp;
        out.push_back(comp);
    }
    return out;
}

Graph trim_isolated(const Graph& g) {
    VertexSet keep;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0) keep.set(v);
    return induced_subgraph(g, keep);
}

std::string to_string(const VertexSet& s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    s.for_each([&](int v) {
        if (!first) os << ',';
        os << v + 1;
        first = false;
    });
    os << '}';
    return os.str();
}

std::string describe(const Graph& g) {
    std::ostringstream os;
    os << "n=" << g.order() << " m=" << g.size() << " E=[";
    bool first = true;
    for (auto [a, b] : g.edges()) {
        if (!first) os << ' ';
        os << a + 1 << '-' << b + 1;
        first = false;
    }
    os << ']';
    return os.str();
}

}  // namespace turan
