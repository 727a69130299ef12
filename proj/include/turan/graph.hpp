#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "turan/bitset.hpp"

namespace turan {

using Edge = std::pair<int, int>;

// Immutable simple undirected graph on vertices 0..n-1 with bitset rows.
// Every constructor path checks symmetry, irreflexivity and that no bit at a
// position >= n is set.
class Graph {
public:
    Graph() = default;

    static Graph from_edge_list(int n, std::span<const Edge> edges);
    static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
        return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
    }
    static Graph from_rows(std::vector<VertexSet> rows);

    [[nodiscard]] int order() const { return static_cast<int>(adj_.size()); }
    [[nodiscard]] int size() const;
    [[nodiscard]] const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    [[nodiscard]] std::span<const VertexSet> rows() const { return adj_; }
    [[nodiscard]] bool adjacent(int a, int b) const { return adj_[static_cast<std::size_t>(a)].test(b); }
    [[nodiscard]] int degree(int v) const { return neighbors(v).count(); }
    [[nodiscard]] int max_degree() const;
    [[nodiscard]] VertexSet vertices() const { return VertexSet::range(order()); }
    [[nodiscard]] std::vector<Edge> edges() const;
    [[nodiscard]] std::vector<int> degree_sequence() const;
    [[nodiscard]] bool is_clique(const VertexSet& s) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    explicit Graph(std::vector<VertexSet> rows) : adj_(std::move(rows)) {}
    void validate() const;

    std::vector<VertexSet> adj_;
};

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
// Path on n vertices.
Graph path_graph(int n);

// Vertex-disjoint union; part i is relabelled to follow parts 0..i-1.
Graph disjoint_union(std::span<const std::pair<Graph, int>> parts);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph multiple(const Graph& g, int times);

// G1 ∪ G2 plus every edge between them.
Graph join(const Graph& a, const Graph& b);

Graph complement(const Graph& g);

// Induced subgraph on s, relabelled by ascending vertex order.
Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph remove_vertices(const Graph& g, const VertexSet& s);

// Vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

// Intersection of the neighborhoods of c; throws on empty c.
VertexSet common_neighborhood(const Graph& g, const VertexSet& c);

// Connected components as vertex sets, ordered by least vertex.
std::vector<VertexSet> components(const Graph& g);

Graph trim_isolated(const Graph& g);

// Display forms number vertices from 1.
std::string to_string(const VertexSet& s);
std::string describe(const Graph& g);

}  // namespace turan
