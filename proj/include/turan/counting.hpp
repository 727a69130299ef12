#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "turan/graph.hpp"
#include "turan/numeric.hpp"

namespace turan {

using CountValue = Count;

// Pattern H with everything the counters need precomputed: Dom(H), |Aut(H)|,
// H with u dominating vertices deleted for each u <= dom(H), and the pattern
// vertex order used by the embedding search.
class PatternSpec {
public:
    explicit PatternSpec(Graph h);

    [[nodiscard]] const Graph& pattern() const { return pattern_; }
    [[nodiscard]] int order() const { return pattern_.order(); }
    [[nodiscard]] const VertexSet& dom_set() const { return dom_set_; }
    [[nodiscard]] int dom_count() const { return dom_set_.count(); }
    [[nodiscard]] const Count& aut_count() const { return aut_count_; }
    [[nodiscard]] bool is_clique() const { return pattern_.size() * 2 == order() * (order() - 1); }

    // H^{↓u}; throws std::invalid_argument when u > dom(H).
    [[nodiscard]] const Graph& derived(int u) const;

    // Pattern vertices in search order, and for each position the earlier
    // positions adjacent to it.
    [[nodiscard]] const std::vector<int>& search_order() const { return order_; }
    [[nodiscard]] const std::vector<std::vector<int>>& back_neighbors() const { return back_; }

    // All automorphisms as vertex maps; computed on first use.
    [[nodiscard]] const std::vector<std::vector<int>>& automorphisms() const;

private:
    Graph pattern_;
    VertexSet dom_set_;
    Count aut_count_;
    std::vector<Graph> derived_;
    std::vector<int> order_;
    std::vector<std::vector<int>> back_;

    struct AutCache {
        std::once_flag once;
        std::vector<std::vector<int>> maps;
    };
    std::shared_ptr<AutCache> auts_ = std::make_shared<AutCache>();
};

// A subgraph of the host isomorphic to the pattern: map[i] is the host vertex
// playing pattern vertex i. Its edges are the images of the pattern edges.
struct Copy {
    std::vector<int> map;
    VertexSet vertices;
    // Dom(J) computed on J's own edge set, i.e. the image of Dom(H).
    VertexSet dominating;

    [[nodiscard]] std::vector<Edge> edges(const Graph& pattern) const;
    friend bool operator==(const Copy&, const Copy&) = default;
};

// k^t(G). OpenMP over the first clique vertex; exact for any thread count.
CountValue count_cliques(const Graph& g, int t);

// Every t-clique once, ascending lexicographic order of vertex lists.
std::vector<VertexSet> enumerate_cliques(const Graph& g, int t);

// Injective edge-preserving maps H -> G.
CountValue count_embeddings(const PatternSpec& h, const Graph& g);

// N(H,G): subgraph copies, not induced; embeddings / |Aut(H)|.
CountValue count_subgraph_copies(const PatternSpec& h, const Graph& g);

// Copies J of H with every vertex of the u-clique c dominating in J, via
// N(H^{↓u}, G[N(c)]).
CountValue count_copies_rooted(const PatternSpec& h, const Graph& g, const VertexSet& c, int u);

VertexSet dominating_vertices(const Graph& h);

// Deletes the lexicographically least u dominating vertices.
Graph delete_dominating(const Graph& h, int u);

// k^s(T_r(n)) by the binomial sum over the b larger parts, n = a r + b.
CountValue turan_clique_closed_form(int r, int n, int s);

// Copies of H meeting s; N(H,G) - N(H,G-S).
CountValue copies_through(const PatternSpec& h, const Graph& g, const VertexSet& s);

CountValue automorphism_count(const Graph& h);

// Each copy exactly once, ordered by (vertex set, map).
std::vector<Copy> enumerate_copies(const PatternSpec& h, const Graph& g);

// First embedding in search order, or nothing.
std::optional<std::vector<int>> find_embedding(const PatternSpec& h, const Graph& g);

// Single-threaded versions of the parallel kernels, kept as the reference the
// parallel paths are tested and benchmarked against.
namespace serial {
CountValue count_cliques(const Graph& g, int t);
CountValue count_embeddings(const PatternSpec& h, const Graph& g);
}  // namespace serial

}  // namespace turan
