#pragma once

#include <optional>
#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

// Forbids K_u ∨ I_{Δ+1} (when delta is set) and K_{ω+1} (when omega is set).
// u = 1 is the star K_{1,Δ+1}, u = 2 is K_{1,1,Δ+1}.
struct ConstraintSet {
    int u = 1;
    std::optional<int> delta;
    std::optional<int> omega;

    [[nodiscard]] std::string str() const;
    friend bool operator==(const ConstraintSet&, const ConstraintSet&) = default;
};

struct Violation {
    enum class Kind { clique, split };
    Kind kind = Kind::clique;
    // For a clique violation the K_{ω+1}; for a split violation the u-clique c.
    VertexSet clique;
    // Vertex set of the forbidden copy: c plus its Δ+1 least common neighbours.
    VertexSet witness;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct FreenessReport {
    ConstraintSet constraints;
    int clique_number = 0;
    int max_degree = 0;
    // Entry i is the largest |N(c)| over (i+1)-cliques c, for i+1 <= max(u, 1);
    // -1 when the graph has no clique of that size.
    std::vector<int> max_common_neighborhood_by_u;
    // At most one per forbidden graph, each lexicographically least.
    std::vector<Violation> violations;

    [[nodiscard]] bool passes() const { return violations.empty(); }
};

// Some embedding of f into g (map[i] = image of vertex i), or nothing.
std::optional<std::vector<int>> contains_subgraph(const Graph& g, const Graph& f);

FreenessReport check_constraints(const Graph& g, const ConstraintSet& cs);

// Same verdict as check_constraints(g, cs).passes(), without the report.
bool satisfies(const Graph& g, const ConstraintSet& cs);

// Lexicographically least t-clique (ascending vertex list order), if any.
std::optional<VertexSet> first_clique(const Graph& g, int t);

}  // namespace turan
