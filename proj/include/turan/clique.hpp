#pragma once

#include "turan/graph.hpp"

namespace turan {

// Largest clique of g[within]; branch and bound with a greedy colouring bound.
// Ties resolve to the clique found first in ascending vertex order.
VertexSet max_clique_within(const Graph& g, const VertexSet& within);

inline VertexSet max_clique(const Graph& g) { return max_clique_within(g, g.vertices()); }
inline int clique_number(const Graph& g) { return max_clique(g).count(); }

}  // namespace turan
