#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "turan/graph.hpp"
#include "turan/numeric.hpp"
#include "turan/params.hpp"

namespace turan {

struct TuranSpec {
    int r = 1;
    int n = 0;
    // n mod r parts of size ceil(n/r) first, then the floor-sized ones.
    std::vector<int> part_sizes;

    static TuranSpec make(int r, int n);
    // Part index of each vertex; parts are labelled consecutively.
    [[nodiscard]] std::vector<int> part_of() const;
};

Graph turan_graph(int r, int n);

// First m edges, in colex order, of the r-partite graph on 0,1,2,... with
// vertex i in part i mod r. With max_degree set, an edge that would push an
// endpoint past it is skipped and the scan continues.
Graph colex_turan(int r, long m, std::optional<int> max_degree = std::nullopt);

// K_u ∨ I_s.
Graph complete_split(int u, int s);
inline Graph star(int s) { return complete_split(1, s); }

// L_u(Δ, ω) = T_ω(aω + b).
Graph lower_bound_graph(const ParamTriple& params);

struct LbFamily {
    Graph graph;
    Graph L;
    Count ku_of_L;
    long q = 0;
    long r = 0;
};

// qL ∪ rK_u with exactly p u-cliques, q = floor(p / k^u(L)).
LbFamily lb_family_parts(const ParamTriple& params, long p);
inline Graph lb_family(const ParamTriple& params, long p) { return lb_family_parts(params, p).graph; }

// J ∨ K_u with the clique on the first u labels.
Graph join_with_clique(const Graph& j, int u);

// Candidate extremal graphs for Δ a multiple of ω−u, emitted for inspection
// only. u = 1: a·T_ω(Δω/(ω−1)) ∪ T_ω(b) with size = n vertices;
// u = 2: a·T_ω(Δω/(ω−2)) ∪ CT_ω(b) with size = m edges.
Graph candidate_graph(int u, int delta, int omega, long size);

// Family expressions for the command line, e.g. "6*CT(4,17,5)", "T(4,6)+K1",
// "join(K2,I2)", "L(1,5,4)", "fam(1,2,3,10)", "cand(1,6,4,20)", "g6:C~". Throws std::invalid_argument.
Graph parse_family(std::string_view text);

}  // namespace turan
