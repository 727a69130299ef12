#pragma once

#include <cstdint>
#include <random>

#include "turan/graph.hpp"

namespace turan {

// G(n, num/den) drawn with plain integer arithmetic on mt19937_64 output, so
// a seed gives the same graph on every platform.
inline Graph random_graph(int n, std::uint64_t num, std::uint64_t den, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (rng() % den < num) edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

// Uniform integer in [lo, hi] without std::uniform_int_distribution, whose
// output is implementation-defined.
inline int random_int(int lo, int hi, std::mt19937_64& rng) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace turan
