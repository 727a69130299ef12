#pragma once

#include <optional>
#include <string>
#include <vector>

#include "turan/counting.hpp"
#include "turan/freeness.hpp"
#include "turan/graph.hpp"

namespace turan {

inline constexpr int kEnumerationCap = 8;
inline constexpr int kEnumerationHardCap = 9;

struct EnumerateOptions {
    std::optional<ConstraintSet> prune;
    // Lets n reach kEnumerationHardCap (prints a warning to stderr).
    bool allow_nine = false;
};

// One graph per isomorphism class on n vertices by canonical augmentation,
// restricted to graphs satisfying options.prune. Output order is fixed.
std::vector<Graph> enumerate_graphs(int n, const EnumerateOptions& options = {});

struct SearchOutcome {
    Count objective = 0;
    // graph6 of every optimum up to isomorphism, sorted by canonical code.
    std::vector<std::string> argmax;
    // Graphs examined, after pruning and (for u >= 2) the k^u filter.
    Count search_space_size = 0;
    ConstraintSet constraints;
    int u = 1;
    long p = 0;
    int n_cap = 0;
    // Each optimum recounted with the serial counter and rechecked.
    bool verified = false;
    // False when no graph met the constraints at all.
    bool feasible = false;
    std::vector<std::string> notes;
};

// ex(n, H, F) with F encoded by cs, over graphs on exactly n vertices.
SearchOutcome brute_extremal(int n, const PatternSpec& h, const ConstraintSet& cs, const EnumerateOptions& options = {});

// max N(H, G) over graphs with at most n_cap vertices, k^u(G) = p and cs.
// n_cap <= 0 picks min(2p, 8) for u >= 2 and p for u = 1.
SearchOutcome brute_extremal_u(long p, int u, const PatternSpec& h, const ConstraintSet& cs, int n_cap = 0,
                               const EnumerateOptions& options = {});

struct Composition {
    Graph graph;
    // Copies of each input component used.
    std::vector<long> multiplicity;
    Count value = 0;
    Count ku = 0;
};

// Disjoint union of components with k^u exactly p maximising N(H, .), by
// unbounded-knapsack DP over p. Ties keep the earlier component. Throws
// std::domain_error when p is unreachable.
Composition best_composition(const std::vector<Graph>& components, const PatternSpec& h, long p, int u);

namespace serial {
std::vector<Graph> enumerate_graphs(int n, const EnumerateOptions& options = {});
}

}  // namespace turan
