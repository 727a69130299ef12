#pragma once

#include <optional>
#include <string>
#include <vector>

#include "turan/counting.hpp"
#include "turan/numeric.hpp"

namespace turan {

// ω(c): largest clique of G containing c. Δ(c) = |N(c)|.
struct CliqueWeights {
    int omega_c = 0;
    int delta_c = 0;
    friend bool operator==(const CliqueWeights&, const CliqueWeights&) = default;
};

// c must be a u-clique of g with u = |c| >= 1.
CliqueWeights clique_weights(const Graph& g, const VertexSet& c, int u);

struct CopyWeights {
    Copy copy;
    int omega_J = 0;
    int delta_J = 0;
    // The u-subsets of Dom(J) attaining ω(J) and Δ(J); least one on ties.
    VertexSet omega_witness;
    VertexSet delta_witness;
    // N(H^{↓u}, T_{ω(J)−u}(Δ(J))); x = 1 / denominator when it is nonzero.
    Count denominator = 0;
    std::optional<Rational> x;
};

struct LocalReport {
    int u = 1;
    int dom = 0;
    long omega0_param = 1;
    Count ku = 0;
    std::vector<CopyWeights> per_copy;
    Rational weighted_sum = 0;
    Rational bound = 0;
    bool holds = false;
    bool equality = false;
    // Every u-clique of dominating vertices of a copy has ω(c) >= ω₀ + u.
    bool hypothesis_ok = true;
    // Set when some x(J) is undefined; the sum is then not evaluated.
    bool aborted = false;
    std::string diagnosis;
    // u-cliques dominating in no copy; the inequality places no demand on them.
    std::vector<VertexSet> exempt_cliques;
    // Relevant u-cliques with ω(c) < omega0_param + u.
    std::vector<VertexSet> hypothesis_failures;
};

// Sum of x(J) over all copies J of H against k^u(G) / C(dom(H), u).
LocalReport localized_report(const Graph& g, const PatternSpec& h, int u, long omega0_param);

// The H = K_t case with x from the closed form for k^{t−u}(T_r(n)).
LocalReport localized_clique_sum(const Graph& g, int t, int u);

// 1 when H^{↓u} is a clique (Zykov), otherwise 300 v(H^{↓u})^9 saturated to
// a value above any clique number the library can hold.
long default_omega0_param(const PatternSpec& h, int u);

}  // namespace turan
