#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "turan/counting.hpp"
#include "turan/numeric.hpp"
#include "turan/params.hpp"

namespace turan {

// ρ_u(H, G) = N(H, G) / k^u(G); throws std::domain_error when k^u(G) = 0.
Rational rho(const PatternSpec& h, const Graph& g, int u);

// P_u(H, Δ, ω) is only ever reported as the interval [lower, upper].
struct BoundsReport {
    ParamTriple params;
    Graph L;
    Count n_h_in_L = 0;
    Count ku_of_L = 0;
    // N(H^{↓u}, T_{ω−u}(Δ)).
    Count n_derived_in_turan = 0;
    Rational lower;
    Rational upper;
    // lower / upper, or 1 when both vanish (H^{↓u} has no copy in T_{ω−u}).
    Rational ratio;
    bool divisible = false;
    bool equal = false;

    // lower <= upper, and divisible implies equal.
    [[nodiscard]] bool consistent() const { return lower <= upper && (!divisible || equal); }
};

// Needs dom(H) >= u and Δ >= ω >= u+1 >= 2; throws std::invalid_argument.
BoundsReport bounds_report(const PatternSpec& h, const ParamTriple& params);

// N(H^{↓u}, T_{ω−u}(Δ−u)) / N(H^{↓u}, T_{ω−u}(Δ)); lower/upper is at least
// this because L[N(c)] contains T_{ω−u}(Δ−u). Nothing when the denominator
// vanishes.
std::optional<Rational> neighborhood_ratio_bound(const PatternSpec& h, const ParamTriple& params);

// Π_{i<u} (1 − k/(n−i)); the telescoping lower bound on
// N(H, T_r(n−u)) / N(H, T_r(n)) for |V(H)| = k once r >= ω₀(H).
Rational product_bound(int k, int n, int u);

struct RatioDiagnostic {
    Rational ratio;
    Rational bound;
    [[nodiscard]] bool within() const { return bound <= ratio && ratio <= 1; }
};

// (N(H, T_r(n−u)) / N(H, T_r(n)), product_bound(|V(H)|, n, u)).
RatioDiagnostic ratio_diagnostic(const PatternSpec& h, int r, int n, int u);

// 300·v(H)^9, the only certified upper bound on ω₀(H) available.
Count omega0_bound(const Graph& h);

struct Omega0Info {
    Count certified_bound;
    // 1 for cliques (Zykov); nothing otherwise.
    std::optional<int> exact;
    std::string label;
};
Omega0Info omega0_info(const Graph& h);

struct GoodnessResult {
    bool pass = true;
    int omega = 0;
    int n_max = 0;
    // Per n: brute-force optimum and N(H, T_ω(n)).
    std::vector<std::pair<Count, Count>> values;
    // First n where T_ω(n) loses, with a better graph in graph6.
    std::optional<int> failing_n;
    std::optional<std::string> witness;
    std::string label;
};

// Exhaustive check that T_ω(n) maximises N(H, .) among K_{ω+1}-free graphs
// for every n <= n_max. A pass is evidence that ω >= ω₀(H), not a proof.
GoodnessResult empirical_turan_goodness(const PatternSpec& h, int omega, int n_max);

// Both sides of the sandwich for the star-forbidden variant:
// ρ_u(H, T_ω(Δ + ⌊Δ/(ω−1)⌋)) <= c <= N(H^{↓u}, T_{ω−u}(Δ−u+1)) / C(dom(H), u).
// Nothing is claimed about c itself.
struct StarSandwich {
    Rational lower;
    Rational upper;
    std::string label;
};
StarSandwich star_sandwich(const PatternSpec& h, int u, int delta, int omega);

}  // namespace turan
