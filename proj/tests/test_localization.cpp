#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "turan/constructions.hpp"
#include "turan/counting.hpp"
#include "turan/freeness.hpp"
#include "turan/localization.hpp"
#include "turan/random.hpp"
#include "turan/search.hpp"

using namespace turan;

namespace {

Rational q(long a, long b) { return Rational(a, b); }

std::vector<Graph> corpus() {
    std::vector<Graph> out;
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n)) out.push_back(g);
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 150; ++i) {
        const int n = random_int(4, 14, rng);
        out.push_back(random_graph(n, static_cast<std::uint64_t>(random_int(2, 7, rng)), 8, rng));
    }
    return out;
}

// ω(c) and Δ(c) from the definitions.
CliqueWeights weights_oracle(const Graph& g, const std::vector<int>& c) {
    const auto nb = oracle::common_neighbours(g, c);
    VertexSet s;
    for (int v : nb) s.set(v);
    return {static_cast<int>(c.size()) + oracle::clique_number(induced_subgraph(g, s)), static_cast<int>(nb.size())};
}

}  // namespace

TEST_CASE("clique weight examples") {
    CHECK(clique_weights(complete_graph(5), VertexSet{2}, 1) == CliqueWeights{5, 4});
    CHECK(clique_weights(cycle_graph(4), VertexSet{1}, 1) == CliqueWeights{2, 2});
    // Vertices 0 and 2 sit in the two parts of size 2.
    CHECK(clique_weights(turan_graph(4, 6), VertexSet{0, 2}, 2) == CliqueWeights{4, 2});
    CHECK_THROWS(clique_weights(cycle_graph(4), VertexSet{0, 2}, 2));
}

TEST_CASE("copy weight examples") {
    const PatternSpec k3(complete_graph(3));
    const LocalReport a = localized_report(complete_graph(5), k3, 1, 1);
    REQUIRE(a.per_copy.size() == 10);
    for (const auto& cw : a.per_copy) {
        CHECK(cw.omega_J == 5);
        CHECK(cw.delta_J == 4);
        CHECK(cw.x == q(1, 6));
    }
    const LocalReport b = localized_report(turan_graph(4, 8), k3, 1, 1);
    for (const auto& cw : b.per_copy) {
        CHECK(cw.omega_J == 4);
        CHECK(cw.delta_J == 6);
        CHECK(cw.x == q(1, 12));
    }
    const LocalReport c = localized_report(disjoint_union(complete_graph(3), complete_graph(4)), k3, 1, 1);
    REQUIRE(c.per_copy.size() == 5);
    CHECK(c.per_copy[0].copy.vertices == VertexSet{0, 1, 2});
    CHECK(c.per_copy[0].omega_J == 3);
    CHECK(c.per_copy[0].delta_J == 2);
    CHECK(c.per_copy[0].x == 1);
}

TEST_CASE("localized report examples") {
    const PatternSpec k3(complete_graph(3));
    const LocalReport k5 = localized_report(complete_graph(5), k3, 1, 1);
    CHECK(k5.weighted_sum == q(5, 3));
    CHECK(k5.bound == q(5, 3));
    CHECK(k5.equality);
    const Graph two = disjoint_union(turan_graph(3, 6), turan_graph(4, 8));
    const LocalReport t = localized_report(two, k3, 1, 1);
    CHECK(t.equality);
    CHECK(t.bound == q(14, 3));
    const LocalReport z = localized_report(disjoint_union(turan_graph(3, 6), empty_graph(7)), k3, 2, 1);
    CHECK(z.equality);
    CHECK(z.bound == 4);
    CHECK(z.exempt_cliques.empty());
}

TEST_CASE("localized clique sum examples") {
    const LocalReport k5 = localized_clique_sum(complete_graph(5), 3, 1);
    CHECK(k5.weighted_sum == q(5, 3));
    CHECK(k5.equality);
    const LocalReport c4 = localized_clique_sum(cycle_graph(4), 3, 1);
    CHECK(c4.weighted_sum == 0);
    CHECK(c4.bound == q(4, 3));
    CHECK(c4.holds);
    CHECK_FALSE(c4.equality);
    CHECK(c4.exempt_cliques.size() == 4);
    const LocalReport f = localized_clique_sum(disjoint_union(turan_graph(4, 8), empty_graph(3)), 4, 2);
    CHECK(f.equality);
    CHECK(f.bound == 4);
}

TEST_CASE("an undefined weight aborts the report") {
    // The wheel's rim is C_5; no bipartite Turan graph contains it.
    const Graph wheel = join(complete_graph(1), cycle_graph(5));
    const LocalReport r = localized_report(wheel, PatternSpec(wheel), 1, 1);
    CHECK(r.aborted);
    CHECK_FALSE(r.holds);
    CHECK(r.diagnosis.find("undefined") != std::string::npos);
    const LocalReport d = localized_report(wheel, PatternSpec(wheel), 1, default_omega0_param(PatternSpec(wheel), 1));
    CHECK_FALSE(d.hypothesis_ok);
    CHECK(default_omega0_param(PatternSpec(complete_graph(4)), 2) == 1);
}

TEST_CASE("weight relations on every clique and copy") {
    for (const Graph& hg : {complete_graph(3), complete_graph(4), join(complete_graph(2), empty_graph(2))}) {
        const PatternSpec h(hg);
        for (int u = 1; u <= 2; ++u)
            for (const Graph& g : corpus()) {
                const LocalReport r = localized_report(g, h, u, 1);
                for (const auto& cw : r.per_copy) {
                    CHECK(cw.delta_J >= cw.omega_J - u);
                    int best_omega = 0;
                    int best_delta = 0;
                    const auto dom = cw.copy.dominating.to_vector();
                    oracle::for_each_subset(static_cast<int>(dom.size()), u, [&](const std::vector<int>& pick) {
                        std::vector<int> c;
                        VertexSet cs;
                        for (int i : pick) {
                            c.push_back(dom[static_cast<std::size_t>(i)]);
                            cs.set(dom[static_cast<std::size_t>(i)]);
                        }
                        const CliqueWeights w = clique_weights(g, cs, u);
                        CHECK(w == weights_oracle(g, c));
                        CHECK(w.omega_c <= cw.omega_J);
                        CHECK(w.delta_c <= cw.delta_J);
                        CHECK(w.delta_c >= w.omega_c - u);
                        best_omega = std::max(best_omega, w.omega_c);
                        best_delta = std::max(best_delta, w.delta_c);
                    });
                    CHECK(cw.omega_J == best_omega);
                    CHECK(cw.delta_J == best_delta);
                }
            }
    }
}

TEST_CASE("clique counts in Turan graphs grow with parts and order") {
    for (int s = 0; s <= 6; ++s)
        for (int r = std::max(s, 1); r <= 8; ++r)
            for (int d = 0; d <= 20; ++d) {
                const Count c = turan_clique_closed_form(r, d, s);
                if (r < 8) CHECK(turan_clique_closed_form(r + 1, d, s) >= c);
                if (d < 20) CHECK(turan_clique_closed_form(r, d + 1, s) >= c);
            }
}

TEST_CASE("inequality, exact weights and agreement of the two routes") {
    for (int t = 3; t <= 4; ++t) {
        const PatternSpec h(complete_graph(t));
        for (int u = 1; u <= 2; ++u)
            for (const Graph& g : corpus()) {
                const LocalReport r = localized_report(g, h, u, 1);
                const LocalReport c = localized_clique_sum(g, t, u);
                REQUIRE_FALSE(r.aborted);
                CHECK(r.hypothesis_ok);
                CHECK(r.holds);
                CHECK(r.weighted_sum == c.weighted_sum);
                CHECK(r.bound == c.bound);
                CHECK(r.equality == c.equality);
                CHECK(r.exempt_cliques == c.exempt_cliques);
                Rational sum = 0;
                for (const auto& cw : r.per_copy)
                    sum += Rational(Count(1), oracle::multipartite_cliques(oracle::turan_parts(cw.omega_J - u, cw.delta_J), t - u));
                CHECK(sum == r.weighted_sum);
                CHECK(r.bound == Rational(oracle::cliques(g, u), oracle::binom(t, u)));
            }
    }
}

TEST_CASE("equality family graphs") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        const int t = random_int(3, 4, rng);
        const int u = random_int(1, t - 1, rng);
        std::vector<std::pair<Graph, int>> parts;
        const int k = random_int(1, 3, rng);
        for (int i = 0; i < k; ++i) {
            const int omega = random_int(std::max(t, u + 1), 5, rng);
            const int a = random_int(1, 2, rng);
            parts.emplace_back(turan_graph(omega, a * omega), 1);
        }
        // Z has no K_u: nothing for u = 1, isolated vertices for u = 2, a bipartite graph for u = 3.
        if (u == 2) parts.emplace_back(empty_graph(random_int(1, 5, rng)), 1);
        if (u == 3) parts.emplace_back(turan_graph(2, random_int(2, 7, rng)), 1);
        const Graph g = disjoint_union(parts);
        const LocalReport r = localized_report(g, PatternSpec(complete_graph(t)), u, 1);
        CHECK(r.equality);
        CHECK(localized_clique_sum(g, t, u).equality);
    }
}

TEST_CASE("equality needs each Turan block to contain the pattern") {
    // K_2 has edges but no triangle, so the sum is 0 against a bound of 2/3.
    const LocalReport r = localized_report(complete_graph(2), PatternSpec(complete_graph(3)), 1, 1);
    CHECK(r.weighted_sum == 0);
    CHECK(r.bound == q(2, 3));
    CHECK_FALSE(r.equality);
}

TEST_CASE("global recovery under the freeness constraints") {
    for (int t = 3; t <= 4; ++t)
        for (int u = 1; u <= 2; ++u)
            for (int omega = std::max(t, u + 1); omega <= 4; ++omega)
                for (int delta = omega; delta <= 5; ++delta) {
                    ConstraintSet cs;
                    cs.u = u;
                    cs.delta = delta;
                    cs.omega = omega;
                    const Rational per = Rational(turan_clique_closed_form(omega - u, delta, t - u), binomial(t, u));
                    for (const Graph& g : corpus()) {
                        if (!satisfies(g, cs)) continue;
                        const LocalReport r = localized_clique_sum(g, t, u);
                        REQUIRE(r.hypothesis_ok);
                        CHECK(Rational(count_cliques(g, t)) <= per * Rational(count_cliques(g, u)));
                    }
                }
}
