#include <omp.h>

#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "turan/canonical.hpp"
#include "turan/constructions.hpp"
#include "turan/counting.hpp"
#include "turan/freeness.hpp"
#include "turan/graph6.hpp"
#include "turan/search.hpp"

using namespace turan;

namespace {

ConstraintSet make(int u, std::optional<int> delta, std::optional<int> omega) {
    ConstraintSet cs;
    cs.u = u;
    cs.delta = delta;
    cs.omega = omega;
    return cs;
}

// Largest count of h over labelled graphs with exactly m edges on n vertices
// passing the constraints.
Count labelled_max_by_edges(const Graph& h, int n, int m, int u, int delta, int omega) {
    Count best = -1;
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    oracle::for_each_subset(static_cast<int>(pairs.size()), m, [&](const std::vector<int>& pick) {
        std::vector<Edge> es;
        for (int i : pick) es.push_back(pairs[static_cast<std::size_t>(i)]);
        const Graph g = Graph::from_edge_list(n, es);
        if (oracle::free_of(g, u, delta, omega)) best = std::max(best, oracle::copies(h, g));
    });
    return best;
}

}  // namespace

TEST_CASE("class counts") {
    const std::vector<std::size_t> want{1, 1, 2, 4, 11, 34, 156, 1044, 12346};
    for (int n = 0; n <= 8; ++n) CHECK(enumerate_graphs(n).size() == want[static_cast<std::size_t>(n)]);
    CHECK_THROWS(enumerate_graphs(9));
    CHECK_THROWS(enumerate_graphs(10, EnumerateOptions{std::nullopt, true}));
}

TEST_CASE("canonical augmentation matches labelled dedup") {
    for (int n = 0; n <= 6; ++n) {
        std::set<std::uint64_t> want;
        for (const Graph& g : oracle::classes(n)) want.insert(oracle::brute_code(g));
        std::set<std::uint64_t> got;
        for (const Graph& g : enumerate_graphs(n)) got.insert(oracle::brute_code(g));
        CHECK(got == want);
        CHECK(got.size() == enumerate_graphs(n).size());
    }
}

TEST_CASE("pruned enumeration equals filtering") {
    for (int n = 1; n <= 7; ++n) {
        const auto all = enumerate_graphs(n);
        for (const ConstraintSet& cs : {make(1, 2, std::nullopt), make(1, 3, 3), make(2, 2, 3), make(1, std::nullopt, 2)}) {
            EnumerateOptions opts;
            opts.prune = cs;
            std::set<CanonicalCode> got;
            for (const Graph& g : enumerate_graphs(n, opts)) got.insert(canonical_code(g));
            std::set<CanonicalCode> want;
            for (const Graph& g : all)
                if (satisfies(g, cs)) want.insert(canonical_code(g));
            CHECK(got == want);
        }
    }
    // Max degree <= 2 on five vertices: unions of paths and cycles.
    EnumerateOptions opts;
    opts.prune = make(1, 2, std::nullopt);
    const auto small = enumerate_graphs(5, opts);
    // Partitions of 5 with two shapes (path, cycle) for parts of size >= 3.
    CHECK(small.size() == 11);
    for (const Graph& g : small) CHECK(g.max_degree() <= 2);
}

TEST_CASE("parallel enumeration equals the serial reference for any thread count") {
    const int saved = omp_get_max_threads();
    for (int threads : {1, 3, 6}) {
        omp_set_num_threads(threads);
        for (int n = 0; n <= 7; ++n) CHECK(enumerate_graphs(n) == serial::enumerate_graphs(n));
        EnumerateOptions opts;
        opts.prune = make(1, 3, 3);
        CHECK(enumerate_graphs(8, opts) == serial::enumerate_graphs(8, opts));
    }
    omp_set_num_threads(saved);
}

TEST_CASE("brute_extremal examples") {
    const PatternSpec k3(complete_graph(3));
    const SearchOutcome a = brute_extremal(5, k3, make(1, 2, 3));
    CHECK(a.objective == 1);
    const CanonicalCode k3k2 = canonical_code(disjoint_union(complete_graph(3), complete_graph(2)));
    bool found = false;
    for (const auto& s : a.argmax) found = found || canonical_code(graph6_decode(s)) == k3k2;
    CHECK(found);
    CHECK(a.argmax.size() > 1);
    CHECK(brute_extremal(6, k3, make(1, std::nullopt, 3)).objective == 8);
    CHECK(brute_extremal(6, k3, make(1, 2, std::nullopt)).objective == 2);
}

TEST_CASE("every optimum is admissible and attains the objective") {
    for (const Graph& hg : {complete_graph(3), path_graph(3), cycle_graph(4)})
        for (int n = 3; n <= 7; ++n)
            for (const ConstraintSet& cs : {make(1, 3, 3), make(2, 2, 4), make(1, 2, std::nullopt)}) {
                const PatternSpec h(hg);
                const SearchOutcome out = brute_extremal(n, h, cs);
                CHECK(out.verified);
                CHECK(out.feasible);
                std::set<CanonicalCode> codes;
                for (const auto& s : out.argmax) {
                    const Graph g = graph6_decode(s);
                    CHECK(g.order() == n);
                    CHECK(check_constraints(g, cs).passes());
                    CHECK(oracle::copies(hg, g) == out.objective);
                    codes.insert(canonical_code(g));
                }
                CHECK(codes.size() == out.argmax.size());
            }
}

TEST_CASE("brute_extremal_u examples") {
    const PatternSpec k3(complete_graph(3));
    const SearchOutcome m = brute_extremal_u(3, 2, k3, make(2, std::nullopt, 3));
    CHECK(m.objective == 1);
    CHECK(m.n_cap == 6);
    CHECK_FALSE(m.notes.empty());
    const SearchOutcome e = brute_extremal_u(5, 2, k3, make(2, 2, 3));
    CHECK(e.objective == labelled_max_by_edges(complete_graph(3), 8, 5, 2, 2, 3));
    CHECK(e.objective == 2);
    // The lower-bound family is a feasible point, so it cannot beat the optimum.
    CHECK(count_cliques(lb_family(ParamTriple::make(2, 2, 3), 5), 3) <= e.objective);
    for (int p = 1; p <= 7; ++p) {
        const SearchOutcome a = brute_extremal_u(p, 1, k3, make(1, 3, 3));
        const SearchOutcome b = brute_extremal(p, k3, make(1, 3, 3));
        CHECK(a.objective == b.objective);
        CHECK(a.argmax == b.argmax);
    }
}

TEST_CASE("search outcomes do not depend on the thread count") {
    const int saved = omp_get_max_threads();
    const PatternSpec k3(complete_graph(3));
    omp_set_num_threads(1);
    const SearchOutcome a = brute_extremal(7, k3, make(1, 3, 3));
    const SearchOutcome b = brute_extremal_u(6, 2, k3, make(2, 3, 3));
    omp_set_num_threads(4);
    CHECK(brute_extremal(7, k3, make(1, 3, 3)).argmax == a.argmax);
    CHECK(brute_extremal_u(6, 2, k3, make(2, 3, 3)).argmax == b.argmax);
    omp_set_num_threads(saved);
}

TEST_CASE("colex segments maximise triangles among K_4-free graphs with few edges") {
    const PatternSpec k3(complete_graph(3));
    for (int m = 1; m <= 6; ++m) {
        const Count brute = labelled_max_by_edges(complete_graph(3), std::min(2 * m, 7), m, 1, -1, 3);
        CHECK(brute == count_cliques(colex_turan(3, m), 3));
        CHECK(brute_extremal_u(m, 2, k3, make(2, std::nullopt, 3)).objective == brute);
    }
}

TEST_CASE("best_composition examples") {
    const PatternSpec k3(complete_graph(3));
    const Composition a = best_composition({complete_graph(3)}, k3, 9, 1);
    CHECK(a.multiplicity == std::vector<long>{3});
    CHECK(isomorphic(a.graph, multiple(complete_graph(3), 3)));
    const PatternSpec k4(complete_graph(4));
    const Composition b = best_composition({turan_graph(4, 6), complete_graph(1)}, k4, 42, 1);
    CHECK(b.multiplicity == std::vector<long>{7, 0});
    CHECK(b.value == 28);
    const Composition c = best_composition({colex_turan(4, 17, 5), turan_graph(4, 6), complete_graph(1)}, k3, 42, 1);
    CHECK(c.multiplicity == std::vector<long>{6, 0, 0});
    CHECK(c.value == 96);
    CHECK(c.ku == 42);
    CHECK_THROWS_AS(best_composition({complete_graph(3)}, k3, 10, 1), std::domain_error);
    CHECK_THROWS(best_composition({multiple(complete_graph(2), 2)}, k3, 4, 1));
}

TEST_CASE("best_composition equals exhaustive multiplicity search") {
    const PatternSpec k3(complete_graph(3));
    const std::vector<Graph> pieces{complete_graph(4), turan_graph(3, 5), complete_graph(3), complete_graph(1)};
    for (long p = 1; p <= 20; ++p) {
        Count best = -1;
        for (long a = 0; 4 * a <= p; ++a)
            for (long b = 0; 4 * a + 5 * b <= p; ++b)
                for (long c = 0; 4 * a + 5 * b + 3 * c <= p; ++c) {
                    const Count v = Count(a) * 4 + Count(b) * 4 + Count(c);
                    best = std::max(best, v);
                }
        CHECK(best_composition(pieces, k3, p, 1).value == best);
    }
}
