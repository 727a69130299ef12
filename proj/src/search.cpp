#include "turan/search.hpp"

#include <algorithm>
#include <iostream>
#include <stdexcept>
#include <unordered_set>

#include "turan/canonical.hpp"
#include "turan/graph6.hpp"

namespace turan {

namespace {

void check_order(int n, const EnumerateOptions& options) {
    if (n < 0) throw std::invalid_argument("negative order");
    const int cap = options.allow_nine ? kEnumerationHardCap : kEnumerationCap;
    if (n > cap)
        throw std::out_of_range("exhaustive enumeration is capped at n = " + std::to_string(cap) + ", asked for " +
                                std::to_string(n));
    if (n == kEnumerationHardCap) std::cerr << "warning: enumerating all graphs on 9 vertices (274668 classes)\n";
}

// The new vertex v = n-1 is accepted when it minimises (degree, code with v
// marked) over all vertices; marked codes coincide exactly on orbits.
bool canonical_child(const Graph& g) {
    const int n = g.order();
    const int v = n - 1;
    const int dv = g.degree(v);
    for (int w = 0; w < n; ++w)
        if (g.degree(w) < dv) return false;
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    colors[static_cast<std::size_t>(v)] = 1;
    const CanonicalCode mine = canonical_code(g, colors);
    colors[static_cast<std::size_t>(v)] = 0;
    for (int w = 0; w < v; ++w) {
        if (g.degree(w) != dv) continue;
        colors[static_cast<std::size_t>(w)] = 1;
        const bool smaller = canonical_code(g, colors) < mine;
        colors[static_cast<std::size_t>(w)] = 0;
        if (smaller) return false;
    }
    return true;
}

Graph extend(const Graph& parent, std::uint64_t mask) {
    const int n = parent.order();
    std::vector<VertexSet> rows(parent.rows().begin(), parent.rows().end());
    rows.emplace_back();
    for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1U) {
            rows[static_cast<std::size_t>(i)].set(n);
            rows.back().set(i);
        }
    return Graph::from_rows(std::move(rows));
}

std::vector<Graph> children(const Graph& parent, const std::optional<ConstraintSet>& prune) {
    const int n = parent.order();
    std::vector<Graph> out;
    std::unordered_set<CanonicalCode> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Graph child = extend(parent, mask);
        if (prune && !satisfies(child, *prune)) continue;
        if (!canonical_child(child)) continue;
        if (seen.insert(canonical_code(child)).second) out.push_back(std::move(child));
    }
    return out;
}

template <bool Parallel>
std::vector<Graph> enumerate_impl(int n, const EnumerateOptions& options) {
    check_order(n, options);
    std::vector<Graph> level{Graph()};
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<Graph>> per(level.size());
        const long count = static_cast<long>(level.size());
        if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic)
            for (long i = 0; i < count; ++i) per[static_cast<std::size_t>(i)] = children(level[static_cast<std::size_t>(i)], options.prune);
        } else {
            for (long i = 0; i < count; ++i) per[static_cast<std::size_t>(i)] = children(level[static_cast<std::size_t>(i)], options.prune);
        }
        std::vector<Graph> next;
        for (auto& v : per)
            for (auto& g : v) next.push_back(std::move(g));
        level = std::move(next);
    }
    return level;
}

std::vector<std::string> sorted_g6(const std::vector<const Graph*>& graphs) {
    std::vector<std::pair<CanonicalCode, std::string>> keyed;
    for (const Graph* g : graphs) keyed.emplace_back(canonical_code(*g), graph6_encode(*g));
    std::sort(keyed.begin(), keyed.end());
    std::vector<std::string> out;
    for (auto& [code, s] : keyed) out.push_back(std::move(s));
    return out;
}

// Maximises N(H, .) over candidates, keeping every optimum.
void maximise(const std::vector<Graph>& candidates, const PatternSpec& h, SearchOutcome& out) {
    const long count = static_cast<long>(candidates.size());
    std::vector<Count> values(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i)
        values[static_cast<std::size_t>(i)] = count_subgraph_copies(h, candidates[static_cast<std::size_t>(i)]);
    out.search_space_size = count;
    out.feasible = count > 0;
    if (!out.feasible) {
        out.verified = true;
        return;
    }
    out.objective = *std::max_element(values.begin(), values.end());
    std::vector<const Graph*> best;
    for (long i = 0; i < count; ++i)
        if (values[static_cast<std::size_t>(i)] == out.objective) best.push_back(&candidates[static_cast<std::size_t>(i)]);
    out.verified = true;
    for (const Graph* g : best) {
        if (serial::count_embeddings(h, *g) != out.objective * h.aut_count()) out.verified = false;
        if (!check_constraints(*g, out.constraints).passes()) out.verified = false;
        if (out.u > 1 && count_cliques(*g, out.u) != out.p) out.verified = false;
    }
    out.argmax = sorted_g6(best);
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, const EnumerateOptions& options) { return enumerate_impl<true>(n, options); }

namespace serial {
std::vector<Graph> enumerate_graphs(int n, const EnumerateOptions& options) { return enumerate_impl<false>(n, options); }
}  // namespace serial

SearchOutcome brute_extremal(int n, const PatternSpec& h, const ConstraintSet& cs, const EnumerateOptions& options) {
    SearchOutcome out;
    out.constraints = cs;
    out.u = 1;
    out.p = n;
    out.n_cap = n;
    EnumerateOptions opts = options;
    opts.prune = cs;
    maximise(enumerate_graphs(n, opts), h, out);
    return out;
}

SearchOutcome brute_extremal_u(long p, int u, const PatternSpec& h, const ConstraintSet& cs, int n_cap,
                               const EnumerateOptions& options) {
    if (u < 1) throw std::invalid_argument("u must be at least 1");
    if (p < 0) throw std::invalid_argument("p must be nonnegative");
    if (u == 1) {
        if (n_cap > 0 && n_cap != p) throw std::invalid_argument("for u = 1 the vertex count is p itself");
        if (p > kEnumerationHardCap) throw std::out_of_range("p exceeds the enumeration cap for u = 1");
        SearchOutcome out = brute_extremal(static_cast<int>(p), h, cs, options);
        out.notes.push_back("u = 1 fixes the vertex count, so this is ex(p, H, F)");
        return out;
    }
    if (n_cap <= 0) n_cap = static_cast<int>(std::min<long>(2 * p, kEnumerationCap));
    SearchOutcome out;
    out.constraints = cs;
    out.u = u;
    out.p = p;
    out.n_cap = n_cap;
    EnumerateOptions opts = options;
    opts.prune = cs;
    // Graphs with fewer vertices appear padded with isolated vertices.
    std::vector<Graph> all = enumerate_graphs(n_cap, opts);
    std::vector<int> keep(all.size(), 0);
    const long count = static_cast<long>(all.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i)
        keep[static_cast<std::size_t>(i)] = count_cliques(all[static_cast<std::size_t>(i)], u) == p ? 1 : 0;
    std::vector<Graph> candidates;
    for (long i = 0; i < count; ++i)
        if (keep[static_cast<std::size_t>(i)]) candidates.push_back(trim_isolated(all[static_cast<std::size_t>(i)]));
    maximise(candidates, h, out);
    out.notes.push_back("vertex cap " + std::to_string(n_cap) +
                        ": smaller graphs are covered by isolated-vertex padding, which changes neither k^u nor N(H, .) "
                        "when H contains K_u");
    out.notes.push_back("the cap is an engineering bound; ex_u ranges over graphs of any order");
    if (2 * p > n_cap && u == 2)
        out.notes.push_back("2p exceeds the cap, so graphs with p edges and more than " + std::to_string(n_cap) +
                            " non-isolated vertices are not searched");
    return out;
}

Composition best_composition(const std::vector<Graph>& pieces, const PatternSpec& h, long p, int u) {
    if (p < 0) throw std::invalid_argument("p must be nonnegative");
    if (u < 1) throw std::invalid_argument("u must be at least 1");
    struct Item {
        long w;
        Count v;
    };
    std::vector<Item> items;
    bool any_weight = false;
    for (const auto& c : pieces) {
        if (c.order() == 0 || components(c).size() != 1) throw std::invalid_argument("components must be connected");
        const Count w = count_cliques(c, u);
        const Count v = count_subgraph_copies(h, c);
        if (w == 0 && v > 0) throw std::invalid_argument("component with no u-clique but positive count is unbounded");
        if (w > p) {
            items.push_back({-1, v});
            continue;
        }
        items.push_back({static_cast<long>(w), v});
        if (w > 0) any_weight = true;
    }
    if (!any_weight && p > 0) throw std::domain_error("no component has a u-clique within budget");
    std::vector<std::optional<Count>> best(static_cast<std::size_t>(p) + 1);
    std::vector<int> choice(static_cast<std::size_t>(p) + 1, -1);
    best[0] = Count(0);
    for (long j = 1; j <= p; ++j)
        for (std::size_t i = 0; i < items.size(); ++i) {
            const long w = items[i].w;
            if (w <= 0 || w > j || !best[static_cast<std::size_t>(j - w)]) continue;
            Count cand = *best[static_cast<std::size_t>(j - w)] + items[i].v;
            if (!best[static_cast<std::size_t>(j)] || cand > *best[static_cast<std::size_t>(j)]) {
                best[static_cast<std::size_t>(j)] = cand;
                choice[static_cast<std::size_t>(j)] = static_cast<int>(i);
            }
        }
    if (!best[static_cast<std::size_t>(p)]) throw std::domain_error("k^u = " + std::to_string(p) + " is not reachable");
    Composition out;
    out.multiplicity.assign(pieces.size(), 0);
    for (long j = p; j > 0; j -= items[static_cast<std::size_t>(choice[static_cast<std::size_t>(j)])].w)
        ++out.multiplicity[static_cast<std::size_t>(choice[static_cast<std::size_t>(j)])];
    std::vector<std::pair<Graph, int>> parts;
    for (std::size_t i = 0; i < pieces.size(); ++i)
        if (out.multiplicity[i]) parts.emplace_back(pieces[i], static_cast<int>(out.multiplicity[i]));
    out.graph = disjoint_union(parts);
    out.value = *best[static_cast<std::size_t>(p)];
    out.ku = p;
    return out;
}

}  // namespace turan
