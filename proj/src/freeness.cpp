#include "turan/freeness.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include "turan/clique.hpp"
#include "turan/counting.hpp"

namespace turan {

std::string ConstraintSet::str() const {
    std::string s = "u=" + std::to_string(u);
    if (delta) s += " delta=" + std::to_string(*delta);
    if (omega) s += " omega=" + std::to_string(*omega);
    return s;
}

std::optional<std::vector<int>> contains_subgraph(const Graph& g, const Graph& f) {
    return find_embedding(PatternSpec(f), g);
}

namespace {

bool first_clique_from(const Graph& g, VertexSet& current, const VertexSet& cand, int remaining) {
    if (remaining == 0) return true;
    if (cand.count() < remaining) return false;
    for (int v = cand.first(); v >= 0; v = cand.next(v)) {
        current.set(v);
        VertexSet next = cand & g.neighbors(v);
        next -= VertexSet::range(v + 1);
        if (first_clique_from(g, current, next, remaining - 1)) return true;
        current.reset(v);
    }
    return false;
}

// Walks the cliques of size <= depth containing v as least vertex, recording
// max |N(c)| per size and the first c (in lexicographic order) of size depth
// with |N(c)| > limit.
struct NeighborhoodScan {
    const Graph& g;
    int depth;
    std::optional<int> limit;
    std::vector<int> best;
    std::optional<VertexSet> first_bad;

    void walk(VertexSet& c, const VertexSet& common, int size) {
        const int nc = common.count();
        best[static_cast<std::size_t>(size - 1)] = std::max(best[static_cast<std::size_t>(size - 1)], nc);
        if (size == depth) {
            if (limit && nc > *limit && !first_bad) first_bad = c;
            return;
        }
        VertexSet ext = common;
        int last = -1;
        c.for_each([&](int x) { last = x; });
        ext -= VertexSet::range(last + 1);
        ext.for_each([&](int w) {
            c.set(w);
            walk(c, common & g.neighbors(w), size + 1);
            c.reset(w);
        });
    }
};

}  // namespace

std::optional<VertexSet> first_clique(const Graph& g, int t) {
    if (t < 0) throw std::invalid_argument("negative clique size");
    VertexSet current;
    if (first_clique_from(g, current, g.vertices(), t)) return current;
    return std::nullopt;
}

namespace {

// True if some clique of size `remaining` more, extending c inside cand, has
// more than limit common neighbours.
bool split_violation(const Graph& g, const VertexSet& cand, const VertexSet& common, int remaining, int limit) {
    if (remaining == 0) return common.count() > limit;
    if (common.count() <= limit) return false;
    for (int v = cand.first(); v >= 0; v = cand.next(v)) {
        VertexSet next = cand & g.neighbors(v);
        next -= VertexSet::range(v + 1);
        if (split_violation(g, next, common & g.neighbors(v), remaining - 1, limit)) return true;
    }
    return false;
}

}  // namespace

bool satisfies(const Graph& g, const ConstraintSet& cs) {
    if (cs.u < 1) throw std::invalid_argument("u must be at least 1");
    if (cs.delta) {
        if (cs.u == 1) {
            if (g.max_degree() > *cs.delta) return false;
        } else if (split_violation(g, g.vertices(), g.vertices(), cs.u, *cs.delta)) {
            return false;
        }
    }
    if (cs.omega && first_clique(g, *cs.omega + 1)) return false;
    return true;
}

FreenessReport check_constraints(const Graph& g, const ConstraintSet& cs) {
    if (cs.u < 1) throw std::invalid_argument("u must be at least 1");
    FreenessReport rep;
    rep.constraints = cs;
    rep.clique_number = clique_number(g);
    rep.max_degree = g.max_degree();

    if (cs.omega && rep.clique_number > *cs.omega) {
        Violation v;
        v.kind = Violation::Kind::clique;
        v.clique = *first_clique(g, *cs.omega + 1);
        v.witness = v.clique;
        rep.violations.push_back(v);
    }

    const int n = g.order();
    const int depth = cs.u;
    std::vector<std::vector<int>> best(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(depth), -1));
    std::vector<std::optional<VertexSet>> bad(static_cast<std::size_t>(n));
    std::atomic<int> first_bad_root{n};
#pragma omp parallel for schedule(dynamic)
    for (int v = 0; v < n; ++v) {
        // A violation rooted at an earlier vertex already wins; the maxima
        // still need every root, so only the witness search is skipped.
        const bool want_witness = v < first_bad_root.load(std::memory_order_relaxed);
        NeighborhoodScan scan{g, depth, want_witness ? cs.delta : std::nullopt,
                              std::vector<int>(static_cast<std::size_t>(depth), -1), std::nullopt};
        VertexSet c;
        c.set(v);
        scan.walk(c, g.neighbors(v), 1);
        best[static_cast<std::size_t>(v)] = scan.best;
        if (scan.first_bad) {
            bad[static_cast<std::size_t>(v)] = scan.first_bad;
            int cur = first_bad_root.load();
            while (v < cur && !first_bad_root.compare_exchange_weak(cur, v)) {
            }
        }
    }
    rep.max_common_neighborhood_by_u.assign(static_cast<std::size_t>(depth), -1);
    for (const auto& b : best)
        for (int i = 0; i < depth; ++i)
            rep.max_common_neighborhood_by_u[static_cast<std::size_t>(i)] =
                std::max(rep.max_common_neighborhood_by_u[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]);

    for (const auto& b : bad)
        if (b) {
            Violation v;
            v.kind = Violation::Kind::split;
            v.clique = *b;
            v.witness = *b;
            VertexSet common = common_neighborhood(g, *b);
            for (int i = 0; i <= *cs.delta; ++i) v.witness.set(common.pop_first());
            rep.violations.push_back(v);
            break;
        }
    return rep;
}

}  // namespace turan
