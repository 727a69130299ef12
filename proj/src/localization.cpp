#include "turan/localization.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "turan/bounds.hpp"
#include "turan/clique.hpp"
#include "turan/constructions.hpp"

namespace turan {

CliqueWeights clique_weights(const Graph& g, const VertexSet& c, int u) {
    if (u < 1 || c.count() != u) throw std::invalid_argument("c must have exactly u >= 1 vertices");
    if (!c.is_subset_of(g.vertices()) || !g.is_clique(c)) throw std::invalid_argument("c is not a clique of G");
    const VertexSet common = common_neighborhood(g, c);
    return {u + max_clique_within(g, common).count(), common.count()};
}

long default_omega0_param(const PatternSpec& h, int u) {
    const Graph& d = h.derived(u);
    if (d.size() * 2 == d.order() * (d.order() - 1)) return 1;
    const Count b = omega0_bound(d);
    static const Count cap = Count(1) << 40;
    return b > cap ? static_cast<long>(cap) : static_cast<long>(b);
}

namespace {

using DenomFn = std::function<Count(int, int)>;

// Shared by both entry points; copies must already be in canonical order.
LocalReport build_report(const Graph& g, std::vector<Copy> copies, int u, int dom, long omega0_param, const DenomFn& denom) {
    LocalReport rep;
    rep.u = u;
    rep.dom = dom;
    rep.omega0_param = omega0_param;

    const std::vector<VertexSet> cliques = enumerate_cliques(g, u);
    rep.ku = static_cast<long>(cliques.size());
    std::vector<CliqueWeights> weights(cliques.size());
    const long nc = static_cast<long>(cliques.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < nc; ++i) weights[static_cast<std::size_t>(i)] = clique_weights(g, cliques[static_cast<std::size_t>(i)], u);
    auto index_of = [&](const VertexSet& c) {
        return static_cast<std::size_t>(std::lower_bound(cliques.begin(), cliques.end(), c) - cliques.begin());
    };

    std::vector<bool> relevant(cliques.size(), false);
    rep.per_copy.resize(copies.size());
    for (std::size_t k = 0; k < copies.size(); ++k) {
        CopyWeights& cw = rep.per_copy[k];
        cw.copy = std::move(copies[k]);
        const std::vector<int> doms = cw.copy.dominating.to_vector();
        std::vector<bool> pick(doms.size(), false);
        std::fill(pick.begin(), pick.begin() + u, true);
        // prev_permutation from the front-loaded mask walks subsets in
        // lexicographic order of their element indices.
        cw.omega_J = -1;
        cw.delta_J = -1;
        do {
            VertexSet c;
            for (std::size_t i = 0; i < doms.size(); ++i)
                if (pick[i]) c.set(doms[i]);
            const std::size_t at = index_of(c);
            relevant[at] = true;
            const CliqueWeights& w = weights[at];
            if (w.omega_c > cw.omega_J) {
                cw.omega_J = w.omega_c;
                cw.omega_witness = c;
            }
            if (w.delta_c > cw.delta_J) {
                cw.delta_J = w.delta_c;
                cw.delta_witness = c;
            }
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }

    for (std::size_t i = 0; i < cliques.size(); ++i) {
        if (!relevant[i]) {
            rep.exempt_cliques.push_back(cliques[i]);
        } else if (weights[i].omega_c < omega0_param + u) {
            rep.hypothesis_failures.push_back(cliques[i]);
        }
    }
    rep.hypothesis_ok = rep.hypothesis_failures.empty();

    std::map<std::pair<int, int>, Count> cache;
    for (auto& cw : rep.per_copy) {
        const auto key = std::make_pair(cw.omega_J, cw.delta_J);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, denom(cw.omega_J - u, cw.delta_J)).first;
        cw.denominator = it->second;
        if (cw.denominator > 0) cw.x = Rational(Count(1), cw.denominator);
    }

    rep.bound = ratio(rep.ku, binomial(dom, u));
    for (const auto& cw : rep.per_copy)
        if (!cw.x) {
            rep.aborted = true;
            rep.diagnosis = "x(J) undefined for the copy on " + to_string(cw.copy.vertices) + " (omega(J) = " +
                            std::to_string(cw.omega_J) + ", Delta(J) = " + std::to_string(cw.delta_J) +
                            "): the omega(c) hypothesis fails for the true omega0 of H with u dominating vertices removed";
            return rep;
        }
    for (const auto& cw : rep.per_copy) rep.weighted_sum += *cw.x;
    rep.holds = rep.weighted_sum <= rep.bound;
    rep.equality = rep.weighted_sum == rep.bound;
    if (!rep.hypothesis_ok) rep.diagnosis = "outside the theorem: some relevant u-clique has omega(c) < omega0 + u";
    return rep;
}

}  // namespace

LocalReport localized_report(const Graph& g, const PatternSpec& h, int u, long omega0_param) {
    if (u < 1) throw std::invalid_argument("u must be at least 1");
    if (h.dom_count() < u)
        throw std::invalid_argument("H has " + std::to_string(h.dom_count()) + " dominating vertices, fewer than u");
    const PatternSpec derived(h.derived(u));
    auto denom = [&](int r, int n) -> Count {
        if (derived.order() == 0) return 1;
        return count_subgraph_copies(derived, turan_graph(r, n));
    };
    return build_report(g, enumerate_copies(h, g), u, h.dom_count(), omega0_param, denom);
}

LocalReport localized_clique_sum(const Graph& g, int t, int u) {
    if (u < 1 || t < u + 1) throw std::invalid_argument("need t >= u+1 >= 2");
    std::vector<Copy> copies;
    for (const VertexSet& s : enumerate_cliques(g, t)) {
        Copy c;
        c.map = s.to_vector();
        c.vertices = s;
        c.dominating = s;
        copies.push_back(std::move(c));
    }
    auto denom = [&](int r, int n) { return turan_clique_closed_form(r, n, t - u); };
    return build_report(g, std::move(copies), u, t, 1, denom);
}

}  // namespace turan
