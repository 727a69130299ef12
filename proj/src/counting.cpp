#include "turan/counting.hpp"

#include <algorithm>
#include <stdexcept>

#include "kernels.hpp"
#include "turan/canonical.hpp"

namespace turan {

using detail::u128;

namespace {

// Pattern vertex order: start at a maximum-degree vertex, then repeatedly take
// the vertex with the most already-placed neighbors (ties: higher degree,
// then lower index).
void plan_order(const Graph& h, std::vector<int>& order, std::vector<std::vector<int>>& back) {
    const int k = h.order();
    std::vector<bool> placed(static_cast<std::size_t>(k), false);
    std::vector<int> pos(static_cast<std::size_t>(k), -1);
    order.clear();
    back.clear();
    for (int step = 0; step < k; ++step) {
        int best = -1;
        int best_links = -1;
        int best_deg = -1;
        for (int v = 0; v < k; ++v) {
            if (placed[static_cast<std::size_t>(v)]) continue;
            int links = 0;
            h.neighbors(v).for_each([&](int w) {
                if (placed[static_cast<std::size_t>(w)]) ++links;
            });
            const int deg = h.degree(v);
            if (links > best_links || (links == best_links && deg > best_deg)) {
                best = v;
                best_links = links;
                best_deg = deg;
            }
        }
        placed[static_cast<std::size_t>(best)] = true;
        pos[static_cast<std::size_t>(best)] = step;
        order.push_back(best);
        std::vector<int> earlier;
        h.neighbors(best).for_each([&](int w) {
            if (pos[static_cast<std::size_t>(w)] >= 0 && w != best) earlier.push_back(pos[static_cast<std::size_t>(w)]);
        });
        std::sort(earlier.begin(), earlier.end());
        back.push_back(std::move(earlier));
    }
}

// Backtracking injective embedding search over bitset candidate sets.
template <std::size_t W>
class EmbeddingSearch {
public:
    using Bits = BasicBitset<W>;

    EmbeddingSearch(const PatternSpec& h, const Graph& g)
        : order_(h.search_order()),
          back_(h.back_neighbors()),
          k_(h.order()),
          rows_(detail::narrow_rows<W>(g)),
          all_(Bits::range(g.order())),
          img_(static_cast<std::size_t>(k_), -1) {}

    // Embeddings whose first pattern vertex maps to v; requires k >= 1.
    u128 count_rooted_at(int v) {
        if (k_ == 1) return 1;
        img_[0] = v;
        Bits used;
        used.set(v);
        return count_below(1, used);
    }

    // Calls visit(map) for each embedding rooted at v until it returns false.
    template <typename Visit>
    bool visit_rooted_at(int v, Visit&& visit) {
        img_[0] = v;
        Bits used;
        used.set(v);
        return visit_below(1, used, visit);
    }

private:
    Bits candidates(int pos, const Bits& used) const {
        Bits c = all_;
        for (int j : back_[static_cast<std::size_t>(pos)]) c &= rows_[static_cast<std::size_t>(img_[static_cast<std::size_t>(j)])];
        return c - used;
    }

    u128 count_below(int pos, Bits& used) {
        Bits c = candidates(pos, used);
        if (pos == k_ - 1) return static_cast<u128>(c.count());
        u128 sum = 0;
        while (c.any()) {
            const int v = c.pop_first();
            img_[static_cast<std::size_t>(pos)] = v;
            used.set(v);
            sum += count_below(pos + 1, used);
            used.reset(v);
        }
        return sum;
    }

    template <typename Visit>
    bool visit_below(int pos, Bits& used, Visit& visit) {
        if (pos == k_) {
            std::vector<int> map(static_cast<std::size_t>(k_));
            for (int p = 0; p < k_; ++p)
                map[static_cast<std::size_t>(order_[static_cast<std::size_t>(p)])] = img_[static_cast<std::size_t>(p)];
            return visit(std::move(map));
        }
        Bits c = candidates(pos, used);
        while (c.any()) {
            const int v = c.pop_first();
            img_[static_cast<std::size_t>(pos)] = v;
            used.set(v);
            const bool go_on = visit_below(pos + 1, used, visit);
            used.reset(v);
            if (!go_on) return false;
        }
        return true;
    }

    const std::vector<int>& order_;
    const std::vector<std::vector<int>>& back_;
    int k_;
    std::vector<Bits> rows_;
    Bits all_;
    std::vector<int> img_;
};

template <std::size_t W>
u128 cliques_below(const std::vector<BasicBitset<W>>& fwd, BasicBitset<W> cand, int remaining) {
    if (remaining == 1) return static_cast<u128>(cand.count());
    u128 sum = 0;
    while (cand.any()) {
        const int v = cand.pop_first();
        sum += cliques_below(fwd, cand & fwd[static_cast<std::size_t>(v)], remaining - 1);
    }
    return sum;
}

Count serial_cliques_below(const std::vector<VertexSet>& fwd, VertexSet cand, int remaining) {
    if (remaining == 1) return cand.count();
    Count sum = 0;
    while (cand.any()) {
        const int v = cand.pop_first();
        sum += serial_cliques_below(fwd, cand & fwd[static_cast<std::size_t>(v)], remaining - 1);
    }
    return sum;
}

Count serial_embeddings(const Graph& g, const std::vector<std::vector<int>>& back, std::vector<int>& img, int pos,
                        VertexSet& used) {
    const int k = static_cast<int>(back.size());
    if (pos == k) return 1;
    VertexSet c = g.vertices();
    for (int j : back[static_cast<std::size_t>(pos)]) c &= g.neighbors(img[static_cast<std::size_t>(j)]);
    c -= used;
    Count sum = 0;
    c.for_each([&](int v) {
        img[static_cast<std::size_t>(pos)] = v;
        used.set(v);
        sum += serial_embeddings(g, back, img, pos + 1, used);
        used.reset(v);
    });
    return sum;
}

void check_clique_size(int t) {
    if (t < 0) throw std::invalid_argument("clique size must be nonnegative");
}

}  // namespace

PatternSpec::PatternSpec(Graph h) : pattern_(std::move(h)) {
    dom_set_ = dominating_vertices(pattern_);
    plan_order(pattern_, order_, back_);
    aut_count_ = count_embeddings(*this, pattern_);

    const int dom = dom_count();
    const std::vector<int> doms = dom_set_.to_vector();
    derived_.reserve(static_cast<std::size_t>(dom) + 1);
    for (int u = 0; u <= dom; ++u) derived_.push_back(delete_dominating(pattern_, u));

    // H^{↓u} must not depend on which u dominating vertices go. Checked
    // exhaustively for patterns small enough to make that cheap.
    if (pattern_.order() <= 12) {
        for (int u = 1; u < dom; ++u) {
            const CanonicalCode ref = canonical_code(derived_[static_cast<std::size_t>(u)]);
            std::vector<bool> pick(static_cast<std::size_t>(dom), false);
            std::fill(pick.end() - u, pick.end(), true);
            do {
                VertexSet drop;
                for (int i = 0; i < dom; ++i)
                    if (pick[static_cast<std::size_t>(i)]) drop.set(doms[static_cast<std::size_t>(i)]);
                if (canonical_code(remove_vertices(pattern_, drop)) != ref)
                    throw std::logic_error("H with dominating vertices removed depends on the choice");
            } while (std::next_permutation(pick.begin(), pick.end()));
        }
    }
}

const Graph& PatternSpec::derived(int u) const {
    if (u < 0 || u > dom_count())
        throw std::invalid_argument("pattern has " + std::to_string(dom_count()) + " dominating vertices, asked for " +
                                    std::to_string(u));
    return derived_[static_cast<std::size_t>(u)];
}

const std::vector<std::vector<int>>& PatternSpec::automorphisms() const {
    std::call_once(auts_->once, [this] {
        const int k = order();
        if (k == 0) {
            auts_->maps.push_back({});
            return;
        }
        detail::with_width(k, [&]<std::size_t W>() {
            EmbeddingSearch<W> search(*this, pattern_);
            for (int v = 0; v < k; ++v)
                search.visit_rooted_at(v, [&](std::vector<int> m) {
                    auts_->maps.push_back(std::move(m));
                    return true;
                });
        });
    });
    return auts_->maps;
}

std::vector<Edge> Copy::edges(const Graph& pattern) const {
    std::vector<Edge> out;
    for (auto [a, b] : pattern.edges()) {
        int x = map[static_cast<std::size_t>(a)];
        int y = map[static_cast<std::size_t>(b)];
        if (x > y) std::swap(x, y);
        out.emplace_back(x, y);
    }
    std::sort(out.begin(), out.end());
    return out;
}

CountValue count_cliques(const Graph& g, int t) {
    check_clique_size(t);
    const int n = g.order();
    if (t == 0) return 1;
    if (t == 1) return n;
    if (t > n) return 0;
    if (!detail::fits_u128(binomial(n, t))) return serial::count_cliques(g, t);
    return detail::with_width(n, [&]<std::size_t W>() {
        const auto fwd = detail::forward_rows<W>(g);
        std::vector<u128> partial(static_cast<std::size_t>(n), 0);
#pragma omp parallel for schedule(dynamic)
        for (int v = 0; v < n; ++v)
            partial[static_cast<std::size_t>(v)] = cliques_below(fwd, fwd[static_cast<std::size_t>(v)], t - 1);
        Count total = 0;
        for (u128 p : partial) total += detail::to_count(p);
        return total;
    });
}

std::vector<VertexSet> enumerate_cliques(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("clique size must be at least 1");
    std::vector<VertexSet> out;
    std::vector<VertexSet> fwd(g.rows().begin(), g.rows().end());
    for (std::size_t v = 0; v < fwd.size(); ++v) fwd[v] -= VertexSet::range(static_cast<int>(v) + 1);
    VertexSet current;
    auto rec = [&](auto&& self, VertexSet cand, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        cand.for_each([&](int v) {
            current.set(v);
            self(self, cand & fwd[static_cast<std::size_t>(v)], remaining - 1);
            current.reset(v);
        });
    };
    rec(rec, g.vertices(), t);
    return out;
}

CountValue count_embeddings(const PatternSpec& h, const Graph& g) {
    const int k = h.order();
    const int n = g.order();
    if (k == 0) return 1;
    if (k > n) return 0;
    if (!detail::fits_u128(ipow(n, k - 1))) return serial::count_embeddings(h, g);
    return detail::with_width(n, [&]<std::size_t W>() {
        std::vector<u128> partial(static_cast<std::size_t>(n), 0);
#pragma omp parallel
        {
            EmbeddingSearch<W> search(h, g);
#pragma omp for schedule(dynamic)
            for (int v = 0; v < n; ++v) partial[static_cast<std::size_t>(v)] = search.count_rooted_at(v);
        }
        Count total = 0;
        for (u128 p : partial) total += detail::to_count(p);
        return total;
    });
}

CountValue count_subgraph_copies(const PatternSpec& h, const Graph& g) {
    return count_embeddings(h, g) / h.aut_count();
}

CountValue count_copies_rooted(const PatternSpec& h, const Graph& g, const VertexSet& c, int u) {
    if (u < 1) throw std::invalid_argument("rooted counts need u >= 1");
    if (u > h.dom_count()) throw std::invalid_argument("u exceeds dom(H)");
    if (c.count() != u) throw std::invalid_argument("root set size differs from u");
    if (!c.is_subset_of(g.vertices()) || !g.is_clique(c)) throw std::invalid_argument("root set is not a clique");
    const Graph local = induced_subgraph(g, common_neighborhood(g, c));
    return count_subgraph_copies(PatternSpec(h.derived(u)), local);
}

VertexSet dominating_vertices(const Graph& h) {
    VertexSet out;
    for (int v = 0; v < h.order(); ++v)
        if (h.degree(v) == h.order() - 1) out.set(v);
    return out;
}

Graph delete_dominating(const Graph& h, int u) {
    if (u < 0) throw std::invalid_argument("u must be nonnegative");
    const VertexSet dom = dominating_vertices(h);
    if (dom.count() < u)
        throw std::invalid_argument("graph has only " + std::to_string(dom.count()) + " dominating vertices");
    VertexSet drop;
    int v = dom.first();
    for (int i = 0; i < u; ++i, v = dom.next(v)) drop.set(v);
    return remove_vertices(h, drop);
}

CountValue turan_clique_closed_form(int r, int n, int s) {
    if (r < 1) throw std::invalid_argument("Turan graph needs at least one part");
    if (n < 0 || s < 0) throw std::invalid_argument("negative argument");
    const int a = n / r;
    const int b = n % r;
    Count total = 0;
    for (int i = 0; i <= b && i <= s; ++i)
        total += binomial(b, i) * binomial(r - b, s - i) * ipow(a + 1, i) * ipow(a, s - i);
    return total;
}

CountValue copies_through(const PatternSpec& h, const Graph& g, const VertexSet& s) {
    if (!s.is_subset_of(g.vertices())) throw std::invalid_argument("vertex set not contained in graph");
    if (s.empty()) return 0;
    return count_subgraph_copies(h, g) - count_subgraph_copies(h, remove_vertices(g, s));
}

CountValue automorphism_count(const Graph& h) { return PatternSpec(h).aut_count(); }

std::vector<Copy> enumerate_copies(const PatternSpec& h, const Graph& g) {
    const int k = h.order();
    const int n = g.order();
    std::vector<Copy> out;
    if (k == 0 || k > n) return out;
    const auto& auts = h.automorphisms();
    const VertexSet dom = h.dom_set();

    // Keep an embedding f only if it is lexicographically least among f∘σ.
    auto orbit_least = [&](const std::vector<int>& f) {
        for (const auto& sigma : auts)
            for (int i = 0; i < k; ++i) {
                const int other = f[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])];
                const int mine = f[static_cast<std::size_t>(i)];
                if (other < mine) return false;
                if (other > mine) break;
            }
        return true;
    };

    std::vector<std::vector<Copy>> per_root(static_cast<std::size_t>(n));
    detail::with_width(n, [&]<std::size_t W>() {
#pragma omp parallel
        {
            EmbeddingSearch<W> search(h, g);
#pragma omp for schedule(dynamic)
            for (int v = 0; v < n; ++v) {
                auto& bucket = per_root[static_cast<std::size_t>(v)];
                search.visit_rooted_at(v, [&](std::vector<int> f) {
                    if (!orbit_least(f)) return true;
                    Copy c;
                    for (int x : f) c.vertices.set(x);
                    dom.for_each([&](int d) { c.dominating.set(f[static_cast<std::size_t>(d)]); });
                    c.map = std::move(f);
                    bucket.push_back(std::move(c));
                    return true;
                });
            }
        }
    });
    for (auto& bucket : per_root)
        for (auto& c : bucket) out.push_back(std::move(c));
    std::sort(out.begin(), out.end(), [](const Copy& a, const Copy& b) {
        if (a.vertices != b.vertices) return a.vertices < b.vertices;
        return a.map < b.map;
    });
    return out;
}

std::optional<std::vector<int>> find_embedding(const PatternSpec& h, const Graph& g) {
    const int k = h.order();
    const int n = g.order();
    if (k == 0) return std::vector<int>{};
    if (k > n) return std::nullopt;
    std::optional<std::vector<int>> found;
    detail::with_width(n, [&]<std::size_t W>() {
        EmbeddingSearch<W> search(h, g);
        for (int v = 0; v < n && !found; ++v)
            search.visit_rooted_at(v, [&](std::vector<int> f) {
                found = std::move(f);
                return false;
            });
    });
    return found;
}

namespace serial {

CountValue count_cliques(const Graph& g, int t) {
    check_clique_size(t);
    const int n = g.order();
    if (t == 0) return 1;
    if (t == 1) return n;
    std::vector<VertexSet> fwd(g.rows().begin(), g.rows().end());
    for (std::size_t v = 0; v < fwd.size(); ++v) fwd[v] -= VertexSet::range(static_cast<int>(v) + 1);
    Count total = 0;
    for (int v = 0; v < n; ++v) total += serial_cliques_below(fwd, fwd[static_cast<std::size_t>(v)], t - 1);
    return total;
}

CountValue count_embeddings(const PatternSpec& h, const Graph& g) {
    std::vector<int> img(static_cast<std::size_t>(h.order()), -1);
    VertexSet used;
    return serial_embeddings(g, h.back_neighbors(), img, 0, used);
}

}  // namespace serial

}  // namespace turan
