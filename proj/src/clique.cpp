#include "turan/clique.hpp"

#include <vector>

#include "kernels.hpp"

namespace turan {

namespace {

template <std::size_t W>
class MaxClique {
public:
    using Bits = BasicBitset<W>;

    explicit MaxClique(const Graph& g) : rows_(detail::narrow_rows<W>(g)) {}

    Bits run(Bits within) {
        Bits current;
        expand(current, within);
        return best_;
    }

private:
    // Greedy sequential colouring of p; order/bound receive vertices by
    // nondecreasing colour so the tail can be pruned first.
    void colour(Bits p, std::vector<int>& order, std::vector<int>& bound) const {
        order.clear();
        bound.clear();
        int k = 0;
        while (p.any()) {
            ++k;
            Bits q = p;
            while (q.any()) {
                const int v = q.pop_first();
                p.reset(v);
                q -= rows_[static_cast<std::size_t>(v)];
                order.push_back(v);
                bound.push_back(k);
            }
        }
    }

    void expand(Bits& current, Bits p) {
        std::vector<int> order;
        std::vector<int> bound;
        colour(p, order, bound);
        const int size = current.count();
        for (std::size_t i = order.size(); i-- > 0;) {
            if (size + bound[i] <= best_size_) return;
            const int v = order[i];
            current.set(v);
            const Bits next = p & rows_[static_cast<std::size_t>(v)];
            if (next.empty()) {
                if (size + 1 > best_size_) {
                    best_size_ = size + 1;
                    best_ = current;
                }
            } else {
                expand(current, next);
            }
            current.reset(v);
            p.reset(v);
        }
    }

    std::vector<Bits> rows_;
    Bits best_;
    int best_size_ = 0;
};

}  // namespace

VertexSet max_clique_within(const Graph& g, const VertexSet& within) {
    const VertexSet p = within & g.vertices();
    if (p.empty()) return {};
    return detail::with_width(g.order(), [&]<std::size_t W>() {
        MaxClique<W> search(g);
        return search.run(p.template narrow<W>()).template narrow<VertexSet::kWords>();
    });
}

}  // namespace turan
