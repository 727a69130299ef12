#include "turan/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace turan {

namespace {

using Cells = std::vector<std::vector<int>>;

void put_u16(std::string& out, unsigned v) {
    out.push_back(static_cast<char>((v >> 8) & 0xff));
    out.push_back(static_cast<char>(v & 0xff));
}

void put_u32(std::string& out, std::uint32_t v) {
    for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<char>((v >> s) & 0xff));
}

void put_color(std::string& out, int c) { put_u32(out, static_cast<std::uint32_t>(c)); }

// Coarsest equitable refinement of an ordered partition. Cells are split by
// the vector of neighbor counts into every current cell; sub-cells are ordered
// by that vector, which keeps the result invariant under relabelling.
void refine(const Graph& g, Cells& cells) {
    while (true) {
        const std::size_t k = cells.size();
        std::vector<VertexSet> sets(k);
        for (std::size_t i = 0; i < k; ++i)
            for (int v : cells[i]) sets[i].set(v);

        Cells next;
        next.reserve(k);
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::vector<std::pair<std::vector<int>, int>> sig;
            sig.reserve(cell.size());
            for (int v : cell) {
                std::vector<int> counts(k);
                for (std::size_t j = 0; j < k; ++j) counts[j] = (g.neighbors(v) & sets[j]).count();
                sig.emplace_back(std::move(counts), v);
            }
            std::sort(sig.begin(), sig.end());
            std::size_t start = 0;
            for (std::size_t i = 1; i <= sig.size(); ++i) {
                if (i == sig.size() || sig[i].first != sig[start].first) {
                    std::vector<int> part;
                    for (std::size_t t = start; t < i; ++t) part.push_back(sig[t].second);
                    next.push_back(std::move(part));
                    start = i;
                }
            }
        }
        const bool stable = next.size() == k;
        cells = std::move(next);
        if (stable) return;
    }
}

bool twins(const Graph& g, int x, int y) {
    VertexSet nx = g.neighbors(x);
    VertexSet ny = g.neighbors(y);
    nx.reset(y);
    ny.reset(x);
    return nx == ny;
}

class LeafSearch {
public:
    LeafSearch(const Graph& g, std::span<const int> colors) : g_(g), colors_(colors) {}

    std::string run(Cells cells) {
        search(std::move(cells));
        return best_;
    }

private:
    void search(Cells cells) {
        refine(g_, cells);
        auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
        if (target == cells.end()) {
            leaf(cells);
            return;
        }
        const std::size_t ti = static_cast<std::size_t>(target - cells.begin());
        // Twins are swapped by an automorphism fixing everything already
        // individualized, so one branch per twin class suffices.
        std::vector<int> reps;
        for (int v : cells[ti]) {
            bool covered = false;
            for (int r : reps)
                if (twins(g_, v, r)) {
                    covered = true;
                    break;
                }
            if (!covered) reps.push_back(v);
        }
        for (int v : reps) {
            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i != ti) {
                    child.push_back(cells[i]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                for (int w : cells[i])
                    if (w != v) rest.push_back(w);
                child.push_back(std::move(rest));
            }
            search(std::move(child));
        }
    }

    void leaf(const Cells& cells) {
        std::vector<int> order;
        order.reserve(cells.size());
        for (const auto& c : cells) order.push_back(c.front());
        const int n = static_cast<int>(order.size());
        std::string code;
        code.push_back('P');
        put_u16(code, static_cast<unsigned>(n));
        for (int v : order) put_color(code, colors_[static_cast<std::size_t>(v)]);
        unsigned char byte = 0;
        int used = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                byte = static_cast<unsigned char>((byte << 1) | (g_.adjacent(order[static_cast<std::size_t>(i)],
                                                                             order[static_cast<std::size_t>(j)])
                                                                     ? 1
                                                                     : 0));
                if (++used == 8) {
                    code.push_back(static_cast<char>(byte));
                    byte = 0;
                    used = 0;
                }
            }
        if (used) code.push_back(static_cast<char>(byte << (8 - used)));
        if (best_.empty() || code > best_) best_ = std::move(code);
    }

    const Graph& g_;
    std::span<const int> colors_;
    std::string best_;
};

std::string code_of(const Graph& g, std::span<const int> colors);

std::string code_of_components(const Graph& g, std::span<const int> colors, const std::vector<VertexSet>& comps) {
    std::vector<std::string> parts;
    parts.reserve(comps.size());
    for (const auto& comp : comps) {
        std::vector<int> sub;
        comp.for_each([&](int v) { sub.push_back(colors[static_cast<std::size_t>(v)]); });
        parts.push_back(code_of(induced_subgraph(g, comp), sub));
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    out.push_back('D');
    put_u16(out, static_cast<unsigned>(parts.size()));
    for (const auto& p : parts) {
        put_u32(out, static_cast<std::uint32_t>(p.size()));
        out += p;
    }
    return out;
}

std::string code_of(const Graph& g, std::span<const int> colors) {
    const int n = g.order();
    if (n == 0) return "E";
    if (n == 1) {
        std::string out = "V";
        put_color(out, colors[0]);
        return out;
    }
    auto comps = components(g);
    if (comps.size() > 1) return code_of_components(g, colors, comps);
    const Graph co = complement(g);
    if (components(co).size() > 1) return "C" + code_of(co, colors);

    std::vector<int> by_color(static_cast<std::size_t>(n));
    std::iota(by_color.begin(), by_color.end(), 0);
    std::stable_sort(by_color.begin(), by_color.end(), [&](int a, int b) {
        return colors[static_cast<std::size_t>(a)] < colors[static_cast<std::size_t>(b)];
    });
    Cells cells;
    for (int v : by_color) {
        if (cells.empty() || colors[static_cast<std::size_t>(cells.back().front())] != colors[static_cast<std::size_t>(v)])
            cells.emplace_back();
        cells.back().push_back(v);
    }
    return LeafSearch(g, colors).run(std::move(cells));
}

}  // namespace

std::string CanonicalCode::hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes_.size() * 2);
    for (unsigned char c : bytes_) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

CanonicalCode canonical_code(const Graph& g) {
    const std::vector<int> colors(static_cast<std::size_t>(g.order()), 0);
    return CanonicalCode(code_of(g, colors));
}

CanonicalCode canonical_code(const Graph& g, std::span<const int> colors) {
    if (static_cast<int>(colors.size()) != g.order()) throw std::invalid_argument("coloring size mismatch");
    return CanonicalCode(code_of(g, colors));
}

}  // namespace turan
