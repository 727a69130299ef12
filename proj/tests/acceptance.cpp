// Acceptance run: the library's own suite at full level, then for every
// criterion an independent recomputation from the test oracles. A criterion
// passes when both agree, both pass, and it finishes inside its time limit.
// All comparisons are exact (integers or rationals); there is no tolerance.

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "turan/bounds.hpp"
#include "turan/constructions.hpp"
#include "turan/counting.hpp"
#include "turan/localization.hpp"
#include "turan/suite.hpp"

using namespace turan;

namespace {

using Clock = std::chrono::steady_clock;

// Runtime ceilings in seconds, criterion 1 first.
constexpr double kLimits[10] = {5, 120, 120, 600, 60, 30, 120, 600, 30, 60};

struct Verdict {
    bool pass = true;
    long checks = 0;
    std::string first_failure;

    void expect(bool ok, const std::function<std::string()>& what) {
        ++checks;
        if (!ok && pass) {
            pass = false;
            first_failure = what();
        }
    }
};

std::string str(const Count& c) { return c.str(); }
std::string str(const Rational& q) { return to_string(q); }

Graph complete_multipartite(const std::vector<int>& parts) {
    std::vector<int> part_of;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int k = 0; k < parts[i]; ++k) part_of.push_back(static_cast<int>(i));
    std::vector<Edge> edges;
    for (std::size_t j = 0; j < part_of.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (part_of[i] != part_of[j]) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph::from_edge_list(static_cast<int>(part_of.size()), edges);
}

// N(h, complete multipartite graph): sum over how many vertices each part
// contributes, each profile counted once on a small complete multipartite graph.
Count multipartite_copies(const Graph& h, const std::vector<int>& parts) {
    static std::map<std::pair<std::string, std::vector<int>>, Count> memo;
    const int k = h.order();
    std::string key;
    for (auto [a, b] : h.edges()) key += std::to_string(a) + "-" + std::to_string(b) + ",";
    key += "/" + std::to_string(k);
    Count total = 0;
    std::vector<int> pick(parts.size(), 0);
    std::function<void(std::size_t, int, Count)> rec = [&](std::size_t i, int left, Count weight) {
        if (i == parts.size()) {
            if (left != 0) return;
            std::vector<int> profile;
            for (int c : pick)
                if (c > 0) profile.push_back(c);
            std::sort(profile.begin(), profile.end());
            auto it = memo.find({key, profile});
            if (it == memo.end()) it = memo.emplace(std::make_pair(key, profile), oracle::copies(h, complete_multipartite(profile))).first;
            total += weight * it->second;
            return;
        }
        for (int c = 0; c <= std::min(left, parts[i]); ++c) {
            pick[i] = c;
            rec(i + 1, left - c, weight * oracle::binom(parts[i], c));
        }
        pick[i] = 0;
    };
    rec(0, k, 1);
    return total;
}

int dom_count(const Graph& h) {
    int d = 0;
    for (int v = 0; v < h.order(); ++v)
        if (h.degree(v) == h.order() - 1) ++d;
    return d;
}

// h minus its first u dominating vertices, relabelled in order.
Graph minus_dominating(const Graph& h, int u) {
    std::vector<int> keep;
    int removed = 0;
    for (int v = 0; v < h.order(); ++v) {
        if (removed < u && h.degree(v) == h.order() - 1) {
            ++removed;
            continue;
        }
        keep.push_back(v);
    }
    std::vector<Edge> edges;
    for (std::size_t j = 0; j < keep.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (h.adjacent(keep[i], keep[j])) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph::from_edge_list(static_cast<int>(keep.size()), edges);
}

std::vector<std::pair<std::string, Graph>> pattern_grid() {
    return {{"K3", complete_graph(3)},
            {"K4", complete_graph(4)},
            {"K2vI2", join(complete_graph(2), empty_graph(2))},
            {"K1vP3", join(complete_graph(1), path_graph(3))},
            {"K1vP4", join(complete_graph(1), path_graph(4))}};
}

Graph random_graph_oracle(int n, int num, int den, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (static_cast<int>(rng() % static_cast<unsigned>(den)) < num) edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

// Maxima of k^3 and k^4 over every labelled graph on n <= 7 vertices, split by
// clique number (for Zykov) and by maximum degree (for Chase).
struct LabelledMaxima {
    // zykov[n][omega][t], chase[n][delta][t]
    long zykov[8][5][5] = {};
    long chase[8][5][5] = {};
};

LabelledMaxima labelled_maxima() {
    LabelledMaxima m;
    for (int n = 1; n <= 7; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
            std::uint8_t row[7] = {};
            int bit = 0;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i, ++bit)
                    if ((mask >> bit) & 1U) {
                        row[i] |= static_cast<std::uint8_t>(1U << j);
                        row[j] |= static_cast<std::uint8_t>(1U << i);
                    }
            long k3 = 0;
            long k4 = 0;
            long k5 = 0;
            int maxdeg = 0;
            for (int i = 0; i < n; ++i) maxdeg = std::max(maxdeg, std::popcount(row[i]));
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    if (!((row[i] >> j) & 1U)) continue;
                    const unsigned c2 = row[i] & row[j] & ~((2U << j) - 1);
                    k3 += std::popcount(c2);
                    for (unsigned rest = c2; rest; rest &= rest - 1) {
                        const int k = std::countr_zero(rest);
                        const unsigned c3 = c2 & row[k] & ~((2U << k) - 1);
                        k4 += std::popcount(c3);
                        for (unsigned r4 = c3; r4; r4 &= r4 - 1) {
                            const int l = std::countr_zero(r4);
                            k5 += std::popcount(c3 & row[l] & ~((2U << l) - 1));
                        }
                    }
                }
            const int omega = mask == 0 ? 1 : (k3 == 0 ? 2 : (k4 == 0 ? 3 : (k5 == 0 ? 4 : 5)));
            const long kt[5] = {0, 0, 0, k3, k4};
            for (int w = 2; w <= 4; ++w)
                if (omega <= w)
                    for (int t = 3; t <= 4; ++t) m.zykov[n][w][t] = std::max(m.zykov[n][w][t], kt[t]);
            for (int d = 2; d <= 4; ++d)
                if (maxdeg <= d)
                    for (int t = 3; t <= 4; ++t) m.chase[n][d][t] = std::max(m.chase[n][d][t], kt[t]);
        }
    }
    return m;
}

Verdict oracle_1() {
    Verdict v;
    const CrossoverReport r = reproduce_examples();
    const Graph& a = r.colex_union;
    const Graph& b = r.turan_union;
    v.expect(a.order() == 42 && b.order() == 42, [] { return std::string("unions are not 42-vertex"); });
    v.expect(oracle::free_of(a, 1, 5, 4), [] { return std::string("6*CT_4(17) not {K_{1,6},K_5}-free (oracle)"); });
    v.expect(oracle::free_of(b, 1, 5, 4), [] { return std::string("7*T_4(6) not {K_{1,6},K_5}-free (oracle)"); });
    const Count a3 = oracle::cliques(a, 3);
    const Count b3 = oracle::cliques(b, 3);
    const Count a4 = oracle::cliques(a, 4);
    const Count b4 = oracle::cliques(b, 4);
    v.expect(a3 == r.k3_colex && b3 == r.k3_turan && a4 == r.k4_colex && b4 == r.k4_turan,
             [&] { return "subset enumeration disagrees: " + str(a3) + " " + str(b3) + " " + str(a4) + " " + str(b4); });
    v.expect(a3 > b3 && b4 > a4, [&] { return "no crossover: k3 " + str(a3) + " vs " + str(b3) + ", k4 " + str(a4) + " vs " + str(b4); });
    return v;
}

Verdict oracle_2(const LabelledMaxima& m) {
    Verdict v;
    for (int n = 1; n <= 7; ++n)
        for (int w = 2; w <= 4; ++w)
            for (int t = 3; t <= 4; ++t) {
                const Count want = oracle::multipartite_cliques(oracle::turan_parts(w, n), t);
                v.expect(Count(m.zykov[n][w][t]) == want, [&] {
                    return "n=" + std::to_string(n) + " omega=" + std::to_string(w) + " t=" + std::to_string(t) +
                           ": labelled max " + std::to_string(m.zykov[n][w][t]) + " vs k^t(T) " + str(want);
                });
            }
    return v;
}

Verdict oracle_3(const LabelledMaxima& m) {
    Verdict v;
    for (int n = 1; n <= 7; ++n)
        for (int d = 2; d <= 4; ++d)
            for (int t = 3; t <= 4; ++t) {
                const int a = n / (d + 1);
                const int b = n % (d + 1);
                const Count want = Count(a) * oracle::binom(d + 1, t) + oracle::binom(b, t);
                v.expect(Count(m.chase[n][d][t]) == want, [&] {
                    return "n=" + std::to_string(n) + " delta=" + std::to_string(d) + " t=" + std::to_string(t) +
                           ": labelled max " + std::to_string(m.chase[n][d][t]) + " vs " + str(want);
                });
            }
    return v;
}

// Depth-first over edge subsets of K_8 in a fixed order, keeping adjacency
// masks and the triangle count; a subtree is cut as soon as a K_4 appears.
Verdict oracle_4() {
    constexpr int n = 8;
    constexpr int max_m = 12;
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    std::vector<long> best(max_m + 1, -1);
    std::uint8_t row[n] = {};
    std::function<void(std::size_t, int, long)> dfs = [&](std::size_t from, int m, long tri) {
        best[static_cast<std::size_t>(m)] = std::max(best[static_cast<std::size_t>(m)], tri);
        if (m == max_m) return;
        for (std::size_t e = from; e < pairs.size(); ++e) {
            const auto [i, j] = pairs[e];
            const unsigned common = row[i] & row[j];
            bool k4 = false;
            for (unsigned r = common; r && !k4; r &= r - 1)
                if (row[std::countr_zero(r)] & common) k4 = true;
            if (k4) continue;
            row[i] |= static_cast<std::uint8_t>(1U << j);
            row[j] |= static_cast<std::uint8_t>(1U << i);
            dfs(e + 1, m + 1, tri + std::popcount(common));
            row[i] &= static_cast<std::uint8_t>(~(1U << j));
            row[j] &= static_cast<std::uint8_t>(~(1U << i));
        }
    };
    dfs(0, 0, 0);
    Verdict v;
    for (int m = 0; m <= max_m; ++m) {
        const Count colex = oracle::cliques(colex_turan(3, m), 3);
        v.expect(Count(best[static_cast<std::size_t>(m)]) == colex, [&] {
            return "m=" + std::to_string(m) + ": max k3 " + std::to_string(best[static_cast<std::size_t>(m)]) +
                   " vs colex " + str(colex);
        });
    }
    return v;
}

Verdict oracle_5() {
    Verdict v;
    for (const auto& [name, h] : pattern_grid()) {
        const PatternSpec spec(h);
        const int dom = dom_count(h);
        for (int u = 1; u <= dom; ++u) {
            const Graph down = minus_dominating(h, u);
            for (int omega = u + 1; omega <= 6; ++omega)
                for (int delta = omega; delta <= 14; ++delta) {
                    const int a = delta / (omega - u);
                    const int b = delta % (omega - u);
                    const auto parts = oracle::turan_parts(omega, a * omega + b);
                    const Rational lower(multipartite_copies(h, parts), oracle::multipartite_cliques(parts, u));
                    const Rational upper(multipartite_copies(down, oracle::turan_parts(omega - u, delta)), oracle::binom(dom, u));
                    const auto tag = [&, name = name] {
                        return name + " u=" + std::to_string(u) + " omega=" + std::to_string(omega) +
                               " delta=" + std::to_string(delta);
                    };
                    v.expect(lower <= upper, [&] { return tag() + ": lower " + str(lower) + " > upper " + str(upper); });
                    if (b == 0) v.expect(lower == upper, [&] { return tag() + ": divisible but " + str(lower) + " != " + str(upper); });
                    const BoundsReport r = bounds_report(spec, ParamTriple::make(u, delta, omega));
                    v.expect(r.lower == lower && r.upper == upper, [&] {
                        return tag() + ": library [" + str(r.lower) + ", " + str(r.upper) + "] vs oracle [" + str(lower) +
                               ", " + str(upper) + "]";
                    });
                }
        }
    }
    return v;
}

Verdict oracle_6() {
    Verdict v;
    for (int r = 1; r <= 6; ++r)
        for (int n = 0; n <= 14; ++n) {
            const Graph t = complete_multipartite(oracle::turan_parts(r, n));
            for (int s = 0; s <= 5; ++s) {
                const Count want = oracle::multipartite_cliques(oracle::turan_parts(r, n), s);
                const Count closed = turan_clique_closed_form(r, n, s);
                v.expect(closed == want, [&] {
                    return "r=" + std::to_string(r) + " n=" + std::to_string(n) + " s=" + std::to_string(s) + ": closed form " +
                           str(closed) + " vs " + str(want);
                });
                if (n <= 10) v.expect(oracle::cliques(t, s) == want, [&] { return std::string("part-product formula disagrees with subsets"); });
            }
        }
    return v;
}

Verdict oracle_7() {
    Verdict v;
    std::mt19937_64 rng(777);
    std::vector<Graph> corpus;
    for (int i = 0; i < 200; ++i) {
        const int n = static_cast<int>(rng() % 13);
        corpus.push_back(random_graph_oracle(n, 1 + static_cast<int>(rng() % 7), 8, rng));
    }
    for (const auto& [name, h] : pattern_grid()) {
        const int dom = dom_count(h);
        for (int u = 1; u <= dom; ++u) {
            const Graph down = minus_dominating(h, u);
            for (const Graph& g : corpus) {
                const Count lhs = oracle::binom(dom, u) * oracle::copies(h, g);
                Count rhs = 0;
                oracle::for_each_subset(g.order(), u, [&](const std::vector<int>& c) {
                    if (!oracle::is_clique(g, c)) return;
                    VertexSet nb;
                    for (int x : oracle::common_neighbours(g, c)) nb.set(x);
                    rhs += oracle::copies(down, induced_subgraph(g, nb));
                });
                v.expect(lhs == rhs, [&, name = name] {
                    return name + " u=" + std::to_string(u) + ": " + str(lhs) + " vs " + str(rhs);
                });
                if (g.order() % 3 == 0) {
                    const Count lib = binomial(dom, u) * count_subgraph_copies(PatternSpec(h), g);
                    v.expect(lib == lhs, [&, name = name] { return name + ": library count disagrees with subsets"; });
                }
            }
        }
    }
    return v;
}

// Σ x(J) over t-cliques J computed from the definitions.
Rational oracle_weighted_sum(const Graph& g, int t, int u) {
    Rational sum = 0;
    oracle::for_each_subset(g.order(), t, [&](const std::vector<int>& j) {
        if (!oracle::is_clique(g, j)) return;
        int omega_j = 0;
        int delta_j = 0;
        oracle::for_each_subset(t, u, [&](const std::vector<int>& pick) {
            std::vector<int> c;
            for (int i : pick) c.push_back(j[static_cast<std::size_t>(i)]);
            const auto nb = oracle::common_neighbours(g, c);
            VertexSet s;
            for (int x : nb) s.set(x);
            omega_j = std::max(omega_j, u + oracle::clique_number(induced_subgraph(g, s)));
            delta_j = std::max(delta_j, static_cast<int>(nb.size()));
        });
        sum += Rational(Count(1), oracle::multipartite_cliques(oracle::turan_parts(omega_j - u, delta_j), t - u));
    });
    return sum;
}

Verdict oracle_8() {
    Verdict v;
    std::vector<Graph> corpus;
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : oracle::classes(n)) corpus.push_back(g);
    std::mt19937_64 rng(888);
    for (int i = 0; i < 120; ++i) {
        const int n = 4 + static_cast<int>(rng() % 9);
        corpus.push_back(random_graph_oracle(n, 2 + static_cast<int>(rng() % 6), 8, rng));
    }
    for (int t = 3; t <= 4; ++t)
        for (int u = 1; u <= 2; ++u)
            for (const Graph& g : corpus) {
                const Rational sum = oracle_weighted_sum(g, t, u);
                const Rational bound(oracle::cliques(g, u), oracle::binom(t, u));
                v.expect(sum <= bound, [&] { return "K" + std::to_string(t) + " u=" + std::to_string(u) + ": sum " + str(sum) + " > " + str(bound); });
                const LocalReport r = localized_report(g, PatternSpec(complete_graph(t)), u, 1);
                v.expect(r.weighted_sum == sum && r.bound == bound, [&] {
                    return "library sum " + str(r.weighted_sum) + " vs oracle " + str(sum);
                });
            }
    // Equality family: Turan blocks T_w(a w) with w >= t, plus a K_u-free tail.
    const std::pair<int, int> configs[] = {{3, 1}, {3, 2}, {4, 1}, {4, 2}, {4, 3}};
    int built = 0;
    for (const auto [t, u] : configs)
        for (int k = 0; k < 10; ++k, ++built) {
            Graph g = empty_graph(0);
            const int blocks = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < blocks; ++i) {
                const int w = std::max(t, u + 1) + static_cast<int>(rng() % static_cast<unsigned>(6 - std::max(t, u + 1)));
                const int a = 1 + static_cast<int>(rng() % 2);
                g = disjoint_union(g, complete_multipartite(std::vector<int>(static_cast<std::size_t>(w), a)));
            }
            if (u == 2) g = disjoint_union(g, empty_graph(1 + static_cast<int>(rng() % 5)));
            if (u == 3) g = disjoint_union(g, complete_multipartite({1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3)}));
            const Rational sum = oracle_weighted_sum(g, t, u);
            const Rational bound(oracle::cliques(g, u), oracle::binom(t, u));
            v.expect(sum == bound, [&] { return "equality family: " + str(sum) + " vs " + str(bound) + " on " + describe(g); });
            v.expect(localized_report(g, PatternSpec(complete_graph(t)), u, 1).equality,
                     [&] { return "library misses equality on " + describe(g); });
        }
    v.expect(built == 50, [] { return std::string("equality family size"); });
    return v;
}

Verdict oracle_9() {
    Verdict v;
    for (int t = 2; t <= 4; ++t)
        for (int r = t; r <= 6; ++r)
            for (int n = t + 2; n <= 14; ++n)
                for (int u = 1; u <= 2; ++u) {
                    const Count top = oracle::multipartite_cliques(oracle::turan_parts(r, n - u), t);
                    const Count bottom = oracle::multipartite_cliques(oracle::turan_parts(r, n), t);
                    const Rational ratio(top, bottom);
                    Rational prod = 1;
                    for (int i = 0; i < u; ++i) prod *= Rational(n - i - t, n - i);
                    v.expect(ratio <= 1 && ratio >= prod, [&] {
                        return "K" + std::to_string(t) + " r=" + std::to_string(r) + " n=" + std::to_string(n) + " u=" +
                               std::to_string(u) + ": " + str(ratio) + " vs " + str(prod);
                    });
                    const RatioDiagnostic d = ratio_diagnostic(PatternSpec(complete_graph(t)), r, n, u);
                    v.expect(d.ratio == ratio && d.bound == prod, [&] { return std::string("library ratio diagnostic disagrees"); });
                }
    for (int t = 2; t <= 4; ++t)
        for (int r = t; r <= 6; ++r)
            for (int n = r + 1; n <= 14; ++n) {
                const auto parts = oracle::turan_parts(r, n);
                auto without = [&](std::size_t i) {
                    auto p = parts;
                    p.erase(p.begin() + static_cast<long>(i));
                    return oracle::multipartite_cliques(p, t - 1);
                };
                const Count through_large = without(0);
                const Count through_small = without(parts.size() - 1);
                const Count diff = oracle::multipartite_cliques(parts, t) - oracle::multipartite_cliques(oracle::turan_parts(r, n - 1), t);
                v.expect(through_small >= through_large && through_large == diff, [&] {
                    return "copies through: r=" + std::to_string(r) + " n=" + std::to_string(n);
                });
                const Graph g = turan_graph(r, n);
                const PatternSpec h(complete_graph(t));
                v.expect(copies_through(h, g, VertexSet{0}) == through_large && copies_through(h, g, VertexSet{n - 1}) == through_small,
                         [&] { return "library copies_through disagrees at r=" + std::to_string(r) + " n=" + std::to_string(n); });
            }
    return v;
}

Verdict oracle_10() {
    Verdict v;
    const auto series = ratio_trend(30);
    std::size_t si = 0;
    for (int t : {3, 4})
        for (int u : {1, 2})
            for (int omega = t; omega <= 6; ++omega, ++si) {
                for (int delta = omega; delta <= 30; ++delta) {
                    const int a = delta / (omega - u);
                    const int b = delta % (omega - u);
                    const auto parts = oracle::turan_parts(omega, a * omega + b);
                    const Rational lower(oracle::multipartite_cliques(parts, t), oracle::multipartite_cliques(parts, u));
                    const Rational upper(oracle::multipartite_cliques(oracle::turan_parts(omega - u, delta), t - u), oracle::binom(t, u));
                    const Rational ratio = lower / upper;
                    Rational prod = 1;
                    for (int i = 0; i < u; ++i) prod *= Rational(delta - i - (t - u), delta - i);
                    const auto tag = [&] {
                        return "K" + std::to_string(t) + " u=" + std::to_string(u) + " omega=" + std::to_string(omega) +
                               " delta=" + std::to_string(delta);
                    };
                    v.expect(ratio >= prod, [&] { return tag() + ": ratio " + str(ratio) + " < " + str(prod); });
                    bool found = false;
                    if (si < series.size())
                        for (const auto& p : series[si].points)
                            if (p.delta == delta) found = p.ratio == ratio && p.product == prod;
                    v.expect(found, [&] { return tag() + ": library trend point disagrees"; });
                }
            }
    v.expect(si == series.size(), [] { return std::string("trend series count"); });
    return v;
}

}  // namespace

int main() {
    const auto t0 = Clock::now();
    SuiteOptions opts;
    opts.level = SuiteLevel::full;
    const SuiteReport suite = verify_suite(opts);
    std::map<int, const CriterionResult*> by_id;
    for (const auto& c : suite.criteria) by_id[c.id] = &c;

    const auto l0 = Clock::now();
    const LabelledMaxima maxima = labelled_maxima();
    const double labelled_seconds = std::chrono::duration<double>(Clock::now() - l0).count();

    const std::function<Verdict()> oracles[10] = {
        oracle_1, [&] { return oracle_2(maxima); }, [&] { return oracle_3(maxima); }, oracle_4, oracle_5,
        oracle_6, oracle_7, oracle_8, oracle_9, oracle_10};

    bool all = true;
    for (int id = 1; id <= 10; ++id) {
        const auto s0 = Clock::now();
        const Verdict o = oracles[id - 1]();
        double oracle_seconds = std::chrono::duration<double>(Clock::now() - s0).count();
        if (id == 2 || id == 3) oracle_seconds += labelled_seconds / 2;
        const CriterionResult* c = by_id.count(id) ? by_id[id] : nullptr;
        const bool suite_ok = c && c->pass;
        const double lib_seconds = c ? c->seconds : 0;
        const bool in_time = lib_seconds <= kLimits[id - 1];
        const bool pass = suite_ok && o.pass && in_time;
        all = all && pass;
        std::ostringstream line;
        line << "criterion " << (id < 10 ? " " : "") << id << ": " << (pass ? "PASS" : "FAIL") << "  "
             << (c ? c->name : std::string("missing")) << "  [library " << (suite_ok ? "ok" : "FAILED") << ", "
             << (c ? c->checks : 0) << " checks, ";
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.2fs of %.0fs", lib_seconds, kLimits[id - 1]);
        line << buf << "; oracle " << (o.pass ? "ok" : "FAILED") << ", " << o.checks << " checks, ";
        std::snprintf(buf, sizeof buf, "%.2fs", oracle_seconds);
        line << buf << "]";
        if (c && !c->pass) line << "  library: " << c->detail;
        if (!o.pass) line << "  oracle: " << o.first_failure;
        if (!in_time) line << "  over the time limit";
        std::puts(line.str().c_str());
    }
    std::printf("acceptance: %s (%.1fs total)\n", all ? "all criteria pass" : "FAILURES",
                std::chrono::duration<double>(Clock::now() - t0).count());
    return all ? 0 : 1;
}
