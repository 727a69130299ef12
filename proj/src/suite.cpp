#include "turan/suite.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "turan/bounds.hpp"
#include "turan/constructions.hpp"
#include "turan/counting.hpp"
#include "turan/freeness.hpp"
#include "turan/localization.hpp"
#include "turan/random.hpp"
#include "turan/search.hpp"

namespace turan {

CrossoverReport reproduce_examples() {
    CrossoverReport r;
    // Colex order with the degree cap Δ = 5; see the README on CT_4(17).
    r.colex_part = colex_turan(4, 17, 5);
    r.colex_union = multiple(r.colex_part, 6);
    r.turan_union = multiple(turan_graph(4, 6), 7);

    ConstraintSet cs;
    cs.u = 1;
    cs.delta = 5;
    cs.omega = 4;
    r.colex_free = check_constraints(r.colex_union, cs).passes();
    r.turan_free = check_constraints(r.turan_union, cs).passes();
    r.k3_colex = count_cliques(r.colex_union, 3);
    r.k3_turan = count_cliques(r.turan_union, 3);
    r.k4_colex = count_cliques(r.colex_union, 4);
    r.k4_turan = count_cliques(r.turan_union, 4);
    r.serial_agree = serial::count_cliques(r.colex_union, 3) == r.k3_colex &&
                     serial::count_cliques(r.turan_union, 3) == r.k3_turan &&
                     serial::count_cliques(r.colex_union, 4) == r.k4_colex &&
                     serial::count_cliques(r.turan_union, 4) == r.k4_turan;

    r.uncapped_part = colex_turan(4, 17);
    const Graph uncapped_union = multiple(r.uncapped_part, 6);
    r.uncapped_free = check_constraints(uncapped_union, cs).passes();
    r.k3_uncapped_union = count_cliques(uncapped_union, 3);
    r.k4_uncapped_union = count_cliques(uncapped_union, 4);

    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) r.failures.push_back(what);
    };
    expect(r.colex_union.order() == 42, "6*CT_4(17) has " + std::to_string(r.colex_union.order()) + " vertices, not 42");
    expect(r.turan_union.order() == 42, "7*T_4(6) has " + std::to_string(r.turan_union.order()) + " vertices, not 42");
    expect(r.colex_part.size() == 17, "CT_4(17) has " + std::to_string(r.colex_part.size()) + " edges");
    expect(r.colex_free, "6*CT_4(17) is not {K_{1,6},K_5}-free");
    expect(r.turan_free, "7*T_4(6) is not {K_{1,6},K_5}-free");
    expect(r.k3_colex > r.k3_turan, "k3: " + r.k3_colex.str() + " (colex) vs " + r.k3_turan.str() + " (turan)");
    expect(r.k4_turan > r.k4_colex, "k4: " + r.k4_turan.str() + " (turan) vs " + r.k4_colex.str() + " (colex)");
    expect(r.serial_agree, "parallel and serial clique counters disagree");
    return r;
}

Json to_json(const CrossoverReport& r) {
    return Json{{"colex_part", graph_json(r.colex_part)},
                {"colex_union", graph_json(r.colex_union)},
                {"turan_union", graph_json(r.turan_union)},
                {"constraints", "u=1 delta=5 omega=4"},
                {"colex_free", r.colex_free},
                {"turan_free", r.turan_free},
                {"k3_colex_union", count_json(r.k3_colex)},
                {"k3_turan_union", count_json(r.k3_turan)},
                {"k4_colex_union", count_json(r.k4_colex)},
                {"k4_turan_union", count_json(r.k4_turan)},
                {"serial_agree", r.serial_agree},
                {"uncapped_colex_part", graph_json(r.uncapped_part)},
                {"uncapped_union_free", r.uncapped_free},
                {"k3_uncapped_union", count_json(r.k3_uncapped_union)},
                {"k4_uncapped_union", count_json(r.k4_uncapped_union)},
                {"ok", r.ok()},
                {"failures", r.failures}};
}

namespace {

using TuranFn = std::function<Graph(int, int)>;

// Collects the first few failures of a criterion.
class Checker {
public:
    void check(bool ok, const std::function<std::string()>& what) {
        ++checks_;
        if (ok) return;
        ++failed_;
        if (messages_.size() < 3) messages_.push_back(what());
    }
    void note(std::string s) { notes_.push_back(std::move(s)); }

    void finish(CriterionResult& r) const {
        r.checks = checks_;
        r.pass = failed_ == 0 && checks_ > 0;
        std::ostringstream os;
        if (failed_) {
            os << failed_ << " of " << checks_ << " checks failed";
            for (const auto& m : messages_) os << "; " << m;
        } else {
            os << checks_ << " checks passed";
        }
        for (const auto& n : notes_) os << "; " << n;
        r.detail = os.str();
    }

private:
    long checks_ = 0;
    long failed_ = 0;
    std::vector<std::string> messages_;
    std::vector<std::string> notes_;
};

std::vector<std::pair<std::string, Graph>> pattern_grid() {
    return {{"K3", complete_graph(3)},
            {"K4", complete_graph(4)},
            {"K2vI2", join(complete_graph(2), empty_graph(2))},
            {"K1vP3", join(complete_graph(1), path_graph(3))},
            {"K1vP4", join(complete_graph(1), path_graph(4))}};
}

void crossover(Checker& ck) {
    const CrossoverReport r = reproduce_examples();
    ck.check(r.ok(), [&] {
        std::string s;
        for (const auto& f : r.failures) s += (s.empty() ? "" : ", ") + f;
        return s;
    });
    ck.note("k3 " + r.k3_colex.str() + " > " + r.k3_turan.str() + ", k4 " + r.k4_turan.str() + " > " + r.k4_colex.str());
}

void zykov(Checker& ck, const TuranFn& turan) {
    for (int t : {3, 4}) {
        const PatternSpec h(complete_graph(t));
        for (int omega : {2, 3, 4}) {
            ConstraintSet cs;
            cs.omega = omega;
            for (int n = 1; n <= 7; ++n) {
                const Count got = brute_extremal(n, h, cs).objective;
                const Count want = count_cliques(turan(omega, n), t);
                ck.check(got == want, [&] {
                    return "ex(" + std::to_string(n) + ",K" + std::to_string(t) + ",K" + std::to_string(omega + 1) +
                           ") = " + got.str() + " but T gives " + want.str();
                });
            }
        }
    }
}

void chase(Checker& ck) {
    for (int t : {3, 4}) {
        const PatternSpec h(complete_graph(t));
        for (int delta : {2, 3, 4}) {
            ConstraintSet cs;
            cs.u = 1;
            cs.delta = delta;
            for (int n = 1; n <= 7; ++n) {
                const int a = n / (delta + 1);
                const int b = n % (delta + 1);
                const std::pair<Graph, int> parts[] = {{complete_graph(delta + 1), a}, {complete_graph(b), 1}};
                const Count want = count_cliques(disjoint_union(parts), t);
                const Count got = brute_extremal(n, h, cs).objective;
                ck.check(got == want, [&] {
                    return "ex(" + std::to_string(n) + ",K" + std::to_string(t) + ",K1," + std::to_string(delta + 1) +
                           ") = " + got.str() + " vs " + want.str();
                });
            }
        }
    }
}

void frohmader(Checker& ck) {
    const PatternSpec h(complete_graph(3));
    ConstraintSet cs;
    cs.omega = 3;
    for (int m = 1; m <= 12; ++m) {
        const Count got = brute_extremal_u(m, 2, h, cs, 8).objective;
        const Count want = count_cliques(colex_turan(3, m), 3);
        ck.check(got == want, [&] { return "m=" + std::to_string(m) + ": " + got.str() + " vs colex " + want.str(); });
    }
}

void divisibility(Checker& ck) {
    struct Point {
        std::string name;
        int u, omega, delta;
    };
    for (const auto& [name, g] : pattern_grid()) {
        const PatternSpec h(g);
        std::vector<Point> pts;
        for (int u = 1; u <= h.dom_count(); ++u)
            for (int omega = u + 1; omega <= 6; ++omega)
                for (int delta = std::max(omega, 1); delta <= 14; ++delta) pts.push_back({name, u, omega, delta});
        std::vector<BoundsReport> reps(pts.size());
        const long np = static_cast<long>(pts.size());
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < np; ++i) {
            const auto& p = pts[static_cast<std::size_t>(i)];
            reps[static_cast<std::size_t>(i)] = bounds_report(h, ParamTriple::make(p.u, p.delta, p.omega));
        }
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const auto& r = reps[i];
            const auto where = [&] { return pts[i].name + " " + r.params.str(); };
            ck.check(r.lower <= r.upper, [&] { return where() + ": lower > upper"; });
            if (r.divisible) ck.check(r.lower == r.upper, [&] { return where() + ": divisible but not equal"; });
        }
    }
}

void closed_form(Checker& ck, const TuranFn& turan) {
    for (int r = 1; r <= 6; ++r)
        for (int n = 0; n <= 14; ++n) {
            const Graph g = turan(r, n);
            for (int s = 0; s <= 5; ++s) {
                const Count a = turan_clique_closed_form(r, n, s);
                const Count b = count_cliques(g, s);
                ck.check(a == b, [&] {
                    return "k^" + std::to_string(s) + "(T_" + std::to_string(r) + "(" + std::to_string(n) + ")): formula " +
                           a.str() + ", count " + b.str();
                });
            }
        }
}

void handshake(Checker& ck, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::string, PatternSpec>> hs;
    for (const auto& [name, g] : pattern_grid()) hs.emplace_back(name, PatternSpec(g));
    for (int k = 0; k < 200; ++k) {
        const int n = random_int(1, 12, rng);
        const int num = random_int(1, 3, rng);
        const Graph g = random_graph(n, static_cast<std::uint64_t>(num), 4, rng);
        for (const auto& [name, h] : hs)
            for (int u = 1; u <= h.dom_count(); ++u) {
                const Count lhs = binomial(h.dom_count(), u) * count_subgraph_copies(h, g);
                Count rhs = 0;
                for (const VertexSet& c : enumerate_cliques(g, u)) rhs += count_copies_rooted(h, g, c, u);
                ck.check(lhs == rhs, [&] {
                    return name + " u=" + std::to_string(u) + " graph#" + std::to_string(k) + ": " + lhs.str() +
                           " vs " + rhs.str();
                });
            }
    }
}

// T_{ω1}(a1 ω1) ∪ ... ∪ Z with Z K_u-free.
Graph equality_family(int t, int u, std::mt19937_64& rng) {
    std::vector<std::pair<Graph, int>> parts;
    const int k = random_int(1, 3, rng);
    for (int i = 0; i < k; ++i) {
        const int omega = random_int(std::max(t, u + 1), 6, rng);
        const int a = random_int(1, 3, rng);
        parts.emplace_back(turan_graph(omega, a * omega), 1);
    }
    if (u == 2) parts.emplace_back(empty_graph(random_int(1, 6, rng)), 1);
    if (u == 3) {
        // bipartite, hence triangle-free
        const int l = random_int(1, 4, rng);
        const int r = random_int(1, 4, rng);
        std::vector<Edge> edges;
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < r; ++j)
                if (rng() % 2) edges.emplace_back(i, l + j);
        parts.emplace_back(Graph::from_edge_list(l + r, edges), 1);
    }
    return disjoint_union(parts);
}

void localization(Checker& ck, std::uint64_t seed) {
    const PatternSpec k3(complete_graph(3));
    const PatternSpec k4(complete_graph(4));
    auto inequality = [&](const Graph& g, const std::string& tag) {
        for (const PatternSpec* h : {&k3, &k4})
            for (int u : {1, 2}) {
                const LocalReport r = localized_report(g, *h, u, 1);
                ck.check(!r.aborted && r.hypothesis_ok && r.holds, [&] {
                    return tag + " K" + std::to_string(h->order()) + " u=" + std::to_string(u) + ": sum " +
                           to_string(r.weighted_sum) + " bound " + to_string(r.bound);
                });
            }
    };
    for (int n = 1; n <= 7; ++n) {
        const auto graphs = enumerate_graphs(n);
        for (std::size_t i = 0; i < graphs.size(); ++i) inequality(graphs[i], "class " + std::to_string(n) + "/" + std::to_string(i));
    }
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (int k = 0; k < 500; ++k) {
        const int n = random_int(1, 16, rng);
        const int num = random_int(1, 7, rng);
        inequality(random_graph(n, static_cast<std::uint64_t>(num), 8, rng), "random#" + std::to_string(k));
    }
    const std::pair<int, int> configs[] = {{3, 1}, {3, 2}, {4, 1}, {4, 2}, {4, 3}};
    for (int k = 0; k < 50; ++k) {
        const auto [t, u] = configs[k % 5];
        const Graph g = equality_family(t, u, rng);
        const LocalReport r = localized_report(g, PatternSpec(complete_graph(t)), u, 1);
        const LocalReport c = localized_clique_sum(g, t, u);
        ck.check(!r.aborted && r.equality && c.equality && c.weighted_sum == r.weighted_sum, [&] {
            return "family#" + std::to_string(k) + " K" + std::to_string(t) + " u=" + std::to_string(u) + ": sum " +
                   to_string(r.weighted_sum) + " bound " + to_string(r.bound);
        });
    }
}

void finite_inequalities(Checker& ck, const TuranFn& turan) {
    for (int t = 1; t <= 4; ++t) {
        const PatternSpec h(complete_graph(t));
        for (int r = t; r <= 6; ++r)
            for (int n = t; n <= 14; ++n) {
                const Count full = count_subgraph_copies(h, turan(r, n));
                for (int u = 1; u <= 2 && u <= n; ++u) {
                    const Rational ratio_ = ratio(count_subgraph_copies(h, turan(r, n - u)), full);
                    const Rational bound = product_bound(t, n, u);
                    ck.check(ratio_ <= 1 && ratio_ >= bound, [&] {
                        return "K" + std::to_string(t) + " T_" + std::to_string(r) + "(" + std::to_string(n) +
                               ") u=" + std::to_string(u) + ": ratio " + to_string(ratio_) + " bound " + to_string(bound);
                    });
                }
                const Graph g = turan(r, n);
                VertexSet large;
                large.set(0);
                VertexSet small;
                small.set(n - 1);
                const Count through_large = copies_through(h, g, large);
                const Count through_small = copies_through(h, g, small);
                ck.check(through_small >= through_large, [&] {
                    return "copies through a small-part vertex < large-part vertex in T_" + std::to_string(r) + "(" +
                           std::to_string(n) + ")";
                });
                const Count drop = full - count_subgraph_copies(h, turan(r, n - 1));
                ck.check(through_large == drop, [&] {
                    return "large-part count " + through_large.str() + " != " + drop.str() + " in T_" +
                           std::to_string(r) + "(" + std::to_string(n) + ")";
                });
            }
    }
}

void trend(Checker& ck) {
    for (const TrendSeries& s : ratio_trend(30)) {
        ck.check(s.above_bound, [&] {
            return "K" + std::to_string(s.t) + " u=" + std::to_string(s.u) + " omega=" + std::to_string(s.omega) +
                   ": ratio below the product bound";
        });
        if (!s.block_minima_nondecreasing)
            ck.note("K" + std::to_string(s.t) + " u=" + std::to_string(s.u) + " omega=" + std::to_string(s.omega) +
                    ": block minima not monotone");
    }
}

}  // namespace

std::vector<TrendSeries> ratio_trend(int max_delta) {
    std::vector<TrendSeries> out;
    for (int t : {3, 4})
        for (int u : {1, 2})
            for (int omega = t; omega <= 6; ++omega) {
                TrendSeries s;
                s.t = t;
                s.u = u;
                s.omega = omega;
                out.push_back(std::move(s));
            }
    const long ns = static_cast<long>(out.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < ns; ++i) {
        TrendSeries& s = out[static_cast<std::size_t>(i)];
        const PatternSpec h(complete_graph(s.t));
        const int period = s.omega - s.u;
        std::optional<Rational> block_min;
        for (int delta = s.omega; delta <= max_delta; ++delta) {
            const ParamTriple p = ParamTriple::make(s.u, delta, s.omega);
            const BoundsReport r = bounds_report(h, p);
            TrendPoint pt;
            pt.delta = delta;
            pt.ratio = r.ratio;
            pt.neighborhood_bound = neighborhood_ratio_bound(h, p).value_or(Rational(0));
            pt.product = product_bound(s.t - s.u, delta, s.u);
            if (!(pt.ratio >= pt.neighborhood_bound && pt.neighborhood_bound >= pt.product)) s.above_bound = false;
            block_min = block_min ? std::min(*block_min, pt.ratio) : pt.ratio;
            if ((delta - s.omega + 1) % period == 0 || delta == max_delta) {
                s.block_minima.push_back(*block_min);
                block_min.reset();
            }
            s.points.push_back(std::move(pt));
        }
        for (std::size_t k = 1; k < s.block_minima.size(); ++k)
            if (s.block_minima[k] < s.block_minima[k - 1]) s.block_minima_nondecreasing = false;
    }
    return out;
}

Json to_json(const TrendSeries& s) {
    Json pts = Json::array();
    for (const auto& p : s.points)
        pts.push_back(Json{{"delta", p.delta},
                           {"ratio", rational_json(p.ratio)},
                           {"neighborhood_bound", rational_json(p.neighborhood_bound)},
                           {"product_bound", rational_json(p.product)}});
    Json mins = Json::array();
    for (const auto& m : s.block_minima) mins.push_back(rational_json(m));
    return Json{{"t", s.t},
                {"u", s.u},
                {"omega", s.omega},
                {"above_bound", s.above_bound},
                {"block_minima", mins},
                {"block_minima_nondecreasing", s.block_minima_nondecreasing},
                {"points", pts}};
}

SuiteReport verify_suite(const SuiteOptions& options) {
    const TuranFn turan = options.turan ? options.turan : TuranFn(turan_graph);
    struct Entry {
        int id;
        const char* name;
        bool quick;
        std::function<void(Checker&)> run;
    };
    const std::vector<Entry> entries = {
        {1, "crossover at 42 vertices", true, [&](Checker& c) { crossover(c); }},
        {2, "Zykov oracle", false, [&](Checker& c) { zykov(c, turan); }},
        {3, "Chase oracle", false, [&](Checker& c) { chase(c); }},
        {4, "colex Turan vs edge-count oracle", false, [&](Checker& c) { frohmader(c); }},
        {5, "divisibility equality", true, [&](Checker& c) { divisibility(c); }},
        {6, "clique closed form", true, [&](Checker& c) { closed_form(c, turan); }},
        {7, "handshake identity", false, [&](Checker& c) { handshake(c, options.seed); }},
        {8, "localized inequality", false, [&](Checker& c) { localization(c, options.seed); }},
        {9, "finite ratio inequalities", true, [&](Checker& c) { finite_inequalities(c, turan); }},
        {10, "ratio trend", false, [&](Checker& c) { trend(c); }},
    };
    SuiteReport rep;
    for (const auto& e : entries) {
        const bool wanted = options.only.empty()
                                ? (options.level == SuiteLevel::full || e.quick)
                                : std::find(options.only.begin(), options.only.end(), e.id) != options.only.end();
        if (!wanted) continue;
        CriterionResult r;
        r.id = e.id;
        r.name = e.name;
        const auto t0 = std::chrono::steady_clock::now();
        Checker ck;
        try {
            e.run(ck);
            ck.finish(r);
        } catch (const std::exception& ex) {
            ck.finish(r);
            r.pass = false;
            r.detail = std::string("exception: ") + ex.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        rep.criteria.push_back(std::move(r));
    }
    return rep;
}

Json to_json(const SuiteReport& r) {
    Json rows = Json::array();
    for (const auto& c : r.criteria)
        rows.push_back(Json{{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"checks", c.checks}, {"detail", c.detail}});
    return Json{{"pass", r.pass()}, {"criteria", rows}};
}

}  // namespace turan
