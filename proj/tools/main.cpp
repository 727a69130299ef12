#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <omp.h>

#include "CLI11.hpp"
#include "turan/bounds.hpp"
#include "turan/canonical.hpp"
#include "turan/constructions.hpp"
#include "turan/counting.hpp"
#include "turan/freeness.hpp"
#include "turan/graph6.hpp"
#include "turan/localization.hpp"
#include "turan/manifest.hpp"
#include "turan/report.hpp"
#include "turan/search.hpp"
#include "turan/suite.hpp"

namespace fs = std::filesystem;
using namespace turan;

namespace {

struct Globals {
    bool json = false;
    std::string out;
    int threads = 0;
    std::uint64_t seed = 20250101;
    std::string g6;
};

// Graph inputs are family expressions; --g6 FILE replaces them with every
// graph in the file.
std::vector<std::pair<std::string, Graph>> load_graphs(const Globals& g, const std::string& expr) {
    std::vector<std::pair<std::string, Graph>> out;
    if (!g.g6.empty()) {
        for (const auto& graph : read_graph6_file(g.g6)) out.emplace_back(graph6_encode(graph), graph);
        return out;
    }
    if (expr.empty()) throw std::invalid_argument("no graph given (use --graph or --g6)");
    out.emplace_back(expr, parse_family(expr));
    return out;
}

std::vector<int> parse_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        const int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad list item '" + item + "'");
        out.push_back(v);
    }
    return out;
}

VertexSet parse_vertices(const std::string& s, int n) {
    VertexSet c;
    for (int v : parse_list(s)) {
        if (v < 1 || v > n) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
        c.set(v - 1);
    }
    return c;
}

std::string frac(const Rational& q) {
    if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
    return to_string(q);
}

// Everything a subcommand produces: the JSON document plus a short text form.
struct Output {
    Json doc;
    std::string text;
    int status = 0;
};

Output cmd_construct(const std::string& family) {
    const Graph g = parse_family(family);
    Output o;
    o.doc = envelope("construct", Json{{"family", family}, {"graph", graph_json(g)}});
    o.text = "# " + family + " n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + "\n" +
             graph6_encode(g) + "\n";
    return o;
}

struct CountArgs {
    std::string pattern;
    std::string graph;
    int cliques = -1;
    std::string rooted;
};

Output cmd_count(const Globals& gl, const CountArgs& a) {
    Output o;
    Json rows = Json::array();
    std::ostringstream text;
    std::optional<PatternSpec> h;
    if (a.cliques < 0) {
        if (a.pattern.empty()) throw std::invalid_argument("count needs --pattern or --cliques");
        h.emplace(parse_family(a.pattern));
    }
    for (const auto& [name, g] : load_graphs(gl, a.graph)) {
        Json row{{"graph", name}, {"graph_info", graph_json(g)}};
        Count value;
        if (a.cliques >= 0) {
            value = count_cliques(g, a.cliques);
            row["pattern"] = "K" + std::to_string(a.cliques);
        } else if (!a.rooted.empty()) {
            const VertexSet c = parse_vertices(a.rooted, g.order());
            value = count_copies_rooted(*h, g, c, c.count());
            row["pattern"] = a.pattern;
            row["rooted"] = vertex_set_json(c);
        } else {
            value = count_subgraph_copies(*h, g);
            row["pattern"] = a.pattern;
            row["aut"] = count_json(h->aut_count());
        }
        row["count"] = count_json(value);
        text << name << ": " << value << "\n";
        rows.push_back(row);
    }
    o.doc = envelope("count", Json{{"results", rows}});
    o.text = text.str();
    return o;
}

ConstraintSet make_constraints(int u, int delta, int omega) {
    ConstraintSet cs;
    cs.u = u;
    if (delta >= 0) cs.delta = delta;
    if (omega >= 0) cs.omega = omega;
    return cs;
}

Output cmd_verify_free(const Globals& gl, const std::string& graph, const ConstraintSet& cs) {
    Output o;
    Json rows = Json::array();
    std::ostringstream text;
    for (const auto& [name, g] : load_graphs(gl, graph)) {
        const FreenessReport r = check_constraints(g, cs);
        Json row = to_json(r);
        row["graph"] = name;
        rows.push_back(row);
        text << name << ": " << (r.passes() ? "free" : "NOT free") << " (omega=" << r.clique_number
             << ", max degree=" << r.max_degree << ")";
        for (const auto& v : r.violations)
            text << " " << (v.kind == Violation::Kind::clique ? "clique " : "split ") << to_string(v.witness);
        text << "\n";
        if (!r.passes()) o.status = 1;
    }
    o.doc = envelope("verify-free", Json{{"constraints", to_json(cs)}, {"results", rows}});
    o.text = text.str();
    return o;
}

struct BoundsArgs {
    std::string h;
    int u = 1;
    int delta = -1;
    int omega = -1;
    bool grid = false;
    std::string ratio;
    std::string goodness;
    bool star = false;
};

Output cmd_bounds(const BoundsArgs& a) {
    const PatternSpec h(parse_family(a.h));
    Output o;
    Json body{{"H", a.h}, {"H_info", graph_json(h.pattern())}, {"omega0", to_json(omega0_info(h.pattern()))}};
    std::ostringstream text;
    text << "H = " << a.h << ", dom(H) = " << h.dom_count() << ", |Aut(H)| = " << h.aut_count() << "\n";
    std::vector<ParamTriple> points;
    if (a.grid) {
        for (int u = 1; u <= h.dom_count(); ++u)
            for (int omega = u + 1; omega <= 6; ++omega)
                for (int delta = omega; delta <= 14; ++delta) points.push_back(ParamTriple::make(u, delta, omega));
    } else if (a.delta >= 0 && a.omega >= 0) {
        points.push_back(ParamTriple::make(a.u, a.delta, a.omega));
    }
    Json reps = Json::array();
    for (const auto& p : points) {
        const BoundsReport r = bounds_report(h, p);
        reps.push_back(to_json(r));
        text << p.str() << "  lower " << frac(r.lower) << "  upper " << frac(r.upper)
             << (r.equal ? "  equal" : "") << (r.divisible ? "  (divisible)" : "") << "\n";
        if (!r.consistent()) o.status = 1;
    }
    body["reports"] = reps;
    if (!a.ratio.empty()) {
        const auto v = parse_list(a.ratio);
        if (v.size() != 3) throw std::invalid_argument("--ratio takes r,n,u");
        const RatioDiagnostic d = ratio_diagnostic(h, v[0], v[1], v[2]);
        body["ratio_diagnostic"] = to_json(d);
        body["ratio_diagnostic"]["r"] = v[0];
        body["ratio_diagnostic"]["n"] = v[1];
        body["ratio_diagnostic"]["u"] = v[2];
        text << "ratio " << frac(d.ratio) << " vs product bound " << frac(d.bound) << "\n";
    }
    if (!a.goodness.empty()) {
        const auto v = parse_list(a.goodness);
        if (v.size() != 2) throw std::invalid_argument("--goodness takes omega,n_max");
        const GoodnessResult gr = empirical_turan_goodness(h, v[0], v[1]);
        body["goodness"] = to_json(gr);
        text << "Turan goodness at omega=" << v[0] << ": " << (gr.pass ? "pass" : "fail") << " (" << gr.label << ")\n";
    }
    if (a.star) {
        if (a.delta < 0 || a.omega < 0) throw std::invalid_argument("--star needs --delta and --omega");
        const StarSandwich s = star_sandwich(h, a.u, a.delta, a.omega);
        body["star_sandwich"] = to_json(s);
        text << "star variant: " << frac(s.lower) << " <= c <= " << frac(s.upper) << " (" << s.label << ")\n";
    }
    o.doc = envelope("bounds", body);
    o.text = text.str();
    return o;
}

struct LocalizeArgs {
    std::string graph;
    std::string h;
    int u = 1;
    long omega0 = -1;
    int clique = -1;
    bool per_copy = false;
};

Output cmd_localize(const Globals& gl, const LocalizeArgs& a) {
    Output o;
    Json rows = Json::array();
    std::ostringstream text;
    std::optional<PatternSpec> h;
    if (a.clique < 0) {
        if (a.h.empty()) throw std::invalid_argument("localize needs --H or --clique");
        h.emplace(parse_family(a.h));
    }
    for (const auto& [name, g] : load_graphs(gl, a.graph)) {
        LocalReport r;
        if (a.clique >= 0) {
            r = localized_clique_sum(g, a.clique, a.u);
        } else {
            const long omega0 = a.omega0 >= 0 ? a.omega0 : default_omega0_param(*h, a.u);
            r = localized_report(g, *h, a.u, omega0);
        }
        Json row = to_json(r, a.per_copy);
        row["graph"] = name;
        rows.push_back(row);
        text << name << ": ";
        if (r.aborted) {
            text << "aborted: " << r.diagnosis << "\n";
        } else {
            text << "sum " << frac(r.weighted_sum) << (r.equality ? " = " : (r.holds ? " <= " : " > ")) << "bound "
                 << frac(r.bound) << (r.hypothesis_ok ? "" : " [hypothesis fails]") << "\n";
        }
        if (a.per_copy) {
            auto show = [](const VertexSet& s) {
                std::string out = "{";
                s.for_each([&](int v) { out += (out.size() > 1 ? "," : "") + std::to_string(v + 1); });
                return out + "}";
            };
            for (const CopyWeights& c : r.per_copy)
                text << "  copy " << show(c.copy.vertices) << " dom " << show(c.copy.dominating) << " omega(J) "
                     << c.omega_J << " delta(J) " << c.delta_J << " x " << (c.x ? frac(*c.x) : "undefined") << "\n";
        }
        if (r.aborted || (!r.holds && r.hypothesis_ok)) o.status = 1;
    }
    o.doc = envelope("localize", Json{{"H", a.clique >= 0 ? "K" + std::to_string(a.clique) : a.h}, {"results", rows}});
    o.text = text.str();
    return o;
}

struct SearchArgs {
    int n = -1;
    long p = -1;
    int u = 1;
    std::string h;
    int delta = -1;
    int omega = -1;
    int ncap = 0;
    std::string dump;
    int enumerate = -1;
    bool nine = false;
};

Output cmd_search(const SearchArgs& a) {
    Output o;
    EnumerateOptions opts;
    opts.allow_nine = a.nine;
    if (a.enumerate >= 0) {
        if (a.delta >= 0 || a.omega >= 0) opts.prune = make_constraints(a.u, a.delta, a.omega);
        const auto graphs = enumerate_graphs(a.enumerate, opts);
        std::vector<std::string> g6;
        for (const auto& g : graphs) g6.push_back(graph6_encode(g));
        if (!a.dump.empty()) write_graph6_file(a.dump, graphs);
        o.doc = envelope("enumerate", Json{{"n", a.enumerate}, {"classes", graphs.size()}});
        o.text = std::to_string(graphs.size()) + " classes on " + std::to_string(a.enumerate) + " vertices\n";
        return o;
    }
    if (a.h.empty()) throw std::invalid_argument("search needs --H");
    const PatternSpec h(parse_family(a.h));
    const ConstraintSet cs = make_constraints(a.u, a.delta, a.omega);
    SearchOutcome out;
    if (a.n >= 0) {
        out = brute_extremal(a.n, h, cs, opts);
    } else if (a.p >= 0) {
        out = brute_extremal_u(a.p, a.u, h, cs, a.ncap, opts);
    } else {
        throw std::invalid_argument("search needs --n or --p");
    }
    if (!a.dump.empty()) {
        std::vector<Graph> graphs;
        for (const auto& s : out.argmax) graphs.push_back(graph6_decode(s));
        write_graph6_file(a.dump, graphs);
    }
    o.doc = envelope("search", Json{{"H", a.h}, {"outcome", to_json(out)}});
    std::ostringstream text;
    text << "max N(H, G) = " << out.objective << " over " << out.search_space_size << " graphs; " << out.argmax.size()
         << " optimal class(es)" << (out.verified ? "" : " [VERIFY FAILED]") << "\n";
    for (const auto& s : out.argmax) text << "  " << s << "\n";
    for (const auto& n : out.notes) text << "note: " << n << "\n";
    o.text = text.str();
    if (!out.verified) o.status = 1;
    return o;
}

Output cmd_reproduce() {
    const CrossoverReport r = reproduce_examples();
    Output o;
    o.doc = envelope("reproduce-examples", to_json(r));
    std::ostringstream text;
    text << "6*CT_4(17): n=" << r.colex_union.order() << " free=" << r.colex_free << "  k3=" << r.k3_colex
         << "  k4=" << r.k4_colex << "\n";
    text << "7*T_4(6):   n=" << r.turan_union.order() << " free=" << r.turan_free << "  k3=" << r.k3_turan
         << "  k4=" << r.k4_turan << "\n";
    text << "plain colex segment CT_4(17) union: free=" << r.uncapped_free << " k3=" << r.k3_uncapped_union
         << " k4=" << r.k4_uncapped_union << "\n";
    for (const auto& f : r.failures) text << "FAIL: " << f << "\n";
    text << (r.ok() ? "crossover reproduced\n" : "crossover NOT reproduced\n");
    o.text = text.str();
    o.status = r.ok() ? 0 : 1;
    return o;
}

Output cmd_verify(const Globals& gl, const std::string& level, const std::string& only, int trend) {
    SuiteOptions opts;
    if (level == "quick") {
        opts.level = SuiteLevel::quick;
    } else if (level == "full") {
        opts.level = SuiteLevel::full;
    } else {
        throw std::invalid_argument("level must be quick or full");
    }
    opts.seed = gl.seed;
    if (!only.empty()) opts.only = parse_list(only);
    const SuiteReport r = verify_suite(opts);
    Output o;
    o.doc = envelope("verify", Json{{"level", level}, {"seed", std::to_string(gl.seed)}, {"report", to_json(r)}});
    std::ostringstream text;
    if (trend > 0) {
        Json rows = Json::array();
        for (const TrendSeries& s : ratio_trend(trend)) {
            rows.push_back(to_json(s));
            text << "trend K" << s.t << " u=" << s.u << " omega=" << s.omega << ": "
                 << (s.above_bound ? "above the product bound" : "BELOW the product bound") << ", block minima "
                 << (s.block_minima_nondecreasing ? "nondecreasing" : "not monotone") << "\n";
            if (!s.above_bound) o.status = 1;
        }
        o.doc["trend"] = rows;
    }
    for (const auto& c : r.criteria)
        text << "criterion " << std::setw(2) << c.id << "  " << (c.pass ? "PASS" : "FAIL") << "  " << std::left
             << std::setw(34) << c.name << std::right << " " << std::fixed << std::setprecision(2) << c.seconds << "s  "
             << c.detail << "\n";
    o.text = text.str();
    if (!r.pass()) o.status = 1;
    return o;
}

std::vector<std::string> collect_input_files(const Globals& gl) {
    std::vector<std::string> files;
    if (!gl.g6.empty()) files.push_back(gl.g6);
    return files;
}

int run(std::vector<std::string> args, bool allow_replay);

int cmd_replay(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    const RunManifest m = manifest_from_json(Json::parse(in));
    for (const auto& [file, hash] : m.input_hashes)
        if (sha256_file(file) != hash) {
            std::cerr << "input " << file << " changed since the manifest was written\n";
            return 2;
        }
    const fs::path tmp = fs::temp_directory_path() / ("turan-replay-" + sha256_hex(path + utc_timestamp()).substr(0, 12) + ".json");
    std::vector<std::string> args = m.args;
    auto it = std::find(args.begin(), args.end(), "--out");
    if (it == args.end() || it + 1 == args.end()) throw std::runtime_error("manifest has no --out argument");
    *(it + 1) = tmp.string();
    const int status = run(args, false);
    const std::string got = sha256_file(tmp);
    fs::remove(tmp);
    fs::remove(tmp.string() + ".manifest.json");
    if (got != m.output_sha256) {
        std::cout << "replay MISMATCH: " << got << " vs " << m.output_sha256 << "\n";
        return 1;
    }
    std::cout << "replay ok: " << m.output_path << " sha256 " << got << " (exit " << status << ")\n";
    return 0;
}

int run(std::vector<std::string> args, bool allow_replay) {
    const std::vector<std::string> original = args;
    CLI::App app{"Generalized Turan computations: constructions, exact counts, bounds, localization, search"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals gl;
    app.add_flag("--json", gl.json, "print JSON instead of text");
    app.add_option("--out", gl.out, "write the JSON report to FILE (plus FILE.manifest.json)");
    app.add_option("--threads", gl.threads, "OpenMP thread count")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", gl.seed, "seed for random corpora");
    app.add_option("--g6", gl.g6, "read input graphs from a graph6 file")->check(CLI::ExistingFile);

    std::string family;
    auto* construct = app.add_subcommand("construct", "build a named family and print graph6");
    construct->add_option("family", family, "family expression, e.g. '6*CT(4,17,5)'")->required();

    CountArgs ca;
    auto* count = app.add_subcommand("count", "count copies of a pattern");
    count->add_option("--pattern", ca.pattern, "pattern H");
    count->add_option("--graph", ca.graph, "host graph G");
    count->add_option("--cliques", ca.cliques, "count t-cliques instead");
    count->add_option("--rooted", ca.rooted, "comma list of clique vertices c (1-based)");

    std::string vf_graph;
    int vf_u = 1;
    int vf_delta = -1;
    int vf_omega = -1;
    auto* vfree = app.add_subcommand("verify-free", "check {K_u v I_(delta+1), K_(omega+1)}-freeness");
    vfree->add_option("--graph", vf_graph, "graph");
    vfree->add_option("--u", vf_u, "clique size u")->check(CLI::PositiveNumber);
    vfree->add_option("--delta", vf_delta, "max common neighbourhood");
    vfree->add_option("--omega", vf_omega, "max clique size");

    BoundsArgs ba;
    auto* bounds = app.add_subcommand("bounds", "exact sandwich on P_u(H, delta, omega)");
    bounds->add_option("--H", ba.h, "pattern H")->required();
    bounds->add_option("--u", ba.u, "u")->check(CLI::PositiveNumber);
    bounds->add_option("--delta", ba.delta, "delta");
    bounds->add_option("--omega", ba.omega, "omega");
    bounds->add_flag("--grid", ba.grid, "u <= dom(H), omega in u+1..6, delta in omega..14");
    bounds->add_option("--ratio", ba.ratio, "r,n,u: ratio diagnostic in T_r(n)");
    bounds->add_option("--goodness", ba.goodness, "omega,n_max: exhaustive Turan-goodness check");
    bounds->add_flag("--star", ba.star, "both sides of the star-forbidden sandwich");

    LocalizeArgs la;
    auto* localize = app.add_subcommand("localize", "localized weight inequality");
    localize->add_option("--graph", la.graph, "graph");
    localize->add_option("--H", la.h, "pattern H");
    localize->add_option("--clique", la.clique, "use H = K_t with the closed-form weights");
    localize->add_option("--u", la.u, "u")->check(CLI::PositiveNumber);
    localize->add_option("--omega0", la.omega0, "omega0 used in the hypothesis (default: 1 for cliques, else 300v^9)");
    localize->add_flag("--per-copy", la.per_copy, "include the per-copy table");

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "exhaustive extremal search");
    search->add_option("--n", sa.n, "vertex count (ex)");
    search->add_option("--p", sa.p, "number of u-cliques (ex_u)");
    search->add_option("--u", sa.u, "u")->check(CLI::PositiveNumber);
    search->add_option("--H", sa.h, "pattern H");
    search->add_option("--delta", sa.delta, "forbid K_u v I_(delta+1)");
    search->add_option("--omega", sa.omega, "forbid K_(omega+1)");
    search->add_option("--ncap", sa.ncap, "vertex cap for u >= 2");
    search->add_option("--dump", sa.dump, "write optimal graphs (or all enumerated graphs) as graph6");
    search->add_option("--enumerate", sa.enumerate, "only enumerate isomorphism classes on n vertices");
    search->add_flag("--allow-nine", sa.nine, "permit n = 9");

    auto* reproduce = app.add_subcommand("reproduce-examples", "the 42-vertex crossover");

    std::string level = "quick";
    std::string only;
    auto* verify = app.add_subcommand("verify", "acceptance suite");
    verify->add_option("--level", level, "quick or full");
    verify->add_option("--only", only, "comma list of criterion ids");
    int trend = 0;
    verify->add_option("--trend", trend, "also report lower/upper against the product bound for delta up to N");

    std::string manifest;
    auto* replay = app.add_subcommand("replay", "re-run a manifest and compare output hashes");
    replay->add_option("manifest", manifest, "manifest file")->required()->check(CLI::ExistingFile);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    if (gl.threads > 0) omp_set_num_threads(gl.threads);

    Output o;
    if (*replay) {
        if (!allow_replay) throw std::runtime_error("nested replay");
        return cmd_replay(manifest);
    } else if (*construct) {
        o = cmd_construct(family);
    } else if (*count) {
        o = cmd_count(gl, ca);
    } else if (*vfree) {
        o = cmd_verify_free(gl, vf_graph, make_constraints(vf_u, vf_delta, vf_omega));
    } else if (*bounds) {
        o = cmd_bounds(ba);
    } else if (*localize) {
        o = cmd_localize(gl, la);
    } else if (*search) {
        o = cmd_search(sa);
    } else if (*reproduce) {
        o = cmd_reproduce();
    } else if (*verify) {
        o = cmd_verify(gl, level, only, trend);
    }

    const std::string text = dump(o.doc);
    if (gl.json) {
        std::cout << text;
    } else {
        std::cout << o.text;
    }
    if (!gl.out.empty()) {
        {
            std::ofstream f(gl.out, std::ios::binary);
            if (!f) throw std::runtime_error("cannot write " + gl.out);
            f << text;
        }
        RunManifest m;
        m.command = app.get_subcommands().front()->get_name();
        m.args = original;
        m.code_version = TURAN_VERSION;
        m.timestamp = utc_timestamp();
        for (const auto& file : collect_input_files(gl)) m.input_hashes[file] = sha256_file(file);
        m.output_path = gl.out;
        m.output_sha256 = sha256_hex(text);
        std::ofstream mf(gl.out + ".manifest.json");
        mf << dump(to_json(m));
    }
    return o.status;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(std::vector<std::string>(argv + 1, argv + argc), true);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
