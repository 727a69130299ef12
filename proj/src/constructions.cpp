#include "turan/constructions.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

#include "turan/counting.hpp"
#include "turan/graph6.hpp"

namespace turan {

ParamTriple ParamTriple::make(int u, int delta, int omega) {
    if (u < 1) throw std::invalid_argument("u must be at least 1");
    if (omega < u + 1) throw std::invalid_argument("need omega >= u+1, got " + std::to_string(omega));
    if (delta < 0) throw std::invalid_argument("delta must be nonnegative");
    ParamTriple p;
    p.u = u;
    p.delta = delta;
    p.omega = omega;
    p.a = delta / (omega - u);
    p.b = delta % (omega - u);
    return p;
}

std::string ParamTriple::str() const {
    return "(u=" + std::to_string(u) + ", delta=" + std::to_string(delta) + ", omega=" + std::to_string(omega) + ")";
}

TuranSpec TuranSpec::make(int r, int n) {
    if (r < 1) throw std::invalid_argument("Turan graph needs r >= 1");
    if (n < 0) throw std::invalid_argument("negative vertex count");
    TuranSpec s;
    s.r = r;
    s.n = n;
    for (int i = 0; i < r; ++i) s.part_sizes.push_back(n / r + (i < n % r ? 1 : 0));
    return s;
}

std::vector<int> TuranSpec::part_of() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < r; ++i) out.insert(out.end(), static_cast<std::size_t>(part_sizes[static_cast<std::size_t>(i)]), i);
    return out;
}

Graph turan_graph(int r, int n) {
    const auto part = TuranSpec::make(r, n).part_of();
    if (n > kMaxVertices) throw std::out_of_range("T_r(n) exceeds the vertex cap");
    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (part[static_cast<std::size_t>(i)] != part[static_cast<std::size_t>(j)]) rows[static_cast<std::size_t>(i)].set(j);
    return Graph::from_rows(std::move(rows));
}

Graph colex_turan(int r, long m, std::optional<int> max_degree) {
    if (r < 2) throw std::invalid_argument("colex Turan graph needs r >= 2");
    if (m < 0) throw std::invalid_argument("negative edge count");
    if (max_degree && *max_degree < 1 && m > 0) throw std::invalid_argument("degree cap admits no edges");
    std::vector<Edge> edges;
    std::vector<int> deg;
    int top = 0;
    for (int j = 1; static_cast<long>(edges.size()) < m; ++j) {
        if (j >= kMaxVertices) throw std::out_of_range("colex Turan graph exceeds the vertex cap");
        deg.resize(static_cast<std::size_t>(j) + 1, 0);
        for (int i = 0; i < j && static_cast<long>(edges.size()) < m; ++i) {
            if (i % r == j % r) continue;
            if (max_degree && (deg[static_cast<std::size_t>(i)] >= *max_degree || deg[static_cast<std::size_t>(j)] >= *max_degree))
                continue;
            edges.emplace_back(i, j);
            ++deg[static_cast<std::size_t>(i)];
            ++deg[static_cast<std::size_t>(j)];
            top = j;
        }
    }
    return trim_isolated(Graph::from_edge_list(m == 0 ? 0 : top + 1, edges));
}

Graph complete_split(int u, int s) {
    if (u < 0 || s < 0) throw std::invalid_argument("negative split graph size");
    return join(complete_graph(u), empty_graph(s));
}

Graph lower_bound_graph(const ParamTriple& params) {
    return turan_graph(params.omega, params.lower_bound_order());
}

LbFamily lb_family_parts(const ParamTriple& params, long p) {
    if (p < 1) throw std::invalid_argument("p must be at least 1");
    LbFamily f;
    f.L = lower_bound_graph(params);
    f.ku_of_L = count_cliques(f.L, params.u);
    if (f.ku_of_L > 0) {
        f.q = static_cast<long>(Count(p) / f.ku_of_L);
        f.r = static_cast<long>(Count(p) - Count(f.q) * f.ku_of_L);
    } else {
        f.r = p;
    }
    const long total = f.q * f.L.order() + f.r * params.u;
    if (total > kMaxVertices)
        throw std::out_of_range("qL + rK_u needs " + std::to_string(total) + " vertices, cap is " +
                                std::to_string(kMaxVertices));
    const std::pair<Graph, int> parts[] = {{f.L, static_cast<int>(f.q)}, {complete_graph(params.u), static_cast<int>(f.r)}};
    f.graph = disjoint_union(parts);
    return f;
}

Graph join_with_clique(const Graph& j, int u) {
    if (u < 0) throw std::invalid_argument("negative clique size");
    return join(complete_graph(u), j);
}

Graph candidate_graph(int u, int delta, int omega, long size) {
    if (u != 1 && u != 2) throw std::invalid_argument("candidates exist for u = 1 and u = 2 only");
    if (omega < u + 1) throw std::invalid_argument("need omega >= u+1");
    if (delta < 1 || delta % (omega - u) != 0) throw std::invalid_argument("delta must be a positive multiple of omega-u");
    if (size < 0) throw std::invalid_argument("negative size");
    const Graph block = turan_graph(omega, delta * omega / (omega - u));
    const long unit = u == 1 ? block.order() : block.size();
    const long a = size / unit;
    const long b = size % unit;
    const Graph tail = u == 1 ? turan_graph(omega, static_cast<int>(b)) : colex_turan(omega, b);
    if (a * block.order() + tail.order() > kMaxVertices) throw std::out_of_range("candidate exceeds the vertex cap");
    const std::pair<Graph, int> parts[] = {{block, static_cast<int>(a)}, {tail, 1}};
    return disjoint_union(parts);
}

namespace {

class FamilyParser {
public:
    explicit FamilyParser(std::string_view s) : s_(s) {}

    Graph parse() {
        Graph g = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return g;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("family '" + std::string(s_) + "': " + what + " at offset " + std::to_string(pos_));
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    bool at_digit() {
        skip();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }

    long number() {
        if (!at_digit()) fail("expected a number");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_++] - '0');
            if (v > 1'000'000'000L) fail("number too large");
        }
        return v;
    }

    int small() {
        const long v = number();
        if (v > kMaxVertices * kMaxVertices) fail("number too large");
        return static_cast<int>(v);
    }

    Graph expr() {
        Graph g = term();
        while (eat('+')) g = disjoint_union(g, term());
        return g;
    }

    Graph term() {
        if (at_digit()) {
            const int times = small();
            expect('*');
            return multiple(factor(), times);
        }
        return factor();
    }

    std::string ident() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '6')) {
            // "g6" is the only identifier with a digit in it
            if (s_[pos_] == '6' && s_.substr(start, pos_ - start) != "g") break;
            ++pos_;
        }
        if (start == pos_) fail("expected a family name");
        return std::string(s_.substr(start, pos_ - start));
    }

    std::vector<int> args() {
        std::vector<int> out;
        expect('(');
        do out.push_back(small());
        while (eat(','));
        expect(')');
        return out;
    }

    Graph factor() {
        if (eat('(')) {
            Graph g = expr();
            expect(')');
            return g;
        }
        const std::string name = ident();
        if (name == "g6") {
            expect(':');
            const std::size_t start = pos_;
            while (pos_ < s_.size() && s_[pos_] >= 63 && s_[pos_] <= 126) ++pos_;
            return graph6_decode(s_.substr(start, pos_ - start));
        }
        if (name == "join") {
            expect('(');
            Graph a = expr();
            expect(',');
            Graph b = expr();
            expect(')');
            return join(a, b);
        }
        if (name.size() == 1 && at_digit()) {
            const int n = small();
            switch (name[0]) {
                case 'K': return complete_graph(n);
                case 'I': return empty_graph(n);
                case 'C': return cycle_graph(n);
                case 'P': return path_graph(n);
                default: break;
            }
            fail("unknown family " + name);
        }
        const auto a = args();
        auto need = [&](std::size_t lo, std::size_t hi) {
            if (a.size() < lo || a.size() > hi) fail(name + " takes " + std::to_string(lo) + (lo == hi ? "" : "-" + std::to_string(hi)) + " arguments");
        };
        if (name == "K") { need(1, 1); return complete_graph(a[0]); }
        if (name == "I") { need(1, 1); return empty_graph(a[0]); }
        if (name == "C") { need(1, 1); return cycle_graph(a[0]); }
        if (name == "P") { need(1, 1); return path_graph(a[0]); }
        if (name == "T") { need(2, 2); return turan_graph(a[0], a[1]); }
        if (name == "CT") {
            need(2, 3);
            return a.size() == 3 ? colex_turan(a[0], a[1], a[2]) : colex_turan(a[0], a[1]);
        }
        if (name == "split") { need(2, 2); return complete_split(a[0], a[1]); }
        if (name == "star") { need(1, 1); return star(a[0]); }
        if (name == "L") { need(3, 3); return lower_bound_graph(ParamTriple::make(a[0], a[1], a[2])); }
        if (name == "fam") { need(4, 4); return lb_family(ParamTriple::make(a[0], a[1], a[2]), a[3]); }
        if (name == "cand") { need(4, 4); return candidate_graph(a[0], a[1], a[2], a[3]); }
        fail("unknown family " + name);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Graph parse_family(std::string_view text) { return FamilyParser(text).parse(); }

}  // namespace turan
