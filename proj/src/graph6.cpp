#include "turan/graph6.hpp"

#include <fstream>

namespace turan {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int sextet(char c) {
    const int v = static_cast<unsigned char>(c) - kBias;
    if (v < 0 || v > 63) throw Graph6Error(std::string("graph6: invalid character '") + c + "'");
    return v;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
    int acc = 0;
    int used = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                used = 0;
            }
        }
    if (used) out.push_back(static_cast<char>((acc << (6 - used)) + kBias));
    return out;
}

Graph graph6_decode(std::string_view s) {
    if (s.starts_with(kHeader)) s.remove_prefix(kHeader.size());
    if (s.empty()) throw Graph6Error("graph6: empty input");

    std::size_t pos = 0;
    int n = 0;
    if (s[0] != '~') {
        n = sextet(s[0]);
        pos = 1;
    } else {
        if (s.size() >= 2 && s[1] == '~') throw Graph6Error("graph6: orders above 258047 are not supported");
        if (s.size() < 4) throw Graph6Error("graph6: truncated size header");
        n = (sextet(s[1]) << 12) | (sextet(s[2]) << 6) | sextet(s[3]);
        if (n < 63) throw Graph6Error("graph6: non-canonical size header");
        pos = 4;
    }
    if (n > kMaxVertices)
        throw Graph6Error("graph6: order " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxVertices));

    const long bits = static_cast<long>(n) * (n - 1) / 2;
    const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    if (s.size() - pos < need) throw Graph6Error("graph6: truncated bit vector");
    if (s.size() - pos > need) throw Graph6Error("graph6: trailing garbage");

    std::vector<Edge> edges;
    long k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = sextet(s[pos + static_cast<std::size_t>(k / 6)]);
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    if (bits % 6) {
        const int last = sextet(s[pos + need - 1]);
        if (last & ((1 << (6 - bits % 6)) - 1)) throw Graph6Error("graph6: nonzero padding bits");
    }
    return Graph::from_edge_list(n, edges);
}

std::vector<Graph> read_graph6_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        out.push_back(graph6_decode(line));
    }
    return out;
}

void write_graph6_file(const std::filesystem::path& path, const std::vector<Graph>& graphs) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    for (const auto& g : graphs) out << graph6_encode(g) << '\n';
}

}  // namespace turan
