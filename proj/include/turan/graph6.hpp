#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

struct Graph6Error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Standard graph6: N(n) followed by the column-wise upper triangle packed
// into 6-bit groups offset by 63.
std::string graph6_encode(const Graph& g);

// Accepts an optional ">>graph6<<" header. Rejects bad characters, truncated
// bit vectors, nonzero padding and trailing bytes.
Graph graph6_decode(std::string_view s);

// Newline-separated corpus; blank lines are skipped.
std::vector<Graph> read_graph6_file(const std::filesystem::path& path);
void write_graph6_file(const std::filesystem::path& path, const std::vector<Graph>& graphs);

}  // namespace turan
