#pragma once

// Internal helpers shared by the bit-parallel kernels.

#include <cstdint>
#include <vector>

#include "turan/bitset.hpp"
#include "turan/graph.hpp"
#include "turan/numeric.hpp"

namespace turan::detail {

__extension__ typedef unsigned __int128 u128;

// Runs f.template operator()<W>() with W = 1 when every row fits one word.
template <typename F>
decltype(auto) with_width(int n, F&& f) {
    if (n <= 64) return f.template operator()<1>();
    return f.template operator()<4>();
}

template <std::size_t W>
std::vector<BasicBitset<W>> narrow_rows(const Graph& g) {
    std::vector<BasicBitset<W>> out;
    out.reserve(static_cast<std::size_t>(g.order()));
    for (const auto& r : g.rows()) out.push_back(r.template narrow<W>());
    return out;
}

// Rows restricted to higher-numbered neighbors.
template <std::size_t W>
std::vector<BasicBitset<W>> forward_rows(const Graph& g) {
    auto rows = narrow_rows<W>(g);
    for (std::size_t v = 0; v < rows.size(); ++v)
        rows[v] -= BasicBitset<W>::range(static_cast<int>(v) + 1);
    return rows;
}

inline Count to_count(u128 x) {
    Count c = static_cast<std::uint64_t>(x >> 64);
    c <<= 64;
    c += static_cast<std::uint64_t>(x);
    return c;
}

// True when every partial sum below `bound` fits a 128-bit accumulator.
inline bool fits_u128(const Count& bound) {
    static const Count limit = Count(1) << 126;
    return bound < limit;
}

}  // namespace turan::detail
