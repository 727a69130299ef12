#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>

#include "turan/graph.hpp"

namespace turan {

// Isomorphism-invariant byte string: two graphs (with colorings) get equal
// codes exactly when some color-preserving isomorphism maps one onto the other.
class CanonicalCode {
public:
    CanonicalCode() = default;
    explicit CanonicalCode(std::string bytes) : bytes_(std::move(bytes)) {}

    [[nodiscard]] const std::string& bytes() const { return bytes_; }
    [[nodiscard]] std::string hex() const;

    friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
    friend std::strong_ordering operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
        return a.bytes_.compare(b.bytes_) <=> 0;
    }

private:
    std::string bytes_;
};

CanonicalCode canonical_code(const Graph& g);

// colors[v] is an invariant label of vertex v; isomorphisms must preserve it.
CanonicalCode canonical_code(const Graph& g, std::span<const int> colors);

inline bool isomorphic(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

}  // namespace turan

template <>
struct std::hash<turan::CanonicalCode> {
    std::size_t operator()(const turan::CanonicalCode& c) const noexcept {
        return std::hash<std::string>{}(c.bytes());
    }
};
