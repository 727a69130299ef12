#pragma once

#include <string>

namespace turan {

// (u, Δ, ω) with Δ = a(ω−u) + b, 0 <= b < ω−u.
struct ParamTriple {
    int u = 1;
    int delta = 0;
    int omega = 2;
    int a = 0;
    int b = 0;

    // Needs ω >= u+1 >= 2 and Δ >= 0; throws std::invalid_argument otherwise.
    static ParamTriple make(int u, int delta, int omega);

    // The standing hypothesis Δ >= ω >= u+1 >= 2 used by the density bounds.
    [[nodiscard]] bool standard() const { return delta >= omega; }

    // a·ω + b, the order of the lower bound graph.
    [[nodiscard]] int lower_bound_order() const { return a * omega + b; }

    [[nodiscard]] std::string str() const;

    friend bool operator==(const ParamTriple&, const ParamTriple&) = default;
};

}  // namespace turan
