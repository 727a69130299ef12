#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "turan/graph.hpp"
#include "turan/numeric.hpp"
#include "turan/report.hpp"

namespace turan {

// The 42-vertex pair 6·CT_4(17) and 7·T_4(6) under {K_{1,6}, K_5}.
struct CrossoverReport {
    Graph colex_part;
    Graph colex_union;
    Graph turan_union;
    Count k3_colex = 0;
    Count k3_turan = 0;
    Count k4_colex = 0;
    Count k4_turan = 0;
    bool colex_free = false;
    bool turan_free = false;
    // Serial reference counter on the same four numbers.
    bool serial_agree = false;
    // The plain colex segment (no degree cap) for comparison.
    Graph uncapped_part;
    bool uncapped_free = false;
    Count k3_uncapped_union = 0;
    Count k4_uncapped_union = 0;
    std::vector<std::string> failures;

    [[nodiscard]] bool ok() const { return failures.empty(); }
};

CrossoverReport reproduce_examples();
Json to_json(const CrossoverReport& r);

enum class SuiteLevel { quick, full };

struct SuiteOptions {
    SuiteLevel level = SuiteLevel::full;
    std::uint64_t seed = 20250101;
    // Builder for T_r(n); replaceable so a broken constructor can be shown
    // to trip the suite.
    std::function<Graph(int, int)> turan;
    // Restrict to these criterion ids; empty runs the level's set.
    std::vector<int> only;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    long checks = 0;
    std::string detail;
    double seconds = 0;
};

struct SuiteReport {
    std::vector<CriterionResult> criteria;
    [[nodiscard]] bool pass() const {
        for (const auto& c : criteria)
            if (!c.pass) return false;
        return true;
    }
};

// quick runs criteria 1, 5, 6 and 9; full runs 1-10.
SuiteReport verify_suite(const SuiteOptions& options);
// Seconds are left out so the JSON is reproducible.
Json to_json(const SuiteReport& r);

// Rows of the lower/upper trend behind criterion 10, one per Δ.
struct TrendPoint {
    int delta = 0;
    Rational ratio;
    Rational neighborhood_bound;
    Rational product;
};
struct TrendSeries {
    int t = 0;
    int u = 0;
    int omega = 0;
    std::vector<TrendPoint> points;
    // ratio >= neighborhood_bound >= product at every point.
    bool above_bound = true;
    // Minimum ratio over each run of ω−u consecutive Δ, checked for growth.
    std::vector<Rational> block_minima;
    bool block_minima_nondecreasing = true;
};
// H = K_t for t in {3, 4}, u in {1, 2}, ω from t to 6, Δ from ω to max_delta.
std::vector<TrendSeries> ratio_trend(int max_delta);
Json to_json(const TrendSeries& s);

}  // namespace turan
