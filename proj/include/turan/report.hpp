#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "turan/bounds.hpp"
#include "turan/freeness.hpp"
#include "turan/localization.hpp"
#include "turan/numeric.hpp"
#include "turan/search.hpp"

namespace turan {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaId = "turan-report/1";

// Counts are decimal strings; rationals are {"num", "den"} in lowest terms.
Json count_json(const Count& c);
Json rational_json(const Rational& q);
// 1-based vertex list.
Json vertex_set_json(const VertexSet& s);
// {"n", "m", "graph6"}.
Json graph_json(const Graph& g);

Json to_json(const ConstraintSet& cs);
Json to_json(const FreenessReport& r);
Json to_json(const ParamTriple& p);
Json to_json(const BoundsReport& r);
Json to_json(const RatioDiagnostic& d);
Json to_json(const Omega0Info& info);
Json to_json(const GoodnessResult& r);
Json to_json(const StarSandwich& s);
Json to_json(const CopyWeights& w);
Json to_json(const LocalReport& r, bool per_copy);
Json to_json(const SearchOutcome& o);
Json to_json(const Composition& c);

// {"schema": kSchemaId, "kind": kind, ...body}.
Json envelope(const std::string& kind, Json body);

// Two-space indented with a trailing newline; key order is insertion order,
// so equal inputs give byte-identical text.
std::string dump(const Json& j);

}  // namespace turan
