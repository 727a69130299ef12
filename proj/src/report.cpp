#include "turan/report.hpp"

#include "turan/graph6.hpp"

namespace turan {

Json count_json(const Count& c) { return c.str(); }

Json rational_json(const Rational& q) {
    return Json{{"num", boost::multiprecision::numerator(q).str()}, {"den", boost::multiprecision::denominator(q).str()}};
}

Json vertex_set_json(const VertexSet& s) {
    Json out = Json::array();
    s.for_each([&](int v) { out.push_back(v + 1); });
    return out;
}

Json graph_json(const Graph& g) { return Json{{"n", g.order()}, {"m", g.size()}, {"graph6", graph6_encode(g)}}; }

namespace {

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const ConstraintSet& cs) {
    return Json{{"u", cs.u}, {"delta", optional_int(cs.delta)}, {"omega", optional_int(cs.omega)}};
}

Json to_json(const FreenessReport& r) {
    Json v = Json::array();
    for (const auto& x : r.violations)
        v.push_back(Json{{"kind", x.kind == Violation::Kind::clique ? "clique" : "split"},
                         {"clique", vertex_set_json(x.clique)},
                         {"witness", vertex_set_json(x.witness)}});
    Json by_u = Json::object();
    for (std::size_t i = 0; i < r.max_common_neighborhood_by_u.size(); ++i)
        by_u[std::to_string(i + 1)] = r.max_common_neighborhood_by_u[i];
    return Json{{"constraints", to_json(r.constraints)},
                {"passes", r.passes()},
                {"clique_number", r.clique_number},
                {"max_degree", r.max_degree},
                {"max_common_neighborhood_by_u", by_u},
                {"violations", v}};
}

Json to_json(const ParamTriple& p) {
    return Json{{"u", p.u}, {"delta", p.delta}, {"omega", p.omega}, {"a", p.a}, {"b", p.b}};
}

Json to_json(const BoundsReport& r) {
    return Json{{"params", to_json(r.params)},
                {"L", graph_json(r.L)},
                {"N_H_L", count_json(r.n_h_in_L)},
                {"ku_L", count_json(r.ku_of_L)},
                {"N_derived_turan", count_json(r.n_derived_in_turan)},
                {"lower", rational_json(r.lower)},
                {"upper", rational_json(r.upper)},
                {"ratio", rational_json(r.ratio)},
                {"divisible", r.divisible},
                {"equal", r.equal},
                {"consistent", r.consistent()}};
}

Json to_json(const RatioDiagnostic& d) {
    return Json{{"ratio", rational_json(d.ratio)}, {"bound", rational_json(d.bound)}, {"within", d.within()}};
}

Json to_json(const Omega0Info& info) {
    return Json{{"certified_bound", count_json(info.certified_bound)},
                {"exact", optional_int(info.exact)},
                {"label", info.label}};
}

Json to_json(const GoodnessResult& r) {
    Json vals = Json::array();
    for (std::size_t i = 0; i < r.values.size(); ++i)
        vals.push_back(Json{{"n", static_cast<int>(i) + 1},
                            {"optimum", count_json(r.values[i].first)},
                            {"turan", count_json(r.values[i].second)}});
    return Json{{"omega", r.omega},
                {"n_max", r.n_max},
                {"pass", r.pass},
                {"values", vals},
                {"failing_n", optional_int(r.failing_n)},
                {"witness", r.witness ? Json(*r.witness) : Json(nullptr)},
                {"label", r.label}};
}

Json to_json(const StarSandwich& s) {
    return Json{{"lower", rational_json(s.lower)}, {"upper", rational_json(s.upper)}, {"label", s.label}};
}

Json to_json(const CopyWeights& w) {
    return Json{{"vertices", vertex_set_json(w.copy.vertices)},
                {"dominating", vertex_set_json(w.copy.dominating)},
                {"omega_J", w.omega_J},
                {"delta_J", w.delta_J},
                {"omega_witness", vertex_set_json(w.omega_witness)},
                {"delta_witness", vertex_set_json(w.delta_witness)},
                {"denominator", count_json(w.denominator)},
                {"x", w.x ? rational_json(*w.x) : Json(nullptr)}};
}

Json to_json(const LocalReport& r, bool per_copy) {
    Json out{{"u", r.u},
             {"dom", r.dom},
             {"omega0_param", r.omega0_param},
             {"ku", count_json(r.ku)},
             {"copies", r.per_copy.size()},
             {"weighted_sum", rational_json(r.weighted_sum)},
             {"bound", rational_json(r.bound)},
             {"holds", r.holds},
             {"equality", r.equality},
             {"hypothesis_ok", r.hypothesis_ok},
             {"aborted", r.aborted},
             {"diagnosis", r.diagnosis}};
    Json exempt = Json::array();
    for (const auto& c : r.exempt_cliques) exempt.push_back(vertex_set_json(c));
    Json fails = Json::array();
    for (const auto& c : r.hypothesis_failures) fails.push_back(vertex_set_json(c));
    out["exempt_cliques"] = exempt;
    out["hypothesis_failures"] = fails;
    if (per_copy) {
        Json rows = Json::array();
        for (const auto& w : r.per_copy) rows.push_back(to_json(w));
        out["per_copy"] = rows;
    }
    return out;
}

Json to_json(const SearchOutcome& o) {
    return Json{{"objective", count_json(o.objective)},
                {"argmax", o.argmax},
                {"search_space_size", count_json(o.search_space_size)},
                {"constraints", to_json(o.constraints)},
                {"u", o.u},
                {"p", o.p},
                {"n_cap", o.n_cap},
                {"feasible", o.feasible},
                {"verified", o.verified},
                {"notes", o.notes}};
}

Json to_json(const Composition& c) {
    return Json{{"graph", graph_json(c.graph)},
                {"multiplicity", c.multiplicity},
                {"value", count_json(c.value)},
                {"ku", count_json(c.ku)}};
}

Json envelope(const std::string& kind, Json body) {
    Json out{{"schema", kSchemaId}, {"kind", kind}};
    for (auto& [k, v] : body.items()) out[k] = v;
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace turan
