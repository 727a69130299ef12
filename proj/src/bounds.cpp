#include "turan/bounds.hpp"

#include <stdexcept>

#include "turan/constructions.hpp"
#include "turan/search.hpp"

namespace turan {

Rational rho(const PatternSpec& h, const Graph& g, int u) {
    const Count ku = count_cliques(g, u);
    if (ku == 0) throw std::domain_error("rho undefined: graph has no " + std::to_string(u) + "-clique");
    return ratio(count_subgraph_copies(h, g), ku);
}

namespace {

void require_dominating(const PatternSpec& h, int u) {
    if (u > h.dom_count())
        throw std::invalid_argument("H has " + std::to_string(h.dom_count()) + " dominating vertices, fewer than u = " +
                                    std::to_string(u));
}

}  // namespace

BoundsReport bounds_report(const PatternSpec& h, const ParamTriple& params) {
    require_dominating(h, params.u);
    if (!params.standard()) throw std::invalid_argument("bounds need delta >= omega, got " + params.str());
    BoundsReport rep;
    rep.params = params;
    rep.L = lower_bound_graph(params);
    rep.n_h_in_L = count_subgraph_copies(h, rep.L);
    rep.ku_of_L = count_cliques(rep.L, params.u);
    rep.lower = ratio(rep.n_h_in_L, rep.ku_of_L);
    const PatternSpec derived(h.derived(params.u));
    rep.n_derived_in_turan = count_subgraph_copies(derived, turan_graph(params.omega - params.u, params.delta));
    rep.upper = ratio(rep.n_derived_in_turan, binomial(h.dom_count(), params.u));
    rep.ratio = rep.upper == 0 ? Rational(1) : Rational(rep.lower / rep.upper);
    rep.divisible = params.delta % (params.omega - params.u) == 0;
    rep.equal = rep.lower == rep.upper;
    return rep;
}

std::optional<Rational> neighborhood_ratio_bound(const PatternSpec& h, const ParamTriple& params) {
    require_dominating(h, params.u);
    if (params.delta < params.u) return std::nullopt;
    const PatternSpec derived(h.derived(params.u));
    const int r = params.omega - params.u;
    const Count den = count_subgraph_copies(derived, turan_graph(r, params.delta));
    if (den == 0) return std::nullopt;
    return ratio(count_subgraph_copies(derived, turan_graph(r, params.delta - params.u)), den);
}

Rational product_bound(int k, int n, int u) {
    if (u < 0 || n - u + 1 <= 0) throw std::invalid_argument("product bound needs n > u - 1 >= -1");
    Rational out = 1;
    for (int i = 0; i < u; ++i) out *= Rational(1) - Rational(k, n - i);
    return out;
}

RatioDiagnostic ratio_diagnostic(const PatternSpec& h, int r, int n, int u) {
    if (u < 0 || u > n) throw std::invalid_argument("need 0 <= u <= n");
    const Count den = count_subgraph_copies(h, turan_graph(r, n));
    if (den == 0) throw std::domain_error("N(H, T_r(n)) is zero");
    RatioDiagnostic d;
    d.ratio = ratio(count_subgraph_copies(h, turan_graph(r, n - u)), den);
    d.bound = product_bound(h.order(), n, u);
    return d;
}

Count omega0_bound(const Graph& h) { return 300 * ipow(h.order(), 9); }

Omega0Info omega0_info(const Graph& h) {
    Omega0Info info;
    info.certified_bound = omega0_bound(h);
    if (h.size() * 2 == h.order() * (h.order() - 1)) {
        info.exact = 1;
        info.label = "exact: omega0(K_t) = 1 by Zykov's theorem";
    } else {
        info.label = "certified upper bound 300 v(H)^9 (Morrison et al.); exact value unknown";
    }
    return info;
}

GoodnessResult empirical_turan_goodness(const PatternSpec& h, int omega, int n_max) {
    if (omega < 1) throw std::invalid_argument("omega must be at least 1");
    if (n_max > kEnumerationCap) throw std::out_of_range("n_max exceeds the search cap " + std::to_string(kEnumerationCap));
    GoodnessResult res;
    res.omega = omega;
    res.n_max = n_max;
    ConstraintSet cs;
    cs.omega = omega;
    for (int n = 1; n <= n_max; ++n) {
        const SearchOutcome out = brute_extremal(n, h, cs);
        const Count turan_value = count_subgraph_copies(h, turan_graph(omega, n));
        res.values.emplace_back(out.objective, turan_value);
        if (out.objective != turan_value && res.pass) {
            res.pass = false;
            res.failing_n = n;
            res.witness = out.argmax.front();
        }
    }
    res.label = res.pass ? "evidence only: T_omega(n) optimal for all n <= n_max; does not prove omega >= omega0(H)"
                         : "refuted: some K_{omega+1}-free graph beats T_omega(n), so omega < omega0(H)";
    return res;
}

StarSandwich star_sandwich(const PatternSpec& h, int u, int delta, int omega) {
    require_dominating(h, u);
    if (u < 1 || omega < u + 1 || omega < 2 || delta < u - 1)
        throw std::invalid_argument("star sandwich needs omega >= u+1 >= 2 and delta >= u-1");
    StarSandwich s;
    s.lower = rho(h, turan_graph(omega, delta + delta / (omega - 1)), u);
    s.upper = ratio(count_subgraph_copies(PatternSpec(h.derived(u)), turan_graph(omega - u, delta - u + 1)),
                    binomial(h.dom_count(), u));
    s.label = "conjecture report: both sides computed, nothing asserted about c";
    return s;
}

}  // namespace turan
