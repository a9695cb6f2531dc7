#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "newtonsys/center.hpp"
#include "newtonsys/io/parse.hpp"
#include "newtonsys/numerics/oracle.hpp"
#include "newtonsys/numerics/period.hpp"

namespace newtonsys::cert {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0.0";

inline json rational(const Rational& r) { return to_fraction_string(r); }

/// Half-integer k/2, always written over 2.
inline json half_integer(int twice) { return std::to_string(twice) + "/2"; }

inline json half_integer(const Rational& r) {
    const Rational twice = 2 * r;
    require_invariant(is_integer(twice), "not a half-integer: " + r.get_str());
    return twice.get_num().get_str() + "/2";
}

inline json poly(const RatPoly& p) {
    json a = json::array();
    for (int i = 0; i <= p.degree(); ++i) a.push_back(rational(p.coeff(i)));
    return a;
}

inline json qnum(const QNum& c) {
    if (c.is_rational()) return rational(c.a());
    return {{"rational", rational(c.a())}, {"sqrt_coeff", rational(c.b())}, {"radicand", c.d().get_str()}};
}

inline json system(const NewtonSystem& S) {
    json P = json::array();
    for (const auto& p : S.P()) P.push_back(poly(p));
    return {{"text", print_system(S)}, {"P", P}, {"m", S.m()}, {"n", S.n()}};
}

inline json point(SupportPoint s) { return json::array({s.i, s.j}); }

inline json edge(const PolygonEdge& e) {
    json pts = json::array();
    for (auto s : e.lattice_points) pts.push_back(point(s));
    return {{"p", e.p},         {"q", e.q},         {"sigma", e.sigma},        {"width", e.width},
            {"height", e.height}, {"left", point(e.left)}, {"right", point(e.right)}, {"edge_points", pts},
            {"edge_poly", poly(e.edge_poly)}};
}

inline json descent(const DescentCertificate& c) {
    json levels = json::array();
    for (const auto& l : c.levels)
        levels.push_back({{"edge", edge(l.edge)}, {"phi", rational(l.phi)}, {"p", l.p}});
    return {{"levels", levels},
            {"terminal", {{"reason", to_string(c.reason)}, {"edge", c.terminal_edge ? edge(*c.terminal_edge) : json(nullptr)}}},
            {"depth", c.depth},
            {"u_sign", c.u_sign > 0 ? "positive" : "negative"},
            {"width_policy", c.policy == WidthPolicy::EvenWidth ? "EvenWidth" : "HalfPlane"}};
}

inline json series(const FractionalSeries& s) {
    json terms = json::array();
    for (const auto& t : s.terms) terms.push_back({{"exponent", half_integer(t.twice_exponent)}, {"coeff", qnum(t.coeff)}});
    return {{"u_sign", s.u_sign > 0 ? "positive" : "negative"},
            {"terms", terms},
            {"truncation_order", half_integer(s.truncation_order)},
            {"exact", s.exact}};
}

inline json trace(const std::vector<std::pair<std::string, Rational>>& t) {
    json o = json::object();
    for (const auto& [k, v] : t) o[k] = rational(v);
    return o;
}

inline json monodromy(const MonodromyVerdict& v) {
    json branches = json::array();
    for (const auto& b : v.branches)
        branches.push_back({{"descent", descent(b.descent)},
                            {"descent_verdict", b.descent_verdict},
                            {"half_plane_descent", descent(b.half_plane_descent)},
                            {"half_plane_verdict", b.half_plane_verdict},
                            {"invariant_curve", b.curve ? series(*b.curve) : json(nullptr)}});
    return {{"monodromic", v.monodromic},
            {"condition", to_string(v.condition)},
            {"failure", v.failure ? json(to_string(*v.failure)) : json(nullptr)},
            {"chart", v.chart.empty() ? json(nullptr) : json(v.chart)},
            {"branches", branches},
            {"trace", trace(v.trace)}};
}

inline json decomposition(const CenterDecomposition& d) {
    return {{"r", poly(d.r)},
            {"A", json::array({poly(d.A[0]), poly(d.A[1]), poly(d.A[2])})},
            {"kappa", d.kappa},
            {"alpha", rational(d.alpha)},
            {"beta", rational(d.beta)},
            {"gamma", rational(d.gamma)},
            {"y_tilde_star", d.y_tilde_star ? rational(*d.y_tilde_star) : json(nullptr)}};
}

inline json origin(const LocalMonodromyData& o) {
    return {{"case", to_string(o.origin_case)},
            {"nu", o.nu},
            {"iota0", o.iota0},
            {"iota1", o.iota1 ? json(*o.iota1) : json(nullptr)},
            {"a_iota0", rational(o.leading)}};
}

inline json local_center(const LocalCenterVerdict& v) {
    json tags = json::array();
    for (auto t : v.tags) tags.push_back(to_string(t));
    return {{"center", v.center},
            {"conditions", tags},
            {"darboux_e", v.darboux_e ? rational(*v.darboux_e) : json(nullptr)},
            {"e_quarter", v.e_quarter},
            {"c3_reading", "identity"},
            {"decomposition", v.decomposition ? decomposition(*v.decomposition) : json(nullptr)}};
}

inline json global_center(const GlobalCenterVerdict& v) {
    json g = {{"global_center", v.global_center},
              {"condition", to_string(v.condition)},
              {"reason", v.reason.empty() ? json(nullptr) : json(v.reason)},
              {"trace", trace(v.trace)}};
    if (v.g2_branch)
        g["g2_branch"] = {{"chart", v.g2_branch->chart},
                          {"descent", descent(v.g2_branch->descent)},
                          {"descent_verdict", v.g2_branch->descent_verdict},
                          {"invariant_curve", v.g2_branch->curve ? series(*v.g2_branch->curve) : json(nullptr)}};
    return g;
}

inline json oracle(const numerics::OracleReport& r, const MonodromyVerdict& exact) {
    const bool contradicts = (r.verdict == numerics::OracleVerdict::Monodromic && !exact.monodromic) ||
                             (r.verdict == numerics::OracleVerdict::NotMonodromic && exact.monodromic);
    return {{"verdict", to_string(r.verdict)},
            {"returned", r.returned},
            {"escaped", r.escaped},
            {"undecided", r.undecided},
            {"contradicts_exact", contradicts}};
}

inline json periods(const std::vector<numerics::PeriodSample>& ps) {
    json a = json::array();
    for (const auto& p : ps)
        a.push_back({{"amplitude", p.amplitude},
                     {"period", p.period},
                     {"converged", p.converged},
                     {"refinement_error", p.refinement_error}});
    return a;
}

/// Full-pipeline document.
struct Analysis {
    NewtonSystem system;
    MonodromyVerdict monodromy;
    GlobalCenterVerdict global;
    std::optional<numerics::OracleReport> oracle;
    std::vector<numerics::PeriodSample> periods;
};

inline Analysis analyze(const NewtonSystem& S, bool numeric, const std::vector<double>& amplitudes = {1, 2, 4, 8}) {
    Analysis a{S, decide_monodromy(S), decide_global_center(S), std::nullopt, {}};
    if (numeric) {
        if (numerics::unique_equilibrium_at_origin(S)) a.oracle = numerics::monodromy_oracle(S);
        if (a.global.global_center) a.periods = numerics::period_function(S, amplitudes);
    }
    return a;
}

inline json document(const Analysis& a) {
    json d = {{"schema_version", kSchemaVersion}, {"system", system(a.system)}, {"monodromy", monodromy(a.monodromy)}};
    d["origin"] = a.global.origin ? origin(*a.global.origin) : json(nullptr);
    d["local_center"] = a.global.local ? local_center(*a.global.local) : json(nullptr);
    d["global_center"] = global_center(a.global);
    if (a.oracle || !a.periods.empty()) {
        json n = json::object();
        n["oracle"] = a.oracle ? oracle(*a.oracle, a.monodromy) : json(nullptr);
        n["periods"] = periods(a.periods);
        d["numeric"] = n;
    } else {
        d["numeric"] = nullptr;
    }
    return d;
}

}  // namespace newtonsys::cert
