#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/sturm.hpp"
#include "resolution/curve_search.hpp"
#include "resolution/descent.hpp"
#include "system.hpp"

namespace newtonsys {

enum class MonodromyCondition { M1, M2, M3, L1, L2, Potential, NotMonodromic };

enum class MonodromyFailure {
    N1, N2, N3, N4, N5, N6, N7,
    DegreeTooHigh,
    P0Zero,
    LienardCriterion,
    PotentialCriterion,
};

inline const char* to_string(MonodromyCondition c) {
    switch (c) {
        case MonodromyCondition::M1: return "M1";
        case MonodromyCondition::M2: return "M2";
        case MonodromyCondition::M3: return "M3";
        case MonodromyCondition::L1: return "L1";
        case MonodromyCondition::L2: return "L2";
        case MonodromyCondition::Potential: return "Potential";
        case MonodromyCondition::NotMonodromic: return "NotMonodromic";
    }
    return "?";
}

inline const char* to_string(MonodromyFailure f) {
    switch (f) {
        case MonodromyFailure::N1: return "N1";
        case MonodromyFailure::N2: return "N2";
        case MonodromyFailure::N3: return "N3";
        case MonodromyFailure::N4: return "N4";
        case MonodromyFailure::N5: return "N5";
        case MonodromyFailure::N6: return "N6";
        case MonodromyFailure::N7: return "N7";
        case MonodromyFailure::DegreeTooHigh: return "DegreeTooHigh";
        case MonodromyFailure::P0Zero: return "P0Zero";
        case MonodromyFailure::LienardCriterion: return "LienardCriterion";
        case MonodromyFailure::PotentialCriterion: return "PotentialCriterion";
    }
    return "?";
}

/// Descent and curve search on one u-side of a chart.
struct BranchWitness {
    DescentCertificate descent;
    bool descent_verdict = false;
    DescentCertificate half_plane_descent;
    bool half_plane_verdict = false;
    std::optional<FractionalSeries> curve;
};

struct MonodromyVerdict {
    bool monodromic = false;
    MonodromyCondition condition = MonodromyCondition::NotMonodromic;
    std::optional<MonodromyFailure> failure;
    std::string chart;                    // "X0" or "Y0" when a descent ran
    std::vector<BranchWitness> branches;  // u_sign +1, then -1
    std::vector<std::pair<std::string, Rational>> trace;
};

struct Charts {
    PlanarField Z0;
    PlanarField Ystar0;
    PlanarField X0;
};

/// Charts at infinity of a Cherkas system (m = 2). With allow_degenerate,
/// m < 2 is accepted and the missing P_i are zero.
inline Charts chart_fields(const NewtonSystem& S, bool allow_degenerate = false) {
    if (S.m() > 2 || (S.m() < 2 && !allow_degenerate)) throw std::invalid_argument("chart_fields: need m = 2");
    if (S.P(0).is_zero()) throw std::invalid_argument("chart_fields: P0 = 0");
    const int n = S.n();
    const RatPoly T0 = reverse(S.P(0), n), T1 = reverse(S.P(1), n), T2 = reverse(S.P(2), n);
    Charts c;
    c.Z0 = {BiRatPoly::constant(1),
            -(BiRatPoly::from_u(S.P(2), 1) + BiRatPoly::from_u(S.P(1), 2) + BiRatPoly::from_u(S.P(0), 3)), "x", "v"};
    c.Ystar0 = {BiRatPoly::monomial(-1, n + 2, 1),
                BiRatPoly::from_u(T0, 0) + BiRatPoly::from_u(T1, 1) + BiRatPoly::from_u(T2, 2), "u", "y"};
    c.X0 = {BiRatPoly::monomial(1, n + 2, 0),
            BiRatPoly::from_u(T2, 1) + BiRatPoly::from_u(T1, 2) + BiRatPoly::from_u(T0, 3), "u", "v"};
    return c;
}

inline Rational y_star(const NewtonSystem& S) {
    if (S.c_n() == 0) throw std::invalid_argument("y_star: c_n = 0");
    return -S.b_n() / (2 * S.c_n());
}

/// Ystar0 translated by y -> y + y*.
inline PlanarField y_star_shift(const NewtonSystem& S) {
    const Rational ys = y_star(S);
    const PlanarField Ys = chart_fields(S, true).Ystar0;
    return {Ys.F.translate_v(ys), Ys.G.translate_v(ys), "u", "y"};
}

/// x P0(x) < 0 for all x != 0: with P0 = x Q, Q has no nonzero real root
/// and is negative on both half-lines.
inline bool x_p0_negative(const RatPoly& P0) {
    if (P0.is_zero() || P0.coeff(0) != 0) return false;
    const RatPoly Q = exact_divide(P0, RatPoly::x());
    return nonzero_real_root_count(Q) == 0 && Q(Rational(1)) < 0 && Q(Rational(-1)) < 0;
}

inline MonodromyVerdict potential_monodromy(const RatPoly& P0) {
    if (P0.is_zero()) throw std::invalid_argument("potential_monodromy: P0 = 0");
    MonodromyVerdict v;
    v.trace.push_back({"a_l0", P0.leading()});
    if (x_p0_negative(P0)) {
        v.monodromic = true;
        v.condition = MonodromyCondition::Potential;
    } else {
        v.failure = MonodromyFailure::PotentialCriterion;
    }
    return v;
}

inline MonodromyVerdict lienard_monodromy(const RatPoly& P0, const RatPoly& P1) {
    if (P1.is_zero()) return potential_monodromy(P0);
    if (P0.is_zero()) throw std::invalid_argument("lienard_monodromy: P0 = 0");
    const int l0 = P0.degree(), l1 = P1.degree();
    const Rational a = P0.leading(), b = P1.leading();
    MonodromyVerdict v;
    v.trace = {{"l0", Rational(l0)}, {"l1", Rational(l1)}, {"a_l0", a}, {"b_l1", b}};
    if (l0 % 2 == 1 && l0 > 2 * l1 + 1 && a < 0) {
        v.monodromic = true;
        v.condition = MonodromyCondition::L1;
    } else if (l0 == 2 * l1 + 1 && b * b + 2 * (l0 + 1) * a < 0) {
        v.monodromic = true;
        v.condition = MonodromyCondition::L2;
        v.trace.push_back({"b^2+2(l0+1)a", b * b + 2 * (l0 + 1) * a});
    } else {
        v.failure = MonodromyFailure::LienardCriterion;
    }
    return v;
}

/// Runs both sides of a chart and checks the descent/curve-search equivalence.
inline std::vector<BranchWitness> run_branches(const PlanarField& X, int depth_bound, const Rational& order,
                                               bool allow_zero) {
    std::vector<BranchWitness> out;
    for (int s : {1, -1}) {
        BranchWitness w;
        auto full = m1_descent(X, depth_bound, s, WidthPolicy::EvenWidth);
        auto half = m1_descent(X, depth_bound, s, WidthPolicy::HalfPlane);
        w.descent = full.cert;
        w.descent_verdict = full.verdict;
        w.half_plane_descent = half.cert;
        w.half_plane_verdict = half.verdict;
        w.curve = fractional_curve_search(X, order, s, {allow_zero});
        require_invariant(w.half_plane_verdict == !w.curve.has_value(),
                          "half-plane descent disagrees with curve search on u_sign=" + std::to_string(s));
        out.push_back(std::move(w));
    }
    const bool descent = out[0].descent_verdict && out[1].descent_verdict;
    const bool no_curves = !out[0].curve && !out[1].curve;
    require_invariant(descent == no_curves, "descent verdict disagrees with curve search");
    return out;
}

/// The chart/Newton-polygon decision for m <= 2. For m < 2 this treats the
/// missing P_2 as zero, which gives an independent path for Lienard systems.
inline MonodromyVerdict cherkas_monodromy(const NewtonSystem& S) {
    if (S.m() > 2 || S.P(0).is_zero()) throw std::invalid_argument("cherkas_monodromy: need m <= 2, P0 != 0");
    MonodromyVerdict v;
    const int n = S.n();
    const Rational a = S.a_n(), b = S.b_n(), c = S.c_n();
    const Rational disc = b * b - 4 * a * c;
    v.trace = {{"n", Rational(n)}, {"a_n", a}, {"b_n", b}, {"c_n", c}, {"disc", disc}};
    auto fail = [&](MonodromyFailure f) {
        v.failure = f;
        return v;
    };
    if (n % 2 == 0) return fail(MonodromyFailure::N1);
    if (c > 0) return fail(MonodromyFailure::N2);
    if (c == 0) {
        if (b != 0) return fail(MonodromyFailure::N3);
        if (a > 0) return fail(MonodromyFailure::N4);
        v.chart = "X0";
        v.branches = run_branches(chart_fields(S, true).X0, n - 1, Rational(n), false);
        if (v.branches[0].descent_verdict && v.branches[1].descent_verdict) {
            v.monodromic = true;
            v.condition = MonodromyCondition::M1;
            return v;
        }
        return fail(MonodromyFailure::N5);
    }
    if (disc < 0) {
        v.monodromic = true;
        v.condition = MonodromyCondition::M2;
        return v;
    }
    if (disc > 0) return fail(MonodromyFailure::N6);
    v.chart = "Y0";
    const bool bn_zero = (b == 0);
    v.branches = run_branches(y_star_shift(S), bn_zero ? n + 1 : n, Rational(bn_zero ? n + 2 : n + 1), true);
    if (v.branches[0].descent_verdict && v.branches[1].descent_verdict) {
        v.monodromic = true;
        v.condition = MonodromyCondition::M3;
        return v;
    }
    return fail(MonodromyFailure::N7);
}

inline MonodromyVerdict decide_monodromy(const NewtonSystem& S) {
    MonodromyVerdict v;
    if (S.m() >= 3) {
        v.failure = MonodromyFailure::DegreeTooHigh;
        return v;
    }
    if (S.P(0).is_zero()) {
        v.failure = MonodromyFailure::P0Zero;
        return v;
    }
    if (S.m() <= 1) return lienard_monodromy(S.P(0), S.P(1));
    return cherkas_monodromy(S);
}

}  // namespace newtonsys
