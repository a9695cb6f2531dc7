#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "core/decompose.hpp"
#include "monodromy.hpp"

namespace newtonsys {

enum class OriginCase { W1, W2, NotMonodromicOrigin };

inline const char* to_string(OriginCase c) {
    switch (c) {
        case OriginCase::W1: return "W1";
        case OriginCase::W2: return "W2";
        case OriginCase::NotMonodromicOrigin: return "NotMonodromicOrigin";
    }
    return "?";
}

struct LocalMonodromyData {
    int nu = 0;
    int iota0 = 0;
    std::optional<int> iota1;
    Rational leading;  // a_{iota0}
    OriginCase origin_case = OriginCase::NotMonodromicOrigin;
};

inline LocalMonodromyData local_monodromy_origin(const NewtonSystem& S) {
    const RatPoly P0 = S.P(0), P1 = S.P(1);
    if (P0.is_zero()) throw std::invalid_argument("local_monodromy_origin: P0 = 0");
    if (P0.coeff(0) != 0) throw std::invalid_argument("local_monodromy_origin: origin is not an equilibrium");
    LocalMonodromyData d;
    d.iota0 = P0.valuation();
    d.leading = P0.coeff(d.iota0);
    d.nu = (d.iota0 + 1) / 2;
    if (!P1.is_zero()) d.iota1 = P1.valuation();
    if (d.iota0 % 2 == 0 || d.leading >= 0) return d;
    if (d.nu == 1) {
        if (P1.coeff(0) == 0) d.origin_case = OriginCase::W1;
        return d;
    }
    bool ok = !d.iota1 || *d.iota1 > d.nu;
    if (d.iota1 && *d.iota1 == d.nu) {
        const Rational b = P1.coeff(d.nu);
        ok = b * b + 4 * d.nu * d.leading < 0;
    }
    if (ok) d.origin_case = OriginCase::W2;
    return d;
}

inline bool check_c1(const NewtonSystem& S) { return S.P(1).is_zero(); }

/// P2 P0 P1 + P0 P1' - P1 P0' - e P1^3.
inline RatPoly c3_defect(const NewtonSystem& S, const Rational& e) {
    const RatPoly P0 = S.P(0), P1 = S.P(1), P2 = S.P(2);
    return P2 * P0 * P1 + P0 * derivative(P1) - P1 * derivative(P0) - e * pow(P1, 3);
}

/// The constant e of the C3 identity, if it exists.
inline std::optional<Rational> check_c3_darboux(const NewtonSystem& S) {
    const RatPoly P1 = S.P(1);
    if (P1.is_zero()) return std::nullopt;
    const RatPoly lhs = c3_defect(S, 0);
    const RatPoly cube = pow(P1, 3);
    if (lhs.is_zero()) return Rational(0);
    if (lhs.degree() != cube.degree()) return std::nullopt;
    const Rational e = lhs.leading() / cube.leading();
    if (lhs != e * cube) return std::nullopt;
    return e;
}

struct CenterDecomposition {
    RatPoly r;
    std::array<RatPoly, 3> A;
    int kappa = 0;
    Rational alpha, beta, gamma;
    std::optional<Rational> y_tilde_star;
};

inline CenterDecomposition make_decomposition(const RatPoly& r, std::array<RatPoly, 3> A) {
    CenterDecomposition d;
    d.r = r;
    d.A = std::move(A);
    d.kappa = std::max({d.A[0].degree(), d.A[1].degree(), d.A[2].degree(), 0});
    d.alpha = d.A[0].coeff(d.kappa);
    d.beta = d.A[1].coeff(d.kappa);
    d.gamma = d.A[2].coeff(d.kappa);
    if (d.gamma != 0) d.y_tilde_star = -d.beta / (2 * d.gamma);
    return d;
}

/// Searches r(x) = x^{2 nu} + ... with P_i = A_i(r) r' for i = 0,1,2 and A_0(0) < 0.
inline std::optional<CenterDecomposition> check_c2_decomposition(const NewtonSystem& S, int nu) {
    if (S.P(0).is_zero()) throw std::invalid_argument("check_c2_decomposition: P0 = 0");
    std::array<RatPoly, 3> F;
    for (int i = 0; i < 3; ++i) F[static_cast<std::size_t>(i)] = antiderivative(S.P(i));

    auto right_components = [](const RatPoly& f) {
        std::vector<RatPoly> out;
        if (f.degree() < 2) return out;
        for (const auto& d : decompose_complete(f)) out.push_back(d.h);
        out.push_back(normalize_decomposition(RatPoly::x(), f).h);
        return out;
    };
    auto try_drivers = [&](const std::vector<RatPoly>& cands) -> std::optional<CenterDecomposition> {
        std::vector<RatPoly> sorted = cands;
        std::sort(sorted.begin(), sorted.end(), [](const RatPoly& a, const RatPoly& b) { return a.degree() < b.degree(); });
        for (const auto& r : sorted) {
            if (r.valuation() != 2 * nu || r.coeff(2 * nu) != 1) continue;
            std::array<RatPoly, 3> A;
            bool ok = true;
            for (std::size_t i = 0; i < 3 && ok; ++i) {
                auto B = h_adic_expansion(F[i], r);
                ok = B.has_value() && B->coeff(0) == 0;
                if (ok) A[i] = derivative(*B);
            }
            if (!ok || A[0].coeff(0) >= 0) continue;
            return make_decomposition(r, std::move(A));
        }
        return std::nullopt;
    };
    if (auto d = try_drivers(right_components(F[0]))) return d;
    // Only reachable in degenerate orderings; a valid r is a right component of F0.
    std::vector<RatPoly> alt = right_components(F[2]);
    for (const auto& h : right_components(F[1])) alt.push_back(h);
    return try_drivers(alt);
}

enum class LocalCenterTag { C1, C2, C3 };

inline const char* to_string(LocalCenterTag t) {
    switch (t) {
        case LocalCenterTag::C1: return "C1";
        case LocalCenterTag::C2: return "C2";
        case LocalCenterTag::C3: return "C3";
    }
    return "?";
}

struct LocalCenterVerdict {
    bool center = false;
    std::vector<LocalCenterTag> tags;
    std::optional<Rational> darboux_e;
    bool e_quarter = false;  // invariant curve y + 2 P0/P1 = 0 rules out a global center
    std::optional<CenterDecomposition> decomposition;
};

inline LocalCenterVerdict decide_local_center(const NewtonSystem& S) {
    const auto w = local_monodromy_origin(S);
    if (w.origin_case == OriginCase::NotMonodromicOrigin)
        throw std::invalid_argument("decide_local_center: origin is not monodromic");
    LocalCenterVerdict v;
    if (check_c1(S)) v.tags.push_back(LocalCenterTag::C1);
    if (auto e = check_c3_darboux(S)) {
        v.tags.push_back(LocalCenterTag::C3);
        v.darboux_e = e;
        v.e_quarter = (*e == rat(1, 4));
    }
    if (S.m() <= 2) {
        v.decomposition = check_c2_decomposition(S, w.nu);
        if (v.decomposition) v.tags.push_back(LocalCenterTag::C2);
    }
    v.center = !v.tags.empty();
    return v;
}

enum class GlobalCondition { G1, G2i, G2ii, G2iii, G3, Lienard, Potential, None };

inline const char* to_string(GlobalCondition g) {
    switch (g) {
        case GlobalCondition::G1: return "G1";
        case GlobalCondition::G2i: return "G2i";
        case GlobalCondition::G2ii: return "G2ii";
        case GlobalCondition::G2iii: return "G2iii";
        case GlobalCondition::G3: return "G3";
        case GlobalCondition::Lienard: return "Lienard";
        case GlobalCondition::Potential: return "Potential";
        case GlobalCondition::None: return "None";
    }
    return "?";
}

/// Infinity charts U0 (corner) and V0 (shifted y-axis) built from (A_i, kappa).
struct G2Charts {
    PlanarField U0;
    std::optional<PlanarField> V0;
};

inline G2Charts g2_charts(const CenterDecomposition& d) {
    const int k = d.kappa;
    const RatPoly T0 = reverse(d.A[0], k), T1 = reverse(d.A[1], k), T2 = reverse(d.A[2], k);
    G2Charts c;
    c.U0 = {BiRatPoly::monomial(1, k + 2, 0),
            BiRatPoly::from_u(T0, 3) + BiRatPoly::from_u(T1, 2) + BiRatPoly::from_u(T2, 1), "u", "v"};
    if (d.y_tilde_star) {
        const Rational ys = *d.y_tilde_star;
        const PlanarField Vs{BiRatPoly::monomial(-1, k + 2, 1),
                             BiRatPoly::from_u(T0, 0) + BiRatPoly::from_u(T1, 1) + BiRatPoly::from_u(T2, 2), "u", "y"};
        c.V0 = PlanarField{Vs.F.translate_v(ys), Vs.G.translate_v(ys), "u", "y"};
    }
    return c;
}

/// One-sided (u >= 0) analysis of a G2 chart.
struct G2Branch {
    std::string chart;  // "U0" or "V0"
    DescentCertificate descent;
    bool descent_verdict = false;
    std::optional<FractionalSeries> curve;
};

inline G2Branch g2_branch(const std::string& name, const PlanarField& X, int kappa, bool allow_zero) {
    G2Branch b;
    b.chart = name;
    const auto res = m1_descent(X, 2 * kappa + 4, 1, WidthPolicy::HalfPlane);
    b.descent = res.cert;
    b.descent_verdict = res.verdict;
    b.curve = fractional_curve_search(X, Rational(kappa + 2), 1, {allow_zero});
    require_invariant(b.descent_verdict == !b.curve.has_value(),
                      "G2 half-plane descent disagrees with curve search on " + name);
    return b;
}

struct GlobalCenterVerdict {
    bool global_center = false;
    GlobalCondition condition = GlobalCondition::None;
    std::string reason;  // why not, when global_center is false
    std::optional<LocalMonodromyData> origin;
    std::optional<LocalCenterVerdict> local;
    std::optional<G2Branch> g2_branch;
    std::optional<MonodromyVerdict> infinity;
    std::vector<std::pair<std::string, Rational>> trace;
};

inline GlobalCenterVerdict decide_global_center(const NewtonSystem& S) {
    GlobalCenterVerdict v;
    auto reject = [&](const std::string& why) {
        v.reason = why;
        return v;
    };
    if (S.m() >= 3) return reject("DegreeTooHigh");
    if (S.P(0).is_zero()) return reject("P0Zero");
    const int n = S.n();
    if (n % 2 == 0) return reject("NEven");
    if (!x_p0_negative(S.P(0))) return reject("XP0NotNegative");
    v.origin = local_monodromy_origin(S);
    if (v.origin->origin_case == OriginCase::NotMonodromicOrigin) return reject("OriginNotMonodromic");
    v.local = decide_local_center(S);
    const auto& loc = *v.local;
    if (!loc.center) return reject("NotLocalCenter");
    v.infinity = decide_monodromy(S);

    const auto has = [&](LocalCenterTag t) { return std::find(loc.tags.begin(), loc.tags.end(), t) != loc.tags.end(); };
    if (S.P(2).is_zero()) {
        if (v.infinity->monodromic)
            v.condition = S.P(1).is_zero() ? GlobalCondition::Potential : GlobalCondition::Lienard;
        v.global_center = v.infinity->monodromic;
        if (!v.global_center) v.reason = "NotMonodromicAtInfinity";
        return v;
    }

    const RatPoly P0 = S.P(0), P1 = S.P(1), P2 = S.P(2);
    const int l0 = P0.degree(), l1 = P1.degree(), l2 = P2.degree();
    const Rational a = P0.leading(), b = P1.leading(), c = P2.leading();
    v.trace = {{"l0", Rational(l0)}, {"l1", Rational(l1)}, {"l2", Rational(l2)},
               {"a_l0", a},         {"b_l1", b},           {"c_l2", c}};

    std::optional<GlobalCondition> g;
    if (has(LocalCenterTag::C1) && a < 0 && c < 0 && l0 % 2 == 1 && l2 % 2 == 1) g = GlobalCondition::G1;
    if (!g && has(LocalCenterTag::C3) && a < 0 && c < 0 && b * b - 4 * a * c < 0 && l0 + l2 == 2 * l1) {
        require_invariant(c * a == *loc.darboux_e * b * b, "G3: c a != e b^2");
        require_invariant(!loc.e_quarter, "G3 accepted with e = 1/4");
        g = GlobalCondition::G3;
    }
    if (!g && loc.decomposition) {
        const auto& d = *loc.decomposition;
        const auto charts = g2_charts(d);
        v.trace.push_back({"kappa", Rational(d.kappa)});
        v.trace.push_back({"alpha", d.alpha});
        v.trace.push_back({"beta", d.beta});
        v.trace.push_back({"gamma", d.gamma});
        const Rational disc = d.beta * d.beta - 4 * d.alpha * d.gamma;
        if (d.gamma == 0 && d.beta == 0 && d.alpha < 0) {
            v.g2_branch = g2_branch("U0", charts.U0, d.kappa, false);
            if (!v.g2_branch->curve) g = GlobalCondition::G2i;
        } else if (d.gamma < 0 && disc < 0) {
            g = GlobalCondition::G2ii;
        } else if (d.gamma < 0 && disc == 0) {
            v.g2_branch = g2_branch("V0", *charts.V0, d.kappa, true);
            if (!v.g2_branch->curve) g = GlobalCondition::G2iii;
        }
    }
    v.global_center = g.has_value();
    if (g) v.condition = *g;
    else v.reason = "NoGlobalCondition";

    // A local center with a unique equilibrium is global exactly when
    // infinity is monodromic.
    require_invariant(v.global_center == v.infinity->monodromic,
                      "global-center conditions disagree with the monodromy decision at infinity");
    return v;
}

/// Closed-form global-center predicate for the Kukles family; a[i] = a_{n-i,i}.
inline bool kukles_global_center(const Rational& delta, const std::vector<Rational>& a, int n) {
    auto coef = [&](std::size_t i) { return i < a.size() ? a[i] : Rational(0); };
    for (std::size_t i = 0; i < a.size(); ++i)
        if (i != 0 && i != 2 && a[i] != 0) return false;
    return n % 2 == 1 && delta <= 0 && coef(0) <= 0 && coef(2) <= 0 && (delta * delta + coef(0) * coef(0)) != 0;
}

}  // namespace newtonsys
