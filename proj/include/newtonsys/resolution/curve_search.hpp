#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "field.hpp"
#include "quadratic_field.hpp"

namespace newtonsys {

/// v = sum c_k u^{e_k/2} on the side u_sign*u >= 0 (u replaced by |u|).
struct FractionalSeries {
    struct Term {
        int twice_exponent;
        QNum coeff;
    };
    std::vector<Term> terms;
    int u_sign = 1;
    Rational truncation_order;  // residual vanishes through this exponent
    bool exact = false;         // residual vanishes identically
};

struct CurveSearchOptions {
    bool allow_zero = false;  // accept Phi = 0 when v = 0 is invariant
};

namespace detail {

using TPoly = std::map<int, QNum>;                  // t-exponent -> coeff
using KBi = std::map<std::pair<int, int>, QNum>;    // (t-exponent, w-exponent) -> coeff

inline void kb_add(KBi& p, std::pair<int, int> e, const QNum& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = p.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

inline KBi kb_mul(const KBi& a, const KBi& b) {
    KBi out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) kb_add(out, {ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return out;
}

// P(t^2, phi(t) + w)
inline KBi substitute_series(const BiRatPoly& P, const TPoly& phi) {
    KBi base;
    for (const auto& [k, c] : phi) kb_add(base, {k, 0}, c);
    kb_add(base, {0, 1}, QNum(1));
    std::vector<KBi> powers{KBi{{{0, 0}, QNum(1)}}};
    KBi out;
    for (const auto& [e, a] : P.terms()) {
        while (static_cast<int>(powers.size()) <= e.second) powers.push_back(kb_mul(powers.back(), base));
        for (const auto& [ep, cp] : powers[static_cast<std::size_t>(e.second)])
            kb_add(out, {ep.first + 2 * e.first, ep.second}, cp * QNum(a));
    }
    return out;
}

struct Shifted {
    KBi G;  // G(t^2, phi + w) - F(t^2, phi + w) * dphi/du
    KBi F;  // F(t^2, phi + w)
};

inline Shifted shifted_fields(const PlanarField& X, const TPoly& phi) {
    Shifted s;
    s.F = substitute_series(X.F, phi);
    s.G = substitute_series(X.G, phi);
    KBi dphi;  // d/du of c t^k is (k/2) c t^{k-2}
    for (const auto& [k, c] : phi) kb_add(dphi, {k - 2, 0}, c * QNum(rat(k, 2)));
    for (const auto& [e, c] : kb_mul(s.F, dphi)) kb_add(s.G, e, -c);
    return s;
}

struct PointData {
    QNum g;
    QNum f;
};

// Weighted points (I, J): G term t^a w^b -> (a, b-1); F term t^a w^b -> (a-2, b).
inline std::map<std::pair<int, int>, PointData> weighted_points(const Shifted& s) {
    std::map<std::pair<int, int>, PointData> pts;
    for (const auto& [e, c] : s.G) pts[{e.first, e.second - 1}].g += c;
    for (const auto& [e, c] : s.F) pts[{e.first - 2, e.second}].f += c;
    return pts;
}

inline bool residual_zero(const Shifted& s) {
    return std::none_of(s.G.begin(), s.G.end(), [](const auto& kv) { return kv.first.second == 0; });
}

inline TPoly to_tpoly(const std::vector<FractionalSeries::Term>& terms) {
    TPoly phi;
    for (const auto& t : terms) phi[t.twice_exponent] = t.coeff;
    return phi;
}

struct Candidate {
    int E;
    int value;          // minimal weighted value, the t-order of the balanced terms
    std::vector<QNum> roots;
};

// Candidate leading terms c t^E with E > e_last, in increasing E.
inline std::vector<Candidate> candidates(const std::map<std::pair<int, int>, PointData>& pts, int e_last) {
    int imin = std::numeric_limits<int>::max(), imax = std::numeric_limits<int>::min();
    int e_max = e_last + 1;
    for (const auto& [ij, d] : pts) {
        imin = std::min(imin, ij.first);
        imax = std::max(imax, ij.first);
        if (!d.f.is_zero()) {
            // resonance where g - (E/2) f = 0
            const QNum r = QNum(2) * d.g / d.f;
            if (r.is_rational() && is_integer(r.a()) && r.a() > e_last && r.a() < 100000)
                e_max = std::max(e_max, static_cast<int>(r.a().get_num().get_si()));
        }
    }
    e_max = std::max(e_max, e_last + (imax - imin) + 1);

    int jmax = 0;
    for (const auto& [ij, d] : pts) jmax = std::max(jmax, ij.second + 1);

    std::vector<Candidate> out;
    for (int E = e_last + 1; E <= e_max; ++E) {
        int best = std::numeric_limits<int>::max();
        for (const auto& [ij, d] : pts) best = std::min(best, ij.first + (ij.second + 1) * E);
        std::vector<QNum> poly(static_cast<std::size_t>(jmax) + 1);
        for (const auto& [ij, d] : pts) {
            if (ij.first + (ij.second + 1) * E != best) continue;
            const QNum coeff = d.g - QNum(rat(E, 2)) * d.f;
            poly.at(static_cast<std::size_t>(ij.second + 1)) += coeff;
        }
        const bool all_zero = std::all_of(poly.begin(), poly.end(), [](const QNum& q) { return q.is_zero(); });
        Candidate cand{E, best, {}};
        if (all_zero)
            cand.roots.push_back(QNum(1));  // resonance: coefficient is free
        else
            cand.roots = nonzero_real_roots(poly);
        if (!cand.roots.empty()) out.push_back(std::move(cand));
    }
    return out;
}

}  // namespace detail

/// Lowest t-exponent (t = |u|^{1/2}) of the invariance residual of v = Phi(u);
/// nullopt when the residual vanishes identically.
inline std::optional<int> residual_order(const PlanarField& X, const FractionalSeries& phi) {
    const PlanarField Y = (phi.u_sign < 0) ? conjugate_u(X) : X;
    const auto s = detail::shifted_fields(Y, detail::to_tpoly(phi.terms));
    std::optional<int> best;
    for (const auto& [e, c] : s.G)
        if (e.second == 0 && (!best || e.first < *best)) best = e.first;
    return best;
}

/// Searches formal invariant curves v = Phi(|u|^{1/2}) through the origin by
/// undetermined coefficients. A branch succeeds once its terms are
/// determined past order_bound (or the curve is exactly invariant).
inline std::optional<FractionalSeries> fractional_curve_search(const PlanarField& X0, const Rational& order_bound,
                                                               int u_sign, CurveSearchOptions opt = {}) {
    if (u_sign != 1 && u_sign != -1) throw std::invalid_argument("fractional_curve_search: u_sign must be +-1");
    const PlanarField X = (u_sign < 0) ? conjugate_u(X0) : X0;
    const Rational twice_bound = 2 * order_bound;

    std::function<std::optional<FractionalSeries>(std::vector<FractionalSeries::Term>, int)> dfs;
    dfs = [&](std::vector<FractionalSeries::Term> terms, int e_last) -> std::optional<FractionalSeries> {
        const auto s = detail::shifted_fields(X, detail::to_tpoly(terms));
        if (detail::residual_zero(s) && (!terms.empty() || opt.allow_zero))
            return FractionalSeries{terms, u_sign, order_bound, true};
        for (const auto& cand : detail::candidates(detail::weighted_points(s), e_last)) {
            for (const auto& c : cand.roots) {
                auto next = terms;
                next.push_back({cand.E, c});
                if (Rational(cand.E) > twice_bound) {
                    // All coefficients through the bound are consistent.
                    return FractionalSeries{next, u_sign, order_bound, false};
                }
                if (auto found = dfs(next, cand.E)) return found;
            }
        }
        return std::nullopt;
    };

    auto result = dfs({}, 0);
    if (result && !result->exact) {
        const auto ord = residual_order(X0, *result);
        require_invariant(!ord || Rational(*ord) > twice_bound,
                          "fractional_curve_search: witness residual does not vanish through the order bound");
        if (ord) result->truncation_order = rat(*ord - 1, 2);
    }
    return result;
}

}  // namespace newtonsys
