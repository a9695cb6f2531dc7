#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "field.hpp"

namespace newtonsys {

/// min over the support of q*i + p*j.
inline int support_sigma(const PlanarField& X, int p, int q) {
    int best = std::numeric_limits<int>::max();
    for (const auto& s : support(X)) best = std::min(best, q * s.i + p * s.j);
    return best;
}

namespace detail {

// P(u1^q, u1^p (phi + v1)).
inline BiRatPoly substitute_weighted(const BiRatPoly& P, int p, int q, const Rational& phi) {
    const BiRatPoly base = BiRatPoly::constant(phi) + BiRatPoly::monomial(1, 0, 1);
    std::vector<BiRatPoly> powers{BiRatPoly::constant(1)};
    BiRatPoly out;
    for (const auto& [e, a] : P.terms()) {
        while (static_cast<int>(powers.size()) <= e.second) powers.push_back(powers.back() * base);
        out += powers[static_cast<std::size_t>(e.second)].shifted(q * e.first + p * e.second, 0) * a;
    }
    return out;
}

}  // namespace detail

/// Quasi-homogeneous blow-up u = u1^q, v = u1^p (phi + v1) with the factor
/// u1^sigma / q removed.
inline PlanarField blowup_u(const PlanarField& X, int p, int q, const Rational& phi) {
    if (p < 1 || q < 1 || gcd_long(p, q) != 1) throw std::invalid_argument("blowup_u: need coprime p, q >= 1");
    const int sigma = support_sigma(X, p, q);
    const BiRatPoly Fs = detail::substitute_weighted(X.F, p, q, phi);
    const BiRatPoly Gs = detail::substitute_weighted(X.G, p, q, phi);
    const BiRatPoly shift = BiRatPoly::constant(phi) + BiRatPoly::monomial(1, 0, 1);
    PlanarField out;
    out.u_name = X.u_name + "1";
    out.v_name = X.v_name + "1";
    out.F = Fs.divide_u_power(sigma + q - 1);
    out.G = Gs.divide_u_power(sigma + p) * Rational(q) - (shift * Fs).divide_u_power(sigma + q) * Rational(p);
    return out;
}

/// Directional blow-up u = w z, v = sign z^p with the largest common power
/// of z removed. Components are returned in (w, z).
inline PlanarField blowup_vertical(const PlanarField& X, int p, int sign) {
    if (p < 1 || (sign != 1 && sign != -1)) throw std::invalid_argument("blowup_vertical: bad p or sign");
    auto sub = [&](const BiRatPoly& P) {
        BiRatPoly out;
        for (const auto& [e, a] : P.terms()) {
            const Rational c = (sign < 0 && e.second % 2) ? Rational(-a) : a;
            out.add_term(e.first, e.first + p * e.second, c);
        }
        return out;
    };
    const BiRatPoly Fs = sub(X.F), Gs = sub(X.G);
    // w' = p z^{p-1} F - sign w G,  z' = sign z G   (times p z^p)
    BiRatPoly W = Fs.shifted(0, p - 1) * Rational(p) - Gs.shifted(1, 0) * Rational(sign);
    BiRatPoly Z = Gs.shifted(0, 1) * Rational(sign);
    int common = std::numeric_limits<int>::max();
    for (const auto* P : {&W, &Z})
        for (const auto& [e, a] : P->terms()) common = std::min(common, e.second);
    if (common == std::numeric_limits<int>::max()) throw InvariantViolation("blowup_vertical: zero field");
    auto strip = [&](const BiRatPoly& P) {
        BiRatPoly out;
        for (const auto& [e, a] : P.terms()) out.add_term(e.first, e.second - common, a);
        return out;
    };
    return {strip(W), strip(Z), "w1", "z1"};
}

}  // namespace newtonsys
