#pragma once

#include <compare>
#include <set>
#include <string>

#include "newtonsys/core/bipoly.hpp"

namespace newtonsys {

/// Vector field F d/du + G d/dv with polynomial components.
struct PlanarField {
    BiRatPoly F;
    BiRatPoly G;
    std::string u_name = "u";
    std::string v_name = "v";

    friend bool operator==(const PlanarField& a, const PlanarField& b) { return a.F == b.F && a.G == b.G; }
};

/// Lattice point (i,j) of the support; i or j may be -1.
struct SupportPoint {
    int i = 0;
    int j = 0;
    auto operator<=>(const SupportPoint&) const = default;
};

/// Points (i,j) with (f_{i+1,j}, g_{i,j+1}) != (0,0).
inline std::set<SupportPoint> support(const PlanarField& X) {
    if (X.F.is_zero() && X.G.is_zero()) throw std::domain_error("support: zero field");
    std::set<SupportPoint> s;
    for (const auto& [e, a] : X.F.terms()) s.insert({e.first - 1, e.second});
    for (const auto& [e, a] : X.G.terms()) s.insert({e.first, e.second - 1});
    return s;
}

inline Rational f_coeff(const PlanarField& X, SupportPoint p) {
    return (p.i + 1 < 0 || p.j < 0) ? Rational(0) : X.F.coeff(p.i + 1, p.j);
}
inline Rational g_coeff(const PlanarField& X, SupportPoint p) {
    return (p.i < 0 || p.j + 1 < 0) ? Rational(0) : X.G.coeff(p.i, p.j + 1);
}

/// u -> -u conjugation: F(u,v) -> -F(-u,v), G(u,v) -> G(-u,v).
inline PlanarField conjugate_u(const PlanarField& X) {
    return {-X.F.negate_u(), X.G.negate_u(), X.u_name, X.v_name};
}

/// v -> -v conjugation: F(u,v) -> F(u,-v), G(u,v) -> -G(u,-v).
inline PlanarField conjugate_v(const PlanarField& X) {
    return {X.F.negate_v(), -X.G.negate_v(), X.u_name, X.v_name};
}

}  // namespace newtonsys
