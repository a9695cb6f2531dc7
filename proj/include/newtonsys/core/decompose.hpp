#pragma once

#include <optional>
#include <vector>

#include "poly.hpp"

namespace newtonsys {

struct Decomposition {
    RatPoly g;  // outer
    RatPoly h;  // inner, h(0)=0, lowest nonzero coefficient 1
};

/// Expands f in powers of h: f = sum_k b_k h^k with constant b_k.
/// Returns the outer polynomial B, or nothing if some remainder is not constant.
inline std::optional<RatPoly> h_adic_expansion(const RatPoly& f, const RatPoly& h) {
    if (h.degree() < 1) throw std::domain_error("h_adic_expansion: deg h < 1");
    std::vector<Rational> b;
    RatPoly rest = f;
    while (!rest.is_zero()) {
        auto [q, r] = divmod(rest, h);
        if (r.degree() > 0) return std::nullopt;
        b.push_back(r.coeff(0));
        rest = std::move(q);
    }
    return RatPoly(std::move(b));
}

/// Rescales (g,h) so that h's lowest nonzero coefficient is 1 and h(0)=0.
inline Decomposition normalize_decomposition(RatPoly g, RatPoly h) {
    const Rational h0 = h.coeff(0);
    if (h0 != 0) {
        h -= RatPoly::constant(h0);
        g = compose(g, RatPoly{h0, Rational(1)});
    }
    const Rational c = h.coeff(h.valuation());
    h *= Rational(1) / c;
    g = compose(g, RatPoly::monomial(c, 1));
    return {std::move(g), std::move(h)};
}

/// Right component of degree s of F, if one exists (unique up to affine maps).
inline std::optional<Decomposition> decompose_with_inner_degree(const RatPoly& F, int s) {
    const int N = F.degree();
    if (s < 1 || N % s != 0) return std::nullopt;
    const unsigned r = static_cast<unsigned>(N / s);
    const RatPoly Fm = monic(F);
    // h = x^s + h_{s-1} x^{s-1} + ... + h_1 x; the coefficients of x^{N-k},
    // k < s, of h^r are linear in h_{s-k} given the higher ones.
    std::vector<Rational> hc(static_cast<std::size_t>(s) + 1);
    hc[static_cast<std::size_t>(s)] = 1;
    for (int k = 1; k < s; ++k) {
        const Rational cur = pow(RatPoly(hc), r).coeff(N - k);
        hc[static_cast<std::size_t>(s - k)] = (Fm.coeff(N - k) - cur) / Rational(static_cast<long>(r));
    }
    const RatPoly h(hc);
    auto g = h_adic_expansion(F, h);
    if (!g) return std::nullopt;
    auto d = normalize_decomposition(*g, h);
    if (compose(d.g, d.h) != F) return std::nullopt;
    return d;
}

/// All decompositions F = g(h) with 1 < deg h < deg F, one per inner degree.
inline std::vector<Decomposition> decompose_complete(const RatPoly& F) {
    if (F.degree() < 2) throw std::domain_error("decompose_complete: deg F < 2");
    std::vector<Decomposition> out;
    for (int s = 2; s < F.degree(); ++s)
        if (auto d = decompose_with_inner_degree(F, s)) out.push_back(std::move(*d));
    return out;
}

}  // namespace newtonsys
