#pragma once

#include <optional>
#include <vector>

#include "poly.hpp"

namespace newtonsys {

/// Interval endpoint; an empty value means -inf (lower) or +inf (upper).
struct Endpoint {
    std::optional<Rational> value;
    bool closed = false;

    static Endpoint infinite() { return {}; }
    static Endpoint open(const Rational& v) { return {v, false}; }
    static Endpoint closed_at(const Rational& v) { return {v, true}; }
};

struct Interval {
    Endpoint lo;
    Endpoint hi;

    static Interval real_line() { return {}; }
    static Interval positive() { return {Endpoint::open(0), Endpoint::infinite()}; }
    static Interval negative() { return {Endpoint::infinite(), Endpoint::open(0)}; }
};

namespace detail {

inline std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> s{p, derivative(p)};
    while (!s.back().is_zero()) {
        RatPoly r = -divmod(s[s.size() - 2], s.back()).remainder;
        if (r.is_zero()) break;
        s.push_back(std::move(r));
    }
    if (s.back().is_zero()) s.pop_back();
    return s;
}

// Sign of p just to the right (dir=+1) or left (dir=-1) of a: the first
// nonzero Taylor coefficient decides.
inline int one_sided_sign(const RatPoly& p, const Rational& a, int dir) {
    RatPoly d = p;
    int k = 0;
    while (!d.is_zero()) {
        const int s = sign(d(a));
        if (s != 0) return (dir < 0 && (k % 2 == 1)) ? -s : s;
        d = derivative(d);
        ++k;
    }
    return 0;
}

inline int sign_at_infinity(const RatPoly& p, int dir) {
    const int s = sign(p.leading());
    return (dir < 0 && p.degree() % 2 == 1) ? -s : s;
}

inline int sign_changes(const std::vector<int>& signs) {
    int changes = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace detail

/// Square-free part p / gcd(p, p').
inline RatPoly squarefree_part(const RatPoly& p) {
    if (p.degree() < 1) return p;
    return exact_divide(p, gcd(p, derivative(p)));
}

/// Number of distinct real roots of p in the interval.
inline int sturm_real_root_count(const RatPoly& p, const Interval& iv = Interval::real_line()) {
    if (p.is_zero()) throw std::domain_error("sturm_real_root_count: zero polynomial");
    if (p.degree() == 0) return 0;
    if (iv.lo.value && iv.hi.value && *iv.lo.value > *iv.hi.value) return 0;
    const RatPoly q = squarefree_part(p);
    const auto chain = detail::sturm_chain(q);

    std::vector<int> lo_signs, hi_signs;
    for (const auto& s : chain) {
        lo_signs.push_back(iv.lo.value ? detail::one_sided_sign(s, *iv.lo.value, +1)
                                       : detail::sign_at_infinity(s, -1));
        hi_signs.push_back(iv.hi.value ? detail::one_sided_sign(s, *iv.hi.value, -1)
                                       : detail::sign_at_infinity(s, +1));
    }
    int count = 0;
    if (iv.lo.value && iv.hi.value && *iv.lo.value == *iv.hi.value) {
        count = 0;
    } else {
        count = detail::sign_changes(lo_signs) - detail::sign_changes(hi_signs);
    }
    if (iv.lo.value && iv.lo.closed && q(*iv.lo.value) == 0) ++count;
    if (iv.hi.value && iv.hi.closed && q(*iv.hi.value) == 0 &&
        !(iv.lo.value && iv.lo.closed && *iv.lo.value == *iv.hi.value))
        ++count;
    return count;
}

inline int nonzero_real_root_count(const RatPoly& p) {
    return sturm_real_root_count(p, Interval::positive()) +
           sturm_real_root_count(p, Interval::negative());
}

/// Yun's algorithm: p = lc * prod_k f_k^k with f_k monic square-free and
/// pairwise coprime; result[k-1] = f_k.
inline std::vector<RatPoly> squarefree_factorization(const RatPoly& p) {
    std::vector<RatPoly> out;
    if (p.degree() < 1) return out;
    RatPoly a = monic(p);
    RatPoly b = derivative(a);
    RatPoly c = gcd(a, b);
    RatPoly w = exact_divide(a, c);
    RatPoly y = exact_divide(b, c);
    RatPoly z = y - derivative(w);
    while (w.degree() > 0) {
        RatPoly g = gcd(w, z);
        out.push_back(g);
        w = exact_divide(w, g);
        y = exact_divide(z, g);
        z = y - derivative(w);
    }
    while (!out.empty() && out.back().degree() == 0) out.pop_back();
    return out;
}

enum class RootPattern { NoNonzeroRealRoots, Double, SimpleExists, Other };

struct RootClassification {
    RootPattern pattern;
    std::optional<Rational> phi;  // set only for Double
    int multiplicity = 0;
};

/// Classifies the nonzero real roots of p (see RootPattern).
inline RootClassification double_root_factor(const RatPoly& p) {
    if (p.is_zero()) throw std::domain_error("double_root_factor: zero polynomial");
    const RatPoly q = strip_x_power(p);
    if (q.degree() < 1 || nonzero_real_root_count(q) == 0) return {RootPattern::NoNonzeroRealRoots, {}, 0};
    const auto factors = squarefree_factorization(q);
    if (sturm_real_root_count(factors[0]) > 0) return {RootPattern::SimpleExists, {}, 0};
    for (std::size_t k = 2; k < factors.size(); ++k)
        if (sturm_real_root_count(factors[k]) > 0) return {RootPattern::Other, {}, 0};
    // All real roots have multiplicity exactly 2 and live in factors[1].
    const RatPoly& f2 = factors[1];
    if (sturm_real_root_count(f2) != 1) return {RootPattern::Other, {}, 0};
    // Only a linear factor gives a certified rational root; anything else is
    // reported as Other.
    if (f2.degree() == 1) {
        Rational phi = -f2.coeff(0) / f2.coeff(1);
        return {RootPattern::Double, phi, 2};
    }
    return {RootPattern::Other, {}, 0};
}

}  // namespace newtonsys
