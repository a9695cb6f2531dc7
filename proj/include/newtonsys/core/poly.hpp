#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace newtonsys {

/// Dense univariate polynomial over Q; coeffs()[k] multiplies x^k.
/// The zero polynomial has degree -1.
class RatPoly {
public:
    static constexpr int zero_degree = -1;

    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
    RatPoly(std::initializer_list<Rational> c) : c_(c) { trim(); }

    static RatPoly constant(const Rational& a) { return RatPoly(std::vector<Rational>{a}); }
    static RatPoly monomial(const Rational& a, int k) {
        std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
        c[static_cast<std::size_t>(k)] = a;
        return RatPoly(std::move(c));
    }
    static RatPoly x() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational coeff(int k) const {
        if (k < 0 || k > degree()) return Rational(0);
        return c_[static_cast<std::size_t>(k)];
    }
    Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }

    /// Index of the lowest nonzero coefficient; -1 for the zero polynomial.
    int valuation() const {
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (c_[k] != 0) return static_cast<int>(k);
        return -1;
    }

    Rational operator()(const Rational& v) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
        return acc;
    }

    double eval(double v) const {
        double acc = 0.0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + it->get_d();
        return acc;
    }

    RatPoly& operator+=(const RatPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    RatPoly& operator-=(const RatPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    RatPoly& operator*=(const Rational& a) {
        for (auto& x : c_) x *= a;
        trim();
        return *this;
    }

    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator-(RatPoly a) { return a *= Rational(-1); }
    friend RatPoly operator*(RatPoly a, const Rational& s) { return a *= s; }
    friend RatPoly operator*(const Rational& s, RatPoly a) { return a *= s; }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return RatPoly(std::move(c));
    }
    RatPoly& operator*=(const RatPoly& o) { return *this = *this * o; }

    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

    std::string str(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline RatPoly pow(const RatPoly& p, unsigned e) {
    RatPoly r = RatPoly::constant(1);
    RatPoly b = p;
    while (e > 0) {
        if (e & 1u) r *= b;
        e >>= 1u;
        if (e > 0) b *= b;
    }
    return r;
}

inline RatPoly derivative(const RatPoly& p) {
    if (p.degree() < 1) return {};
    std::vector<Rational> c(static_cast<std::size_t>(p.degree()));
    for (int k = 1; k <= p.degree(); ++k) c[static_cast<std::size_t>(k - 1)] = p.coeff(k) * k;
    return RatPoly(std::move(c));
}

/// Antiderivative with zero constant term.
inline RatPoly antiderivative(const RatPoly& p) {
    if (p.is_zero()) return {};
    std::vector<Rational> c(static_cast<std::size_t>(p.degree()) + 2);
    for (int k = 0; k <= p.degree(); ++k) c[static_cast<std::size_t>(k + 1)] = p.coeff(k) / (k + 1);
    return RatPoly(std::move(c));
}

/// g(h(x)) by Horner.
inline RatPoly compose(const RatPoly& g, const RatPoly& h) {
    RatPoly acc;
    for (int k = g.degree(); k >= 0; --k) acc = acc * h + RatPoly::constant(g.coeff(k));
    return acc;
}

/// u^n P(1/u).
inline RatPoly reverse(const RatPoly& p, int n) {
    if (n < p.degree()) throw InputError("reverse: n < deg P");
    if (p.is_zero()) return {};
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= p.degree(); ++k) c[static_cast<std::size_t>(n - k)] = p.coeff(k);
    return RatPoly(std::move(c));
}

struct DivMod {
    RatPoly quotient;
    RatPoly remainder;
};

inline DivMod divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> r = a.coeffs();
    const int db = b.degree();
    const Rational lb = b.leading();
    if (a.degree() < db) return {RatPoly{}, a};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db) + 1);
    for (int k = a.degree(); k >= db; --k) {
        const Rational t = r[static_cast<std::size_t>(k)] / lb;
        q[static_cast<std::size_t>(k - db)] = t;
        if (t == 0) continue;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= t * b.coeff(j);
    }
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

inline RatPoly exact_divide(const RatPoly& a, const RatPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("exact_divide: nonzero remainder");
    return q;
}

inline RatPoly monic(const RatPoly& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / p.leading());
}

/// Monic gcd; gcd(0,0)=0.
inline RatPoly gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

/// Divides out the largest power of x.
inline RatPoly strip_x_power(const RatPoly& p) {
    const int v = p.valuation();
    if (v <= 0) return p;
    return RatPoly(std::vector<Rational>(p.coeffs().begin() + v, p.coeffs().end()));
}

inline std::string RatPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational& a = c_[static_cast<std::size_t>(k)];
        if (a == 0) continue;
        Rational mag = abs(a);
        if (out.empty())
            out += (a < 0 ? "-" : "");
        else
            out += (a < 0 ? " - " : " + ");
        const bool unit = (mag == 1);
        if (!unit || k == 0) out += mag.get_str();
        if (k > 0) {
            if (!unit) out += "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const RatPoly& p) { return os << p.str(); }

}  // namespace newtonsys
