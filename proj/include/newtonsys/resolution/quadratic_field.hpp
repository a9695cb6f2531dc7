#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "newtonsys/core/rational.hpp"

namespace newtonsys {

/// Raised when a root would need a second, nested quadratic extension.
struct NestedRadical : std::domain_error {
    using std::domain_error::domain_error;
};

/// a + b*sqrt(d) with d > 1 a non-square integer, or d = 0 for plain rationals.
class QNum {
public:
    QNum() = default;
    QNum(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
    QNum(long a) : a_(a) {}             // NOLINT(google-explicit-constructor)
    QNum(const Rational& a, const Rational& b, const Integer& d) : a_(a), b_(b), d_(d) { normalize(); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Integer& d() const { return d_; }
    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    int sign() const {
        const int sa = newtonsys::sign(a_), sb = newtonsys::sign(b_);
        if (sb == 0) return sa;
        if (sa == 0 || sa == sb) return sb;
        // opposite signs: compare a^2 with b^2 d
        const Rational lhs = a_ * a_, rhs = b_ * b_ * Rational(d_);
        return lhs > rhs ? sa : (lhs < rhs ? sb : 0);
    }

    double to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d()); }

    friend QNum operator+(const QNum& x, const QNum& y) {
        const Integer d = common(x, y);
        return QNum(x.a_ + y.a_, x.b_in(d) + y.b_in(d), d);
    }
    friend QNum operator-(const QNum& x) { return QNum(-x.a_, -x.b_, x.d_); }
    friend QNum operator-(const QNum& x, const QNum& y) { return x + (-y); }
    friend QNum operator*(const QNum& x, const QNum& y) {
        const Integer d = common(x, y);
        const Rational xb = x.b_in(d), yb = y.b_in(d);
        return QNum(x.a_ * y.a_ + xb * yb * Rational(d), x.a_ * yb + xb * y.a_, d);
    }
    QNum inverse() const {
        if (is_zero()) throw std::domain_error("QNum: division by zero");
        const Rational n = a_ * a_ - b_ * b_ * Rational(d_);
        return QNum(a_ / n, -b_ / n, d_);
    }
    friend QNum operator/(const QNum& x, const QNum& y) { return x * y.inverse(); }
    QNum& operator+=(const QNum& y) { return *this = *this + y; }
    QNum& operator-=(const QNum& y) { return *this = *this - y; }
    QNum& operator*=(const QNum& y) { return *this = *this * y; }

    friend bool operator==(const QNum& x, const QNum& y) { return (x - y).is_zero(); }
    friend bool operator!=(const QNum& x, const QNum& y) { return !(x == y); }

    std::string str() const {
        if (b_ == 0) return a_.get_str();
        std::string s = (a_ != 0) ? a_.get_str() + (b_ > 0 ? " + " : " - ") : (b_ < 0 ? "-" : "");
        const Rational mb = abs(b_);
        if (mb != 1) s += mb.get_str() + "*";
        return s + "sqrt(" + d_.get_str() + ")";
    }

    /// Square root within Q or Q(sqrt d); a fresh extension is opened from Q
    /// when needed. Requires sign() >= 0.
    std::optional<QNum> sqrt_in_field() const;

private:
    void normalize() {
        if (b_ == 0) d_ = 0;
        if (d_ == 0) b_ = 0;
    }

    // sqrt(y.d) expressed over sqrt(d) when both generate the same field.
    Rational b_in(const Integer& d) const {
        if (b_ == 0 || d_ == d) return b_;
        const Integer prod = d_ * d;
        if (!is_perfect_square(prod)) throw NestedRadical("QNum: incompatible extensions sqrt(" + d_.get_str() + "), sqrt(" + d.get_str() + ")");
        // sqrt(d_) = sqrt(d_ d)/sqrt(d) = (sqrt(d_ d)/d) sqrt(d)
        return b_ * Rational(isqrt(prod)) / Rational(d);
    }
    static Integer common(const QNum& x, const QNum& y) {
        if (x.b_ == 0) return y.d_;
        if (y.b_ == 0) return x.d_;
        return x.d_;
    }

    Rational a_{0};
    Rational b_{0};
    Integer d_{0};
};

namespace detail {

// Splits n > 0 into s^2 * r, stripping small square factors from r.
inline void square_split(Integer n, Integer& s, Integer& r) {
    s = 1;
    for (unsigned long p = 2; p < 2000 && p * p <= n; ++p) {
        const Integer pp = Integer(p) * p;
        while (n % pp == 0) {
            n /= pp;
            s *= p;
        }
    }
    if (is_perfect_square(n)) {
        s *= isqrt(n);
        n = 1;
    }
    r = n;
}

inline std::optional<Rational> rational_sqrt(const Rational& x) {
    if (x < 0) return std::nullopt;
    if (is_perfect_square(x.get_num()) && is_perfect_square(x.get_den()))
        return rat(isqrt(x.get_num()), isqrt(x.get_den()));
    return std::nullopt;
}

}  // namespace detail

inline std::optional<QNum> QNum::sqrt_in_field() const {
    if (sign() < 0) return std::nullopt;
    if (is_zero()) return QNum(0);
    if (b_ == 0) {
        if (auto r = detail::rational_sqrt(a_)) return QNum(*r);
        if (d_ != 0) {
            // sqrt(a) = y sqrt(d) with y^2 = a/d
            if (auto y = detail::rational_sqrt(a_ / Rational(d_))) return QNum(0, *y, d_);
            throw NestedRadical("sqrt of " + a_.get_str() + " outside Q(sqrt " + d_.get_str() + ")");
        }
        // open Q(sqrt r): a = N/D, sqrt(a) = sqrt(N D)/D = s sqrt(r)/D
        Integer s, r;
        detail::square_split(a_.get_num() * a_.get_den(), s, r);
        return QNum(0, rat(s, a_.get_den()), r);
    }
    // (x + y sqrt d)^2 = a + b sqrt d  =>  x^2 = (a +- sqrt(a^2 - d b^2)) / 2, y = b / (2x)
    const auto disc = detail::rational_sqrt(a_ * a_ - b_ * b_ * Rational(d_));
    if (disc) {
        for (const Rational& x2 : {Rational((a_ + *disc) / 2), Rational((a_ - *disc) / 2)}) {
            if (auto x = detail::rational_sqrt(x2); x && *x != 0) {
                QNum cand(*x, b_ / (2 * *x), d_);
                if (cand.sign() < 0) cand = -cand;
                return cand;
            }
        }
    }
    throw NestedRadical("sqrt of " + str() + " needs a nested radical");
}

/// Nonzero real roots of sum c[k] z^k over the current field.
inline std::vector<QNum> nonzero_real_roots(std::vector<QNum> c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    std::size_t low = 0;
    while (low < c.size() && c[low].is_zero()) ++low;
    c.erase(c.begin(), c.begin() + static_cast<long>(low));
    std::vector<QNum> roots;
    if (c.size() <= 1) return roots;
    if (c.size() == 2) {
        roots.push_back(-c[0] / c[1]);
        return roots;
    }
    if (c.size() == 3) {
        const QNum disc = c[1] * c[1] - QNum(4) * c[0] * c[2];
        const int s = disc.sign();
        if (s < 0) return roots;
        const QNum two_a = QNum(2) * c[2];
        if (s == 0) {
            roots.push_back(-c[1] / two_a);
            return roots;
        }
        const QNum r = *disc.sqrt_in_field();
        roots.push_back((-c[1] + r) / two_a);
        roots.push_back((-c[1] - r) / two_a);
        return roots;
    }
    if (c.size() == 4) {
        // Rational cubic: peel off a rational root, then solve the quadratic.
        for (const auto& x : c)
            if (!x.is_rational()) throw NestedRadical("cubic over a quadratic extension");
        Integer lcm_den = 1;
        for (const auto& x : c) lcm_den = lcm_den * x.a().get_den() / gcd_int(lcm_den, x.a().get_den());
        std::vector<Integer> z;
        for (const auto& x : c) z.push_back(Rational(x.a() * Rational(lcm_den)).get_num());
        auto divisors = [](Integer n) {
            std::vector<Integer> out;
            if (n < 0) n = -n;
            if (n > 1000000) throw NestedRadical("cubic with large constant term");
            for (Integer k = 1; k * k <= n; ++k)
                if (n % k == 0) {
                    out.push_back(k);
                    if (k * k != n) out.push_back(n / k);
                }
            return out;
        };
        for (const auto& num : divisors(z[0]))
            for (const auto& den : divisors(z[3]))
                for (int sgn : {1, -1}) {
                    const Rational x = rat(num * sgn, den);
                    Rational v = 0;
                    for (int k = 3; k >= 0; --k) v = v * x + c[static_cast<std::size_t>(k)].a();
                    if (v != 0) continue;
                    // synthetic division
                    const Rational q2 = c[3].a();
                    const Rational q1 = c[2].a() + x * q2;
                    const Rational q0 = c[1].a() + x * q1;
                    roots = nonzero_real_roots({QNum(q0), QNum(q1), QNum(q2)});
                    bool dup = false;
                    for (const auto& r : roots) dup = dup || (r == QNum(x));
                    if (!dup) roots.push_back(QNum(x));
                    return roots;
                }
        throw NestedRadical("irreducible cubic coefficient equation");
    }
    throw NestedRadical("coefficient equation of degree > 3");
}

}  // namespace newtonsys
