#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace newtonsys {

using Exponent = std::pair<int, int>;

/// Sparse bivariate polynomial; terms()[{i,j}] multiplies u^i v^j.
/// Only nonzero coefficients are stored.
class BiRatPoly {
public:
    BiRatPoly() = default;

    static BiRatPoly monomial(const Rational& a, int i, int j) {
        BiRatPoly p;
        p.add_term(i, j, a);
        return p;
    }
    static BiRatPoly constant(const Rational& a) { return monomial(a, 0, 0); }

    /// P(u) v^j
    static BiRatPoly from_u(const RatPoly& p, int j = 0) {
        BiRatPoly out;
        for (int k = 0; k <= p.degree(); ++k) out.add_term(k, j, p.coeff(k));
        return out;
    }
    static BiRatPoly from_v(const RatPoly& p) {
        BiRatPoly out;
        for (int k = 0; k <= p.degree(); ++k) out.add_term(0, k, p.coeff(k));
        return out;
    }

    const std::map<Exponent, Rational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    Rational coeff(int i, int j) const {
        auto it = t_.find({i, j});
        return it == t_.end() ? Rational(0) : it->second;
    }

    void add_term(int i, int j, const Rational& a) {
        if (a == 0) return;
        if (i < 0 || j < 0) throw std::domain_error("BiRatPoly: negative exponent");
        auto [it, fresh] = t_.try_emplace({i, j}, a);
        if (!fresh) {
            it->second += a;
            if (it->second == 0) t_.erase(it);
        }
    }

    int degree_u() const {
        int d = -1;
        for (const auto& [e, a] : t_) d = std::max(d, e.first);
        return d;
    }
    int degree_v() const {
        int d = -1;
        for (const auto& [e, a] : t_) d = std::max(d, e.second);
        return d;
    }
    int min_u() const {
        int d = -1;
        for (const auto& [e, a] : t_) d = (d < 0) ? e.first : std::min(d, e.first);
        return d;
    }

    /// Coefficient of v^j as a polynomial in u.
    RatPoly coeff_of_v(int j) const {
        std::vector<Rational> c;
        for (const auto& [e, a] : t_) {
            if (e.second != j) continue;
            if (static_cast<int>(c.size()) <= e.first) c.resize(static_cast<std::size_t>(e.first) + 1);
            c[static_cast<std::size_t>(e.first)] = a;
        }
        return RatPoly(std::move(c));
    }

    Rational operator()(const Rational& u, const Rational& v) const {
        Rational acc(0);
        for (const auto& [e, a] : t_) acc += a * pow(u, static_cast<unsigned>(e.first)) * pow(v, static_cast<unsigned>(e.second));
        return acc;
    }

    BiRatPoly& operator+=(const BiRatPoly& o) {
        for (const auto& [e, a] : o.t_) add_term(e.first, e.second, a);
        return *this;
    }
    BiRatPoly& operator-=(const BiRatPoly& o) {
        for (const auto& [e, a] : o.t_) add_term(e.first, e.second, -a);
        return *this;
    }
    BiRatPoly& operator*=(const Rational& s) {
        if (s == 0) {
            t_.clear();
            return *this;
        }
        for (auto& [e, a] : t_) a *= s;
        return *this;
    }
    friend BiRatPoly operator+(BiRatPoly a, const BiRatPoly& b) { return a += b; }
    friend BiRatPoly operator-(BiRatPoly a, const BiRatPoly& b) { return a -= b; }
    friend BiRatPoly operator-(BiRatPoly a) { return a *= Rational(-1); }
    friend BiRatPoly operator*(BiRatPoly a, const Rational& s) { return a *= s; }
    friend BiRatPoly operator*(const Rational& s, BiRatPoly a) { return a *= s; }
    friend BiRatPoly operator*(const BiRatPoly& a, const BiRatPoly& b) {
        BiRatPoly out;
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        return out;
    }
    BiRatPoly& operator*=(const BiRatPoly& o) { return *this = *this * o; }

    friend bool operator==(const BiRatPoly& a, const BiRatPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const BiRatPoly& a, const BiRatPoly& b) { return !(a == b); }

    /// Multiplies by u^a v^b.
    BiRatPoly shifted(int a, int b) const {
        BiRatPoly out;
        for (const auto& [e, c] : t_) out.add_term(e.first + a, e.second + b, c);
        return out;
    }

    /// Divides by u^k; throws if some term has u-degree below k.
    BiRatPoly divide_u_power(int k) const {
        BiRatPoly out;
        for (const auto& [e, c] : t_) {
            if (e.first < k) throw InvariantViolation("divide_u_power: non-exact monomial division");
            out.add_term(e.first - k, e.second, c);
        }
        return out;
    }

    /// P(-u, v).
    BiRatPoly negate_u() const {
        BiRatPoly out;
        for (const auto& [e, c] : t_) out.add_term(e.first, e.second, (e.first % 2) ? Rational(-c) : c);
        return out;
    }
    /// P(u, -v).
    BiRatPoly negate_v() const {
        BiRatPoly out;
        for (const auto& [e, c] : t_) out.add_term(e.first, e.second, (e.second % 2) ? Rational(-c) : c);
        return out;
    }

    /// P(u, v + c).
    BiRatPoly translate_v(const Rational& c) const {
        if (c == 0) return *this;
        BiRatPoly out;
        const BiRatPoly shift = monomial(1, 0, 1) + constant(c);
        std::vector<BiRatPoly> powers{constant(1)};
        for (const auto& [e, a] : t_) {
            while (static_cast<int>(powers.size()) <= e.second) powers.push_back(powers.back() * shift);
            out += powers[static_cast<std::size_t>(e.second)].shifted(e.first, 0) * a;
        }
        return out;
    }

    std::string str(const std::string& u = "u", const std::string& v = "v") const;

private:
    std::map<Exponent, Rational> t_;
};

inline std::string BiRatPoly::str(const std::string& u, const std::string& v) const {
    if (t_.empty()) return "0";
    std::string out;
    // Descending total degree reads more naturally.
    std::vector<std::pair<Exponent, Rational>> items(t_.begin(), t_.end());
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        const int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first.first > b.first.first;
    });
    for (const auto& [e, a] : items) {
        const Rational mag = abs(a);
        if (out.empty())
            out += (a < 0 ? "-" : "");
        else
            out += (a < 0 ? " - " : " + ");
        std::string mono;
        auto var = [&](const std::string& name, int k) {
            if (k == 0) return;
            if (!mono.empty()) mono += "*";
            mono += name;
            if (k > 1) mono += "^" + std::to_string(k);
        };
        var(u, e.first);
        var(v, e.second);
        if (mono.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.get_str() + "*" + mono;
    }
    return out;
}

}  // namespace newtonsys
