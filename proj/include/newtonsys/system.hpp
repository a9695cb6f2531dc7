#pragma once

#include <string>
#include <vector>

#include "core/bipoly.hpp"
#include "core/poly.hpp"

namespace newtonsys {

/// x' = y, y' = sum_i P_i(x) y^i.
class NewtonSystem {
public:
    NewtonSystem() = default;
    explicit NewtonSystem(std::vector<RatPoly> P) : P_(std::move(P)) {
        while (!P_.empty() && P_.back().is_zero()) P_.pop_back();
    }

    /// From y' written as a polynomial in (x, y).
    static NewtonSystem from_rhs(const BiRatPoly& rhs) {
        std::vector<RatPoly> P(static_cast<std::size_t>(std::max(rhs.degree_v(), 0)) + 1);
        for (std::size_t i = 0; i < P.size(); ++i) P[i] = rhs.coeff_of_v(static_cast<int>(i));
        return NewtonSystem(std::move(P));
    }

    const std::vector<RatPoly>& P() const { return P_; }
    /// P_i, zero beyond the stored range.
    RatPoly P(int i) const { return (i >= 0 && i < static_cast<int>(P_.size())) ? P_[static_cast<std::size_t>(i)] : RatPoly{}; }

    /// Highest y-power with nonzero coefficient; -1 for the zero system.
    int m() const { return static_cast<int>(P_.size()) - 1; }
    /// max deg P_i.
    int n() const {
        int d = -1;
        for (const auto& p : P_) d = std::max(d, p.degree());
        return d;
    }
    /// Coefficients of x^n in P_0, P_1, P_2.
    Rational a_n() const { return P(0).coeff(n()); }
    Rational b_n() const { return P(1).coeff(n()); }
    Rational c_n() const { return P(2).coeff(n()); }

    BiRatPoly rhs() const {
        BiRatPoly out;
        for (std::size_t i = 0; i < P_.size(); ++i) out += BiRatPoly::from_u(P_[i], static_cast<int>(i));
        return out;
    }

    /// Multiplies every P_i by s.
    NewtonSystem scaled(const Rational& s) const {
        std::vector<RatPoly> Q = P_;
        for (auto& q : Q) q *= s;
        return NewtonSystem(std::move(Q));
    }

    double eval_rhs(double x, double y) const {
        double acc = 0.0;
        for (auto it = P_.rbegin(); it != P_.rend(); ++it) acc = acc * y + it->eval(x);
        return acc;
    }

    friend bool operator==(const NewtonSystem& a, const NewtonSystem& b) { return a.P_ == b.P_; }

private:
    std::vector<RatPoly> P_;
};

/// Kukles-type system y' = delta x + sum_i a_{n-i,i} x^{n-i} y^i.
inline NewtonSystem kukles_system(const Rational& delta, const std::vector<Rational>& a, int n) {
    std::vector<RatPoly> P(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) P[i] = RatPoly::monomial(a[i], n - static_cast<int>(i));
    if (P.empty()) P.resize(1);
    P[0] += RatPoly::monomial(delta, 1);
    return NewtonSystem(std::move(P));
}

}  // namespace newtonsys
