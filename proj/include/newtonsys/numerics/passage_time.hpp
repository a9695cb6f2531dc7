#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "dopri.hpp"
#include "newtonsys/core/rational.hpp"

namespace newtonsys {

enum class PassageKind { Side, HyperbolicCorner, SemiHyperbolicCorner };
enum class PassageLimit { Zero, Finite, Infinite, Exponential };

inline const char* to_string(PassageKind k) {
    switch (k) {
        case PassageKind::Side: return "Side";
        case PassageKind::HyperbolicCorner: return "HyperbolicCorner";
        case PassageKind::SemiHyperbolicCorner: return "SemiHyperbolicCorner";
    }
    return "?";
}

inline const char* to_string(PassageLimit l) {
    switch (l) {
        case PassageLimit::Zero: return "Zero";
        case PassageLimit::Finite: return "Finite";
        case PassageLimit::Infinite: return "Infinite";
        case PassageLimit::Exponential: return "Exponential";
    }
    return "?";
}

/// Parameters of the local normal forms. Side uses q; hyperbolic uses p, q,
/// lambda; semi-hyperbolic uses all of them.
struct PassageParams {
    Rational p = 0, q = 0, lambda = 1, a = 0;
    int k = 2;
};

/// Order s^exponent |ln s|^log_power as s -> 0+. For the Exponential limit
/// the order is s^exponent exp(exp_coeff s^exp_power).
struct PassageOrder {
    Rational exponent = 0;
    int log_power = 0;
    PassageLimit limit = PassageLimit::Finite;
    Rational exp_coeff = 0;
    Rational exp_power = 0;
};

struct PassageTimeClass {
    PassageKind kind;
    PassageParams params;
    PassageOrder order;
};

inline PassageLimit limit_of(const Rational& exponent, int log_power) {
    if (exponent > 0) return PassageLimit::Zero;
    if (exponent < 0 || log_power > 0) return PassageLimit::Infinite;
    return PassageLimit::Finite;
}

inline PassageTimeClass passage_time_class(PassageKind kind, const PassageParams& prm) {
    PassageTimeClass out{kind, prm, {}};
    PassageOrder& o = out.order;
    if (kind != PassageKind::Side && prm.lambda <= 0)
        throw std::invalid_argument("passage_time_class: lambda must be positive");
    switch (kind) {
        case PassageKind::Side:
            o.exponent = prm.q;
            break;
        case PassageKind::HyperbolicCorner: {
            const Rational lq = prm.lambda * prm.q;
            o.exponent = std::min(prm.p, lq);
            o.log_power = prm.p == lq ? 1 : 0;
            break;
        }
        case PassageKind::SemiHyperbolicCorner: {
            if (prm.k < 2) throw std::invalid_argument("passage_time_class: k must be at least 2");
            if (prm.q > 0) {
                o.exponent = prm.p;
            } else if (prm.q == 0 && prm.p >= prm.k) {
                o.exponent = 0;
            } else if (prm.q == 0) {
                o.exponent = prm.p - prm.k + 1;
                o.log_power = prm.p == prm.k - 1 ? 1 : 0;
            } else {
                o.exponent = -prm.a * prm.lambda * prm.q;
                o.exp_coeff = prm.lambda * prm.q / Rational(1 - prm.k);
                o.exp_power = 1 - prm.k;
                o.limit = PassageLimit::Exponential;
                return out;
            }
            break;
        }
    }
    o.limit = limit_of(o.exponent, o.log_power);
    return out;
}

namespace numerics {

/// Passage time of the model field from the entry section at parameter s to
/// the exit section. Corners are integrated along the orbit with ln x as the
/// independent variable; state (tau, t) where tau is the time of the regular
/// part and dt/dtau = x^p y^q restores the singular factor.
inline double model_passage_time(PassageKind kind, const PassageParams& prm, double s, double eta = 0.5) {
    const double p = prm.p.get_d(), q = prm.q.get_d(), lam = prm.lambda.get_d(), a = prm.a.get_d();
    const int k = prm.k;
    using St = Dopri5<2>::State;
    Dopri5<2>::Rhs f;
    double xi0 = std::log(s), xi1 = std::log(eta);
    switch (kind) {
        case PassageKind::Side:
            // x' = 1/y^q along y = s, from x = 0 to x = 1.
            f = [s, q](double, const St&) { return St{1.0, std::pow(s, q)}; };
            xi0 = 0.0;
            xi1 = 1.0;
            break;
        case PassageKind::HyperbolicCorner:
            // x' = x, y' = -lambda y from (s, eta) to x = eta.
            f = [=](double xi, const St& z) {
                const double x = std::exp(xi), y = eta * std::exp(-lam * z[0]);
                return St{1.0, std::pow(x, p) * std::pow(y, q)};
            };
            break;
        case PassageKind::SemiHyperbolicCorner:
            // x' = x^k + a x^(2k-1), y' = -lambda y from (s, eta) to x = eta.
            f = [=](double xi, const St& z) {
                const double x = std::exp(xi), y = eta * std::exp(-lam * z[0]);
                const double dtau = std::pow(x, 1 - k) / (1.0 + a * std::pow(x, k - 1));
                return St{dtau, dtau * std::pow(x, p) * std::pow(y, q)};
            };
            break;
    }
    Dopri5<2> dp(f, 1e-11, 1e-300);
    Dopri5<2>::Step st;
    St z{0.0, 0.0};
    double xi = xi0, h = (xi1 - xi0) / 100;
    for (long n = 0; n < 1'000'000 && xi < xi1; ++n) {
        h = std::min(h, xi1 - xi);
        double h_next = h;
        if (!dp.attempt(xi, z, h, st, h_next)) {
            h = h_next;
            continue;
        }
        xi = h == xi1 - xi ? xi1 : xi + h;
        z = st.y1;
        h = h_next;
    }
    if (xi < xi1 || !std::isfinite(z[1])) throw std::runtime_error("model_passage_time: exit section not reached");
    return z[1];
}

struct PassageFit {
    double exponent = 0;  // slope of log(t / |ln s|^log_power) against log s
    std::vector<double> s, t;
};

/// Least-squares slope over geometrically spaced s in [s_min, s_max].
inline PassageFit fit_passage_exponent(PassageKind kind, const PassageParams& prm, int log_power,
                                       double s_min = 1e-8, double s_max = 1e-3, int samples = 12) {
    PassageFit fit;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < samples; ++i) {
        const double s = s_min * std::pow(s_max / s_min, double(i) / (samples - 1));
        const double t = model_passage_time(kind, prm, s);
        fit.s.push_back(s);
        fit.t.push_back(t);
        const double X = std::log(s), Y = std::log(t / std::pow(std::abs(std::log(s)), log_power));
        sx += X;
        sy += Y;
        sxx += X * X;
        sxy += X * Y;
    }
    fit.exponent = (samples * sxy - sx * sy) / (samples * sxx - sx * sx);
    return fit;
}

}  // namespace numerics
}  // namespace newtonsys
