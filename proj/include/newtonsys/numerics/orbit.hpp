#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "dopri.hpp"
#include "newtonsys/system.hpp"

namespace newtonsys::numerics {

struct IntegratorConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double max_time = 1e4;        // physical time
    long max_steps = 2'000'000;
    double escape_radius = 1e6;   // applies to |x|
    double event_tol = 1e-13;     // bisection tolerance for section crossings
};

/// Double-precision copy of the P_i for fast evaluation.
class FloatSystem {
public:
    explicit FloatSystem(const NewtonSystem& S) {
        for (const auto& p : S.P()) {
            std::vector<double> c;
            for (const auto& a : p.coeffs()) c.push_back(a.get_d());
            P_.push_back(std::move(c));
        }
    }
    double P(std::size_t i, double x) const {
        if (i >= P_.size()) return 0.0;
        double acc = 0.0;
        for (auto it = P_[i].rbegin(); it != P_[i].rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    std::size_t size() const { return P_.size(); }

    /// Field in (x, s = asinh y, t) with respect to tau, dt/dtau = 1/cosh s:
    /// x' = tanh s, s' = sum_i P_i(x) sinh^i s / cosh^2 s, t' = 1/cosh s.
    std::array<double, 3> compact_rhs(double x, double s) const {
        const double th = std::tanh(s);
        const double sech = 1.0 / std::cosh(s);
        double ds = P(0, x) * sech * sech;
        if (size() > 1) ds += P(1, x) * th * sech;
        if (size() > 2) ds += P(2, x) * th * th;
        if (size() > 3) {
            const double sh = std::sinh(s);
            double pw = sh;  // P_i tanh^2 sinh^{i-2}
            for (std::size_t i = 3; i < size(); ++i) {
                ds += P(i, x) * th * th * pw;
                pw *= sh;
            }
        }
        return {th, ds, sech};
    }

private:
    std::vector<std::vector<double>> P_;
};

enum class Termination { SectionReturn, Escape, MaxTime, MaxSteps, StepUnderflow, Stopped };

inline const char* to_string(Termination t) {
    switch (t) {
        case Termination::SectionReturn: return "SectionReturn";
        case Termination::Escape: return "Escape";
        case Termination::MaxTime: return "MaxTime";
        case Termination::MaxSteps: return "MaxSteps";
        case Termination::StepUnderflow: return "StepUnderflow";
        case Termination::Stopped: return "Stopped";
    }
    return "?";
}

/// Integrates in compactified coordinates. `on_step` sees every accepted
/// step (dense output available) and returns false to stop.
class OrbitIntegrator {
public:
    using Stepper = Dopri5<3>;
    using State = Stepper::State;

    OrbitIntegrator(const NewtonSystem& S, IntegratorConfig cfg, int direction = 1)
        : fs_(S), cfg_(cfg), dir_(direction),
          stepper_([this](double, const State& y) {
              auto f = fs_.compact_rhs(y[0], y[1]);
              return State{dir_ * f[0], dir_ * f[1], f[2]};
          }, cfg.rel_tol, cfg.abs_tol) {}

    template <class OnStep>
    Termination run(double x0, double y0, OnStep&& on_step) {
        State y{x0, std::asinh(y0), 0.0};
        double tau = 0.0, h = 1e-3;
        stepper_.reset();
        Stepper::Step st;
        for (long k = 0; k < cfg_.max_steps; ++k) {
            double h_next = h;
            if (!stepper_.attempt(tau, y, h, st, h_next)) {
                h = h_next;
                if (h < 1e-14 * std::max(1.0, std::abs(tau))) {
                    // Underflow far out in y (|y| > 1e8) is finite-time blow-up.
                    return std::abs(y[1]) > 20.0 ? Termination::Escape : Termination::StepUnderflow;
                }
                continue;
            }
            tau += h;
            y = st.y1;
            h = std::min(h_next, 10.0);
            if (!on_step(st)) return Termination::Stopped;
            if (!std::isfinite(y[0]) || !std::isfinite(y[1])) return Termination::Escape;
            if (std::abs(y[0]) > cfg_.escape_radius) return Termination::Escape;
            if (y[2] > cfg_.max_time) return Termination::MaxTime;
        }
        return Termination::MaxSteps;
    }

    const IntegratorConfig& config() const { return cfg_; }

private:
    FloatSystem fs_;
    IntegratorConfig cfg_;
    int dir_;
    Stepper stepper_;
};

struct TrajectoryPoint {
    double t, x, y;
};

struct Trajectory {
    std::vector<TrajectoryPoint> points;
    Termination termination = Termination::MaxSteps;
    std::optional<double> return_time;  // first return to {y = 0, x > 0}
};

/// Bisection on the dense output for the zero of component `idx`.
inline double locate_crossing(const OrbitIntegrator::Stepper::Step& st, std::size_t idx, double tol) {
    double lo = st.t0, hi = st.t0 + st.h;
    double flo = st.at(lo)[idx];
    while (hi - lo > tol * std::max(1.0, std::abs(hi))) {
        const double mid = 0.5 * (lo + hi);
        const double fm = st.at(mid)[idx];
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Orbit through (x0, y0); with stop_at_return, stops at the first downward
/// crossing of y = 0 with x > 0.
inline Trajectory integrate_orbit(const NewtonSystem& S, double x0, double y0, const IntegratorConfig& cfg,
                                  bool stop_at_return = true) {
    if (!std::isfinite(x0) || !std::isfinite(y0)) throw std::invalid_argument("integrate_orbit: non-finite initial condition");
    Trajectory tr;
    tr.points.push_back({0.0, x0, y0});
    OrbitIntegrator in(S, cfg);
    tr.termination = in.run(x0, y0, [&](const OrbitIntegrator::Stepper::Step& st) {
        if (stop_at_return && st.y0[1] > 0 && st.y1[1] <= 0) {
            const double tau = locate_crossing(st, 1, cfg.event_tol);
            const auto at = st.at(tau);
            if (at[0] > 0) {
                tr.return_time = at[2];
                tr.points.push_back({at[2], at[0], 0.0});
                return false;
            }
        }
        tr.points.push_back({st.y1[2], st.y1[0], std::sinh(st.y1[1])});
        return true;
    });
    if (tr.return_time) tr.termination = Termination::SectionReturn;
    return tr;
}

}  // namespace newtonsys::numerics
