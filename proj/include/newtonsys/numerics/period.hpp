#pragma once

#include <vector>

#include "orbit.hpp"

namespace newtonsys::numerics {

struct PeriodSample {
    double amplitude = 0;
    double period = 0;
    bool converged = false;
    double refinement_error = 0;
};

/// Return time of the orbit through (A, 0) to {y = 0, x > 0}, computed at
/// cfg tolerances and at tolerances / 10, then Richardson-extrapolated
/// (global error proportional to tolerance).
inline PeriodSample period_sample(const NewtonSystem& S, double A, const IntegratorConfig& cfg) {
    PeriodSample out;
    out.amplitude = A;
    IntegratorConfig fine = cfg;
    fine.rel_tol /= 10;
    fine.abs_tol /= 10;
    const auto coarse_run = integrate_orbit(S, A, 0.0, cfg);
    const auto fine_run = integrate_orbit(S, A, 0.0, fine);
    if (!coarse_run.return_time || !fine_run.return_time) return out;
    const double T1 = *coarse_run.return_time, T2 = *fine_run.return_time;
    out.period = T2 + (T2 - T1) / 9.0;
    out.refinement_error = std::abs(T2 - T1);
    out.converged = out.refinement_error < 10 * cfg.rel_tol * out.period;
    return out;
}

inline std::vector<PeriodSample> period_function(const NewtonSystem& S, const std::vector<double>& amplitudes,
                                                 const IntegratorConfig& cfg = {}) {
    std::vector<PeriodSample> out;
    for (double A : amplitudes) out.push_back(period_sample(S, A, cfg));
    return out;
}

}  // namespace newtonsys::numerics
