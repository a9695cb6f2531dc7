#pragma once

#include <atomic>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "newtonsys/core/sturm.hpp"
#include "orbit.hpp"

namespace newtonsys::numerics {

enum class OracleVerdict { Monodromic, NotMonodromic, Inconclusive, NotApplicable };

inline const char* to_string(OracleVerdict v) {
    switch (v) {
        case OracleVerdict::Monodromic: return "Monodromic";
        case OracleVerdict::NotMonodromic: return "NotMonodromic";
        case OracleVerdict::Inconclusive: return "Inconclusive";
        case OracleVerdict::NotApplicable: return "NotApplicable";
    }
    return "?";
}

enum class OrbitFate { Returned, Escaped, Undecided };

struct OracleConfig {
    IntegratorConfig integrator{1e-8, 1e-10, 1e4, 50'000, 1e6, 1e-12};
    std::vector<double> radii{1e2, 1e3};
    int ring_points = 12;
    unsigned threads = 0;         // 0: hardware concurrency
    bool stop_on_escape = true;   // one escape settles the verdict
};

struct OracleReport {
    OracleVerdict verdict = OracleVerdict::Inconclusive;
    int returned = 0;
    int escaped = 0;
    int undecided = 0;
};

/// Follows one orbit from (x0, y0) until it has wound once around the origin
/// (angle in the (x, asinh y) plane), escapes past |x| = escape, or gives up.
inline OrbitFate follow_winding(const NewtonSystem& S, double x0, double y0, int direction, double escape,
                                IntegratorConfig cfg) {
    cfg.escape_radius = escape;
    OrbitIntegrator in(S, cfg, direction);
    double theta = std::atan2(std::asinh(y0), x0), total = 0.0;
    bool wound = false;
    const auto term = in.run(x0, y0, [&](const OrbitIntegrator::Stepper::Step& st) {
        const double th = std::atan2(st.y1[1], st.y1[0]);
        double d = th - theta;
        if (d > std::numbers::pi) d -= 2 * std::numbers::pi;
        if (d < -std::numbers::pi) d += 2 * std::numbers::pi;
        total += d;
        theta = th;
        wound = std::abs(total) >= 2 * std::numbers::pi;
        return !wound;
    });
    if (wound) return OrbitFate::Returned;
    if (term == Termination::Escape) return OrbitFate::Escaped;
    return OrbitFate::Undecided;
}

inline bool unique_equilibrium_at_origin(const NewtonSystem& S) {
    const RatPoly P0 = S.P(0);
    return !P0.is_zero() && P0.coeff(0) == 0 && nonzero_real_root_count(P0) == 0;
}

/// Numerical stand-in for monodromy at infinity: rings of initial conditions
/// at radius R, each orbit followed forward and backward.
inline OracleReport monodromy_oracle(const NewtonSystem& S, const OracleConfig& cfg = {}) {
    OracleReport rep;
    if (!unique_equilibrium_at_origin(S)) {
        rep.verdict = OracleVerdict::NotApplicable;
        return rep;
    }
    struct Job {
        double x, y, escape;
        int dir;
    };
    std::vector<Job> jobs;
    for (double R : cfg.radii)
        for (int k = 0; k < cfg.ring_points; ++k) {
            const double a = 2 * std::numbers::pi * (k + 0.5) / cfg.ring_points;
            for (int dir : {1, -1}) jobs.push_back({R * std::cos(a), R * std::sin(a), 10 * R, dir});
        }
    std::vector<OrbitFate> fate(jobs.size(), OrbitFate::Undecided);
    std::vector<char> ran(jobs.size(), 0);
    std::atomic<bool> escaped{false};
    unsigned nt = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    nt = std::min<unsigned>(nt, static_cast<unsigned>(jobs.size()));
    auto work = [&](unsigned tid) {
        for (std::size_t j = tid; j < jobs.size(); j += nt) {
            if (cfg.stop_on_escape && escaped.load()) return;
            fate[j] = follow_winding(S, jobs[j].x, jobs[j].y, jobs[j].dir, jobs[j].escape, cfg.integrator);
            ran[j] = 1;
            if (fate[j] == OrbitFate::Escaped) escaped = true;
        }
    };
    if (nt <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nt; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    for (std::size_t j = 0; j < fate.size(); ++j) {
        if (!ran[j]) continue;
        const OrbitFate f = fate[j];
        if (f == OrbitFate::Returned) ++rep.returned;
        else if (f == OrbitFate::Escaped) ++rep.escaped;
        else ++rep.undecided;
    }
    if (rep.escaped > 0) rep.verdict = OracleVerdict::NotMonodromic;
    else if (rep.undecided == 0) rep.verdict = OracleVerdict::Monodromic;
    else rep.verdict = OracleVerdict::Inconclusive;
    return rep;
}

}  // namespace newtonsys::numerics
