#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

namespace newtonsys::numerics {

/// Dormand-Prince 5(4) with the DOPRI5 continuous extension.
template <std::size_t N>
class Dopri5 {
public:
    using State = std::array<double, N>;
    using Rhs = std::function<State(double, const State&)>;

    struct Step {
        double t0 = 0, h = 0;
        State y0{}, y1{};
        std::array<State, 5> cont{};

        State at(double t) const {
            const double th = (t - t0) / h, th1 = 1.0 - th;
            State y{};
            for (std::size_t i = 0; i < N; ++i)
                y[i] = cont[0][i] + th * (cont[1][i] + th1 * (cont[2][i] + th * (cont[3][i] + th1 * cont[4][i])));
            return y;
        }
    };

    Dopri5(Rhs f, double rtol, double atol) : f_(std::move(f)), rtol_(rtol), atol_(atol) {}

    /// Attempts one step of size h from (t, y). On acceptance fills `out`
    /// and returns true; `h_next` always receives the suggested next size.
    bool attempt(double t, const State& y, double h, Step& out, double& h_next) {
        const State& k1 = have_fsal_ ? fsal_ : (fsal_ = f_(t, y));
        have_fsal_ = true;
        State k2 = f_(t + c2 * h, comb(y, h, {a21}, {&k1}));
        State k3 = f_(t + c3 * h, comb(y, h, {a31, a32}, {&k1, &k2}));
        State k4 = f_(t + c4 * h, comb(y, h, {a41, a42, a43}, {&k1, &k2, &k3}));
        State k5 = f_(t + c5 * h, comb(y, h, {a51, a52, a53, a54}, {&k1, &k2, &k3, &k4}));
        State k6 = f_(t + h, comb(y, h, {a61, a62, a63, a64, a65}, {&k1, &k2, &k3, &k4, &k5}));
        State y1 = comb(y, h, {a71, 0.0, a73, a74, a75, a76}, {&k1, &k2, &k3, &k4, &k5, &k6});
        State k7 = f_(t + h, y1);

        double err = 0.0;
        bool finite = true;
        for (std::size_t i = 0; i < N; ++i) {
            const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            const double sc = atol_ + rtol_ * std::max(std::abs(y[i]), std::abs(y1[i]));
            err += (e / sc) * (e / sc);
            finite = finite && std::isfinite(y1[i]) && std::isfinite(k7[i]);
        }
        err = std::sqrt(err / N);
        if (!finite || !std::isfinite(err)) {
            h_next = h * 0.25;
            return false;
        }
        const double fac = std::clamp(0.9 * std::pow(std::max(err, 1e-16), -0.2), 0.2, 5.0);
        h_next = h * fac;
        if (err > 1.0) {
            h_next = h * std::max(0.2, std::min(fac, 1.0));
            return false;
        }
        out.t0 = t;
        out.h = h;
        out.y0 = y;
        out.y1 = y1;
        for (std::size_t i = 0; i < N; ++i) {
            const double ydiff = y1[i] - y[i];
            const double bspl = h * k1[i] - ydiff;
            out.cont[0][i] = y[i];
            out.cont[1][i] = ydiff;
            out.cont[2][i] = bspl;
            out.cont[3][i] = ydiff - h * k7[i] - bspl;
            out.cont[4][i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i] + d7 * k7[i]);
        }
        fsal_ = k7;
        return true;
    }

    void reset() { have_fsal_ = false; }

private:
    static State comb(const State& y, double h, std::initializer_list<double> a, std::initializer_list<const State*> k) {
        State out = y;
        auto ai = a.begin();
        for (const State* kk : k) {
            const double c = *ai++;
            if (c == 0.0) continue;
            for (std::size_t i = 0; i < N; ++i) out[i] += h * c * (*kk)[i];
        }
        return out;
    }

    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192, a75 = -2187.0 / 6784,
                            a76 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                            e6 = 22.0 / 525, e7 = -1.0 / 40;
    static constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                            d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                            d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

    Rhs f_;
    double rtol_, atol_;
    State fsal_{};
    bool have_fsal_ = false;
};

}  // namespace newtonsys::numerics
