// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include "../support/gen.hpp"
#include "newtonsys/center.hpp"
#include "newtonsys/io/parse.hpp"
#include "newtonsys/monodromy.hpp"
#include "newtonsys/numerics/oracle.hpp"
#include "newtonsys/numerics/passage_time.hpp"
#include "newtonsys/numerics/period.hpp"
#include "newtonsys/resolution/blowup.hpp"

using namespace newtonsys;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

// Runs a criterion body, turning exceptions into failures.
void criterion(int id, const std::function<std::pair<bool, std::string>()>& body) {
    try {
        const auto [ok, detail] = body();
        report(id, ok, detail);
    } catch (const std::exception& e) {
        report(id, false, std::string("exception: ") + e.what());
    }
}

template <class... T>
std::string fmt(const T&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

struct KuklesPoint {
    int n, delta;
    std::array<int, 4> a;
};

std::vector<KuklesPoint> kukles_grid() {
    std::vector<KuklesPoint> out;
    for (int n : {3, 5})
        for (int d : {0, -1, -2})
            for (int a0 = -2; a0 <= 2; ++a0)
                for (int a1 = -2; a1 <= 2; ++a1)
                    for (int a2 = -2; a2 <= 2; ++a2)
                        for (int a3 = -2; a3 <= 2; ++a3)
                            if (a0 || a1 || a2 || a3) out.push_back({n, d, {a0, a1, a2, a3}});
    return out;
}

NewtonSystem kukles(const KuklesPoint& k) {
    return kukles_system(k.delta, {k.a[0], k.a[1], k.a[2], k.a[3]}, k.n);
}

// Global center iff y' = delta x + a_{n,0} x^n + a_{n-2,2} x^{n-2} y^2 with
// delta <= 0, n odd, a_{n,0} <= 0, a_{n-2,2} <= 0, delta^2 + a_{n,0}^2 != 0.
bool kukles_predicate(const KuklesPoint& k) {
    return k.a[1] == 0 && k.a[3] == 0 && k.n % 2 == 1 && k.delta <= 0 && k.a[0] <= 0 && k.a[2] <= 0 &&
           k.delta * k.delta + k.a[0] * k.a[0] != 0;
}

struct LienardPoint {
    int l0, l1, a, b;
};

std::vector<LienardPoint> lienard_grid() {
    std::vector<LienardPoint> out;
    for (int l0 : {3, 5})
        for (int l1 : {0, 1, 2})
            for (int a = -3; a <= 3; ++a)
                for (int b = -3; b <= 3; ++b)
                    if (a && b) out.push_back({l0, l1, a, b});
    return out;
}

NewtonSystem lienard(const LienardPoint& p) {
    return NewtonSystem({RatPoly::monomial(p.a, p.l0), RatPoly::monomial(p.b, p.l1)});
}

bool lienard_predicate(const LienardPoint& p) {
    const bool l1 = p.l0 % 2 == 1 && p.l0 > 2 * p.l1 + 1 && p.a < 0;
    const bool l2 = p.l0 == 2 * p.l1 + 1 && p.b * p.b + 2 * (p.l0 + 1) * p.a < 0;
    return l1 || l2;
}

const char* const kWorked[] = {"y' = -x - x^3*y^2", "y' = -x + y^3", "y' = -x^3 + x*y", "y' = -x^3 + 3*x*y"};

// Bivariate evaluation, term by term.
Rational eval_at(const BiRatPoly& P, const Rational& u, const Rational& v) {
    Rational acc = 0;
    for (const auto& [e, a] : P.terms()) acc += a * pow(u, static_cast<unsigned>(e.first)) * pow(v, static_cast<unsigned>(e.second));
    return acc;
}

Rational upow(const Rational& u, int e) {
    return e >= 0 ? Rational(pow(u, static_cast<unsigned>(e))) : Rational(1 / pow(u, static_cast<unsigned>(-e)));
}

int deg_u(const BiRatPoly& P) { return std::max(P.degree_u(), 0); }
int deg_v(const BiRatPoly& P) { return std::max(P.degree_v(), 0); }

// Polynomial identity checked on a product grid larger than the degrees.
template <class L, class R>
bool identity_on_grid(int du, int dv, L lhs, R rhs) {
    for (int a = 1; a <= du + 1; ++a)
        for (int b = 1; b <= dv + 1; ++b) {
            const Rational u = rat(a, 2), v = rat(b - dv / 2 - 1, 3);
            if (lhs(u, v) != rhs(u, v)) return false;
        }
    return true;
}

bool weighted_identity(const PlanarField& X, int p, int q, const Rational& phi) {
    const PlanarField Y = blowup_u(X, p, q, phi);
    int sigma = std::numeric_limits<int>::max();
    for (auto s : support(X)) sigma = std::min(sigma, q * s.i + p * s.j);
    auto U = [&](const Rational& u1) -> Rational { return pow(u1, static_cast<unsigned>(q)); };
    auto V = [&](const Rational& u1, const Rational& v1) -> Rational { return pow(u1, static_cast<unsigned>(p)) * (phi + v1); };
    const int du = q * deg_u(X.F) + p * deg_v(X.F) + q * deg_u(X.G) + p * deg_v(X.G) + 2;
    const int dv = deg_v(X.F) + deg_v(X.G) + 2;
    return identity_on_grid(du, dv,
               [&](const Rational& u1, const Rational& v1) -> Rational { return eval_at(Y.F, u1, v1) * upow(u1, sigma + q - 1); },
               [&](const Rational& u1, const Rational& v1) -> Rational { return eval_at(X.F, U(u1), V(u1, v1)); }) &&
           identity_on_grid(du, dv,
               [&](const Rational& u1, const Rational& v1) -> Rational { return eval_at(Y.G, u1, v1) * upow(u1, sigma + p); },
               [&](const Rational& u1, const Rational& v1) -> Rational {
                   return q * eval_at(X.G, U(u1), V(u1, v1)) -
                          p * (phi + v1) * eval_at(X.F, U(u1), V(u1, v1)) * upow(u1, p - q);
               });
}

bool vertical_identity(const PlanarField& X, int p, int sgn) {
    const PlanarField Y = blowup_vertical(X, p, sgn);
    // W z^c = p z^{p-1} F(wz, s z^p) - s w G(wz, s z^p), Z z^c = s z G(wz, s z^p)
    // c is the lowest z-power after cancellation in W
    BiRatPoly W;
    auto flip = [&](int j) { return (sgn < 0 && j % 2) ? -1 : 1; };
    for (const auto& [e, a] : X.F.terms()) W.add_term(e.first, e.first + p * e.second + p - 1, p * a * flip(e.second));
    for (const auto& [e, a] : X.G.terms()) W.add_term(e.first + 1, e.first + p * e.second, -sgn * a * flip(e.second));
    int c = std::numeric_limits<int>::max();
    for (const auto& [e, a] : W.terms()) c = std::min(c, e.second);
    for (const auto& [e, a] : X.G.terms()) c = std::min(c, e.first + p * e.second + 1);
    auto sp = [&](const Rational& z) -> Rational { return sgn * pow(z, static_cast<unsigned>(p)); };
    return identity_on_grid(deg_u(Y.F) + deg_u(Y.G) + 2, deg_v(Y.F) + deg_v(Y.G) + c + p + 2,
               [&](const Rational& w, const Rational& z) -> Rational { return eval_at(Y.F, w, z) * pow(z, static_cast<unsigned>(c)); },
               [&](const Rational& w, const Rational& z) -> Rational {
                   return p * pow(z, static_cast<unsigned>(p - 1)) * eval_at(X.F, w * z, sp(z)) - sgn * w * eval_at(X.G, w * z, sp(z));
               }) &&
           identity_on_grid(deg_u(Y.G) + 2, deg_v(Y.G) + c + 2,
               [&](const Rational& w, const Rational& z) -> Rational { return eval_at(Y.G, w, z) * pow(z, static_cast<unsigned>(c)); },
               [&](const Rational& w, const Rational& z) -> Rational { return sgn * z * eval_at(X.G, w * z, sp(z)); });
}

}  // namespace

int main() {
    criterion(1, [] {
        int n = 0, bad = 0, centers = 0;
        for (const auto& k : kukles_grid()) {
            const bool pipeline = decide_global_center(kukles(k)).global_center;
            const bool closed = kukles_global_center(k.delta, {k.a[0], k.a[1], k.a[2], k.a[3]}, k.n);
            const bool expect = kukles_predicate(k);
            bad += (pipeline != expect) || (closed != expect);
            centers += expect;
            ++n;
        }
        return std::pair{bad == 0, fmt("Kukles grid, ", n, " systems, ", centers, " global centers, ", bad, " disagreements")};
    });

    criterion(2, [] {
        int n = 0, bad = 0, mono = 0;
        for (const auto& p : lienard_grid()) {
            const NewtonSystem S = lienard(p);
            const bool expect = lienard_predicate(p);
            const auto v = decide_monodromy(S);
            const bool general = cherkas_monodromy(S).monodromic;
            bad += (v.monodromic != expect) || (general != expect);
            mono += expect;
            ++n;
        }
        return std::pair{bad == 0, fmt("Lienard grid, ", n, " systems, ", mono, " monodromic, ", bad, " disagreements")};
    });

    criterion(3, [] {
        testgen::Gen g(2024);
        int systems = 0, bad = 0, with_curve = 0;
        while (systems < 200) {
            const int n = g.coin() ? 3 : 5;
            std::vector<RatPoly> P(3);
            for (int i = 0; i < 3; ++i) {
                std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
                for (int d = 0; d < n; ++d) c[static_cast<std::size_t>(d)] = g.integer(-3, 3);
                P[static_cast<std::size_t>(i)] = RatPoly(c);
            }
            P[0] += RatPoly::monomial(g.integer(-3, -1), n);
            const NewtonSystem S(P);
            if (S.m() != 2 || S.n() != n) continue;
            const PlanarField X0 = chart_fields(S).X0;
            for (int s : {1, -1}) {
                const bool descent = m1_descent(X0, n - 1, s, WidthPolicy::HalfPlane).verdict;
                const bool curve = fractional_curve_search(X0, Rational(n), s).has_value();
                bad += descent == curve;
                with_curve += curve;
            }
            ++systems;
        }
        return std::pair{bad == 0 && systems >= 100,
                         fmt("Cherkas descent vs curve search, ", systems, " systems x 2 signs, ", with_curve,
                             " sides with curves, ", bad, " disagreements")};
    });

    criterion(4, [] {
        testgen::Gen g(4096);
        int fields = 0, bad = 0;
        while (fields < 600) {
            const int nf = g.integer(0, 4), ng = g.integer(1, 8 - nf);
            const PlanarField X{g.bipoly(nf, 6, 4), g.bipoly(ng, 6, 4), "u", "v"};
            if (support(X).empty() || support(X).size() > 8) continue;
            int p = g.integer(1, 4), q = g.integer(1, 3);
            while (std::gcd(p, q) != 1) ++p;
            const bool ok = weighted_identity(X, p, q, g.rational(3, 2)) && vertical_identity(X, p, 1) &&
                            vertical_identity(X, p, -1);
            bad += !ok;
            ++fields;
        }
        return std::pair{bad == 0, fmt("blow-up identities on ", fields, " random fields, ", bad, " failures")};
    });

    criterion(5, [] {
        std::vector<std::string> wrong;
        const auto g1 = decide_global_center(parse_system(kWorked[0]));
        if (!g1.global_center || g1.condition != GlobalCondition::G1) wrong.push_back("G1");
        if (!kukles_global_center(-1, {0, 0, -1}, 5) || kukles_system(-1, {0, 0, -1}, 5) != parse_system(kWorked[0]))
            wrong.push_back("Kukles form");
        if (decide_monodromy(parse_system(kWorked[1])).monodromic) wrong.push_back("y^3");
        const auto l2 = decide_monodromy(parse_system(kWorked[2]));
        if (!l2.monodromic || l2.condition != MonodromyCondition::L2) wrong.push_back("L2");
        if (decide_monodromy(parse_system(kWorked[3])).monodromic) wrong.push_back("3x");
        std::string detail = "worked examples";
        for (const auto& w : wrong) detail += " [wrong: " + w + "]";
        return std::pair{wrong.empty(), detail};
    });

    criterion(6, [] {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        std::string detail;
        for (const char* text : {"y' = -x - x^3*y^2", "y' = -x + x*y - x*y^2", "y' = -x^3 - x"}) {
            const auto T = numerics::period_function(parse_system(text), {1, 2, 4, 8});
            double lo = INFINITY, hi = 0;
            for (const auto& s : T) {
                ok = ok && s.converged && s.refinement_error < 1e-6 * s.period;
                lo = std::min(lo, s.period);
                hi = std::max(hi, s.period);
            }
            ok = ok && hi / lo > 1.1;
            detail += fmt(" ratio=", hi / lo);
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        ok = ok && secs < 60;
        return std::pair{ok, fmt("non-isochronous periods,", detail, ", ", secs, " s")};
    });

    criterion(7, [] {
        std::vector<NewtonSystem> corpus;
        for (const auto& k : kukles_grid()) corpus.push_back(kukles(k));
        for (const auto& p : lienard_grid()) corpus.push_back(lienard(p));
        for (const char* t : kWorked) corpus.push_back(parse_system(t));
        int contradictions = 0, confident = 0, applicable = 0;
        for (const auto& S : corpus) {
            const bool exact = decide_monodromy(S).monodromic;
            const auto r = numerics::monodromy_oracle(S);
            if (r.verdict == numerics::OracleVerdict::NotApplicable) continue;
            ++applicable;
            if (r.verdict == numerics::OracleVerdict::Inconclusive) continue;
            ++confident;
            contradictions += (r.verdict == numerics::OracleVerdict::Monodromic) != exact;
        }
        return std::pair{contradictions == 0, fmt("oracle over ", corpus.size(), " systems, ", applicable,
                                                  " applicable, ", confident, " confident, ", contradictions,
                                                  " contradictions")};
    });

    criterion(8, [] {
        using K = PassageKind;
        auto pp = [](int p, int q, int lambda = 1, int k = 2) {
            return PassageParams{Rational(p), Rational(q), Rational(lambda), Rational(0), k};
        };
        struct Spot {
            K kind;
            PassageParams prm;
            int exponent, log_power;
            PassageLimit limit;
        };
        const Spot spots[] = {
            {K::Side, pp(0, 1), 1, 0, PassageLimit::Zero},
            {K::Side, pp(0, -1), -1, 0, PassageLimit::Infinite},
            {K::HyperbolicCorner, pp(1, 1), 1, 1, PassageLimit::Zero},
            {K::HyperbolicCorner, pp(2, 1), 1, 0, PassageLimit::Zero},
            {K::HyperbolicCorner, pp(0, 0), 0, 1, PassageLimit::Infinite},
            {K::SemiHyperbolicCorner, pp(1, 1), 1, 0, PassageLimit::Zero},
            {K::SemiHyperbolicCorner, pp(2, 0), 0, 0, PassageLimit::Finite},
            {K::SemiHyperbolicCorner, pp(0, 0), -1, 0, PassageLimit::Infinite},
        };
        int bad_class = 0, bad_fit = 0;
        double worst = 0;
        for (const auto& s : spots) {
            const auto cls = passage_time_class(s.kind, s.prm);
            bad_class += cls.order.exponent != s.exponent || cls.order.log_power != s.log_power || cls.order.limit != s.limit;
            if (cls.order.log_power > 0 && cls.order.exponent == 0) continue;  // |ln s| alone has no slope
            const auto fit = numerics::fit_passage_exponent(s.kind, s.prm, cls.order.log_power);
            const double err = std::abs(fit.exponent - s.exponent);
            worst = std::max(worst, err);
            bad_fit += err > 0.1;
        }
        if (passage_time_class(K::SemiHyperbolicCorner, pp(1, -1)).order.limit != PassageLimit::Exponential) ++bad_class;
        return std::pair{bad_class == 0 && bad_fit == 0,
                         fmt("passage-time classes, ", bad_class, " wrong, worst fit error ", worst)};
    });

    return failures == 0 ? 0 : 1;
}
