#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "newtonsys/io/certificate.hpp"

using namespace newtonsys;
using json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string system;
    std::string json_path;
    std::string csv_path;
    double tol = 1e-10;
    std::optional<unsigned> seed;
    int samples = 50;
    bool grid = false;
    std::string grid_spec;
    bool no_numeric = false;
    std::string amplitudes = "1,2,4,8";
    double x0 = 1, y0 = 0, t_max = 50;
    std::string delta = "-1", coeffs, p0, p1;
    int n = 3;
};

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

void emit_json(const Options& o, const json& j) { emit(o.json_path, j.dump(2) + "\n"); }

numerics::IntegratorConfig integrator(const Options& o) {
    numerics::IntegratorConfig c;
    c.rel_tol = o.tol;
    c.abs_tol = o.tol / 100;
    return c;
}

std::vector<double> parse_doubles(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    for (std::string tok; std::getline(ss, tok, ',');) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || !std::isfinite(v)) throw InputError("not a number: '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

std::vector<Rational> parse_rationals(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    for (std::string tok; std::getline(ss, tok, ',');) out.push_back(parse_rational(tok));
    return out;
}

// "n=3" or "n=3,5" -> {3} / {3, 5}; empty -> fallback.
std::vector<int> grid_degrees(const std::string& spec, std::vector<int> fallback) {
    if (spec.empty()) return fallback;
    if (spec.rfind("n=", 0) != 0) throw InputError("grid spec must look like n=3 or n=3,5");
    std::vector<int> out;
    for (double d : parse_doubles(spec.substr(2))) {
        if (d != std::floor(d) || d < 1) throw InputError("grid degree must be a positive integer");
        out.push_back(static_cast<int>(d));
    }
    return out;
}

std::string oracle_cell(const NewtonSystem& S, bool numeric) {
    if (!numeric) return "skipped";
    return numerics::to_string(numerics::monodromy_oracle(S).verdict);
}

int cmd_analyze(const Options& o) {
    const NewtonSystem S = parse_system(o.system);
    auto a = cert::analyze(S, !o.no_numeric, parse_doubles(o.amplitudes));
    emit_json(o, cert::document(a));
    return 0;
}

int cmd_monodromy(const Options& o) {
    const NewtonSystem S = parse_system(o.system);
    json j = {{"schema_version", cert::kSchemaVersion}, {"system", cert::system(S)}};
    const auto v = decide_monodromy(S);
    j["monodromy"] = cert::monodromy(v);
    if (!o.no_numeric && numerics::unique_equilibrium_at_origin(S))
        j["numeric"] = {{"oracle", cert::oracle(numerics::monodromy_oracle(S), v)}, {"periods", json::array()}};
    emit_json(o, j);
    return 0;
}

int cmd_center(const Options& o) {
    const NewtonSystem S = parse_system(o.system);
    json j = {{"schema_version", cert::kSchemaVersion}, {"system", cert::system(S)}};
    if (S.m() > 2 || S.P(0).is_zero() || S.P(0).coeff(0) != 0)
        throw InputError("center needs m <= 2 and an equilibrium at the origin");
    const auto w = local_monodromy_origin(S);
    j["origin"] = cert::origin(w);
    j["local_center"] = w.origin_case == OriginCase::NotMonodromicOrigin ? json(nullptr)
                                                                         : cert::local_center(decide_local_center(S));
    emit_json(o, j);
    return 0;
}

int cmd_global(const Options& o) {
    const NewtonSystem S = parse_system(o.system);
    const auto v = decide_global_center(S);
    json j = {{"schema_version", cert::kSchemaVersion}, {"system", cert::system(S)}};
    j["origin"] = v.origin ? cert::origin(*v.origin) : json(nullptr);
    j["local_center"] = v.local ? cert::local_center(*v.local) : json(nullptr);
    j["global_center"] = cert::global_center(v);
    emit_json(o, j);
    return 0;
}

int cmd_kukles(const Options& o) {
    if (!o.grid) {
        const auto a = parse_rationals(o.coeffs);
        if (a.size() != 4) throw InputError("--a needs four coefficients a_{n,0},a_{n-1,1},a_{n-2,2},a_{n-3,3}");
        const Rational delta = parse_rational(o.delta);
        const NewtonSystem S = kukles_system(delta, a, o.n);
        const bool pred = kukles_global_center(delta, a, o.n);
        const auto v = decide_global_center(S);
        emit_json(o, {{"schema_version", cert::kSchemaVersion},
                      {"system", cert::system(S)},
                      {"kukles_predicate", pred},
                      {"global_center", cert::global_center(v)},
                      {"agree", pred == v.global_center}});
        return 0;
    }
    std::ostringstream csv;
    csv << "n,delta,a_n0,a_n1_1,a_n2_2,a_n3_3,predicate,pipeline,condition,agree,oracle\n";
    std::mt19937 rng(o.seed.value_or(0));
    std::uniform_int_distribution<int> coef(-2, 2), del(-2, 0);
    auto row = [&](int n, int d, std::array<int, 4> c) {
        const std::vector<Rational> a{c[0], c[1], c[2], c[3]};
        const NewtonSystem S = kukles_system(d, a, n);
        const bool pred = kukles_global_center(d, a, n);
        const auto v = decide_global_center(S);
        csv << n << ',' << d << ',' << c[0] << ',' << c[1] << ',' << c[2] << ',' << c[3] << ',' << pred << ','
            << v.global_center << ',' << to_string(v.condition) << ',' << (pred == v.global_center) << ','
            << (numerics::unique_equilibrium_at_origin(S) ? oracle_cell(S, !o.no_numeric) : "NotApplicable") << '\n';
    };
    for (int n : grid_degrees(o.grid_spec, {3, 5})) {
        if (o.seed) {
            for (int k = 0; k < o.samples; ++k) {
                std::array<int, 4> c{};
                do {
                    for (auto& x : c) x = coef(rng);
                } while (c == std::array<int, 4>{});
                row(n, del(rng), c);
            }
            continue;
        }
        for (int d : {0, -1, -2})
            for (int a0 = -2; a0 <= 2; ++a0)
                for (int a1 = -2; a1 <= 2; ++a1)
                    for (int a2 = -2; a2 <= 2; ++a2)
                        for (int a3 = -2; a3 <= 2; ++a3)
                            if (a0 || a1 || a2 || a3) row(n, d, {a0, a1, a2, a3});
    }
    emit(o.csv_path, csv.str());
    return 0;
}

int cmd_lienard(const Options& o) {
    if (!o.grid) {
        const NewtonSystem S = o.system.empty()
                                   ? parse_system("y' = " + (o.p0.empty() ? std::string("0") : "(" + o.p0 + ")") +
                                                  (o.p1.empty() ? "" : " + (" + o.p1 + ")*y"))
                                   : parse_system(o.system);
        if (S.m() > 1) throw InputError("a Lienard system has m <= 1");
        const auto v = decide_monodromy(S);
        json j = {{"schema_version", cert::kSchemaVersion}, {"system", cert::system(S)}, {"monodromy", cert::monodromy(v)}};
        if (!o.no_numeric && numerics::unique_equilibrium_at_origin(S))
            j["numeric"] = {{"oracle", cert::oracle(numerics::monodromy_oracle(S), v)}, {"periods", json::array()}};
        emit_json(o, j);
        return 0;
    }
    std::ostringstream csv;
    csv << "l0,l1,a,b,monodromic,condition,oracle\n";
    std::mt19937 rng(o.seed.value_or(0));
    std::uniform_int_distribution<int> lead(-3, 2);
    auto row = [&](int l0, int l1, int a, int b) {
        const NewtonSystem S({RatPoly::monomial(a, l0), RatPoly::monomial(b, l1)});
        const auto v = decide_monodromy(S);
        csv << l0 << ',' << l1 << ',' << a << ',' << b << ',' << v.monodromic << ',' << to_string(v.condition) << ','
            << (numerics::unique_equilibrium_at_origin(S) ? oracle_cell(S, !o.no_numeric) : "NotApplicable") << '\n';
    };
    for (int l0 : grid_degrees(o.grid_spec, {3, 5}))
        for (int l1 : {0, 1, 2}) {
            if (o.seed) {
                for (int k = 0; k < o.samples; ++k) {
                    int a = lead(rng), b = lead(rng);
                    row(l0, l1, a >= 0 ? a + 1 : a, b >= 0 ? b + 1 : b);
                }
                continue;
            }
            for (int a = -3; a <= 3; ++a)
                for (int b = -3; b <= 3; ++b)
                    if (a && b) row(l0, l1, a, b);
        }
    emit(o.csv_path, csv.str());
    return 0;
}

int cmd_simulate(const Options& o) {
    const NewtonSystem S = parse_system(o.system);
    auto cfg = integrator(o);
    cfg.max_time = o.t_max;
    const auto tr = numerics::integrate_orbit(S, o.x0, o.y0, cfg, false);
    std::ostringstream csv;
    csv.precision(17);
    csv << "t,x,y\n";
    for (const auto& p : tr.points) csv << p.t << ',' << p.x << ',' << p.y << '\n';
    emit(o.csv_path, csv.str());
    std::cerr << "termination: " << numerics::to_string(tr.termination) << '\n';
    return 0;
}

int cmd_period(const Options& o) {
    const NewtonSystem S = parse_system(o.system);
    const auto v = decide_global_center(S);
    if (!v.global_center) std::cerr << "warning: not a global center (" << v.reason << ")\n";
    const auto ps = numerics::period_function(S, parse_doubles(o.amplitudes), integrator(o));
    std::ostringstream csv;
    csv.precision(15);
    csv << "A,T,err,converged\n";
    for (const auto& p : ps) csv << p.amplitude << ',' << p.period << ',' << p.refinement_error << ',' << p.converged << '\n';
    emit(o.csv_path, csv.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monodromy and center decisions for Newton systems x' = y, y' = sum P_i(x) y^i"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* c, bool needs_system) {
        auto* s = c->add_option("system", o.system, "y' = <polynomial in x, y>, or coefficient-form JSON");
        if (needs_system) s->required();
        c->add_option("--json", o.json_path, "write JSON here instead of stdout");
        c->add_option("--csv", o.csv_path, "write CSV here instead of stdout");
        c->add_option("--tol", o.tol, "relative integration tolerance")->check(CLI::PositiveNumber);
        c->add_option("--seed", o.seed, "sample the grid randomly with this seed");
        c->add_option("--samples", o.samples, "samples per degree with --seed")->check(CLI::PositiveNumber);
        c->add_option("--grid", o.grid_spec, "sweep the coefficient grid, optionally n=3 or n=3,5")->expected(0, 1);
        c->add_flag("--no-numeric", o.no_numeric, "exact decisions only");
        c->add_option("--amplitudes", o.amplitudes, "comma-separated amplitudes for the period table");
    };
    auto* analyze = app.add_subcommand("analyze", "full pipeline, one JSON certificate");
    auto* mono = app.add_subcommand("monodromy", "monodromy at infinity");
    auto* center = app.add_subcommand("center", "local center at the origin");
    auto* global = app.add_subcommand("global", "global center");
    auto* kukles = app.add_subcommand("kukles", "Kukles family: single system or grid");
    auto* lienard = app.add_subcommand("lienard", "Lienard family: single system or grid");
    auto* simulate = app.add_subcommand("simulate", "trajectory CSV");
    auto* period = app.add_subcommand("period", "period table CSV");
    for (auto* c : {analyze, mono, center, global, simulate, period}) common(c, true);
    for (auto* c : {kukles, lienard}) common(c, false);
    kukles->add_option("--delta", o.delta, "coefficient of x");
    kukles->add_option("--a", o.coeffs, "a_{n,0},a_{n-1,1},a_{n-2,2},a_{n-3,3}");
    kukles->add_option("--n", o.n, "degree")->check(CLI::PositiveNumber);
    lienard->add_option("--p0", o.p0, "P0(x)");
    lienard->add_option("--p1", o.p1, "P1(x)");
    simulate->add_option("--x0", o.x0);
    simulate->add_option("--y0", o.y0);
    simulate->add_option("--t-max", o.t_max)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }
    for (auto* c : {kukles, lienard})
        if (c->parsed()) o.grid = c->count("--grid") > 0;

    try {
        if (analyze->parsed()) return cmd_analyze(o);
        if (mono->parsed()) return cmd_monodromy(o);
        if (center->parsed()) return cmd_center(o);
        if (global->parsed()) return cmd_global(o);
        if (kukles->parsed()) return cmd_kukles(o);
        if (lienard->parsed()) return cmd_lienard(o);
        if (simulate->parsed()) return cmd_simulate(o);
        if (period->parsed()) return cmd_period(o);
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
