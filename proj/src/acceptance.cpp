#include "levyarc/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <numbers>
#include <sstream>

#include "levyarc/classes.hpp"
#include "levyarc/errors.hpp"
#include "levyarc/fixtures.hpp"
#include "levyarc/mappings.hpp"
#include "levyarc/simulate.hpp"
#include "levyarc/special.hpp"
#include "levyarc/transforms.hpp"

namespace levyarc {
namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(kPi);

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string num(double x) {
    std::ostringstream os;
    os << std::setprecision(6) << x;
    return os.str();
}

const Density& only_density(const PolarMeasure& m) {
    if (m.components().empty() || !m.components().front().radial.density)
        throw Error("expected a one-component measure with a density");
    return *m.components().front().radial.density;
}

std::vector<double> check_grid() { return geometric_grid_n(0.1, 5.0, 50); }

double max_rel_error(const Density& f, const ScalarFn& ref, const std::vector<double>& grid) {
    double e = 0.0;
    for (double r : grid) {
        const double want = ref(r);
        const double got = f(r);
        e = std::max(e, want != 0.0 ? std::abs(got / want - 1.0) : std::abs(got));
    }
    return e;
}

double max_abs_diff(const Density& a, const Density& b, const std::vector<double>& grid) {
    double e = 0.0;
    for (double r : grid) e = std::max(e, std::abs(a(r) - b(r)));
    return e;
}

struct Builder {
    CheckResult res;
    const CheckOptions& opts;
    Clock::time_point t0 = Clock::now();

    Builder(std::string name, std::string title, double tol, const CheckOptions& o) : opts(o) {
        res.name = std::move(name);
        res.title = std::move(title);
        res.tolerance = o.tolerance.value_or(tol);
        res.pass = true;
    }
    // Records an error to be compared against the check tolerance.
    void error(const std::string& what, double e) {
        res.measured = std::max(res.measured, e);
        if (!(e <= res.tolerance)) res.pass = false;
        res.details.push_back(what + ": " + num(e));
    }
    void require(const std::string& what, bool ok) {
        if (!ok) res.pass = false;
        res.details.push_back(what + ": " + (ok ? "yes" : "NO"));
    }
    void note(const std::string& what) { res.details.push_back(what); }
    CheckResult done(double time_limit = 0.0) {
        res.seconds = since(t0);
        if (time_limit > 0.0) require("runtime " + num(res.seconds) + " s < " + num(time_limit) + " s", res.seconds < time_limit);
        return res;
    }
};

CheckResult ex_fixture(const std::string& name, const std::string& fixture_name, double tol, double time_limit,
                       const CheckOptions& o) {
    const Fixture& fx = fixture(fixture_name);
    Builder b(name, fx.description, tol, o);
    const PolarMeasure out = fx.apply(fx.input);
    b.error("max relative error vs " + fx.closed_form_id + " on 50 points in [0.1, 5]",
            max_rel_error(only_density(out), fx.closed_form, check_grid()));
    return b.done(time_limit);
}

CheckResult check_commute(const CheckOptions& o) {
    Builder b("commute", "upsilon(-2,2) o arcsine1 = arcsine1 o upsilon0", 1e-5, o);
    const auto grid = check_grid();
    const std::pair<const char*, PolarMeasure> inputs[] = {
        {"delta_1", PolarMeasure::one_dimensional(atom_component(1.0, 1.0))}, {"EX2 input", ex2_input()}};
    for (const auto& [label, rho] : inputs) {
        const PolarMeasure lhs = upsilon_alpha_beta(arcsine1(rho), -2.0, 2.0);
        const PolarMeasure rhs = arcsine1(upsilon0(rho));
        b.error(std::string(label) + ": max |lhs - rhs|", max_abs_diff(only_density(lhs), only_density(rhs), grid));
        if (std::string(label) == "EX2 input") {
            const ScalarFn k0 = [](double r) { return special::k0(r); };
            b.error("EX2 input: lhs max relative error vs K0", max_rel_error(only_density(lhs), k0, grid));
            b.error("EX2 input: rhs max relative error vs K0", max_rel_error(only_density(rhs), k0, grid));
        }
    }
    return b.done();
}

CheckResult check_noncommute(const CheckOptions& o) {
    Builder b("noncommute", "first moments of upsilon0 and upsilon(-2,2) of arcsine1(delta_1)", 1e-8, o);
    const PolarMeasure rt = arcsine1(PolarMeasure::one_dimensional(atom_component(1.0, 1.0)));
    const double m0 = radial_moment(upsilon0(rt).components().front().radial, 1.0);
    const double m2 = radial_moment(upsilon_alpha_beta(rt, -2.0, 2.0).components().front().radial, 1.0);
    b.note("moment upsilon0 = " + num(m0) + " (2/pi = " + num(2.0 / kPi) + ")");
    b.note("moment upsilon(-2,2) = " + num(m2) + " (1/sqrt(pi) = " + num(1.0 / kSqrtPi) + ")");
    b.note("ratio = " + num(m2 / m0) + " (sqrt(pi)/2 = " + num(kSqrtPi / 2.0) + ")");
    b.error("|m0 - 2/pi|", std::abs(m0 - 2.0 / kPi));
    b.error("|m2 - 1/sqrt(pi)|", std::abs(m2 - 1.0 / kSqrtPi));
    b.error("|m2/m0 - sqrt(pi)/2|", std::abs(m2 / m0 - kSqrtPi / 2.0));
    return b.done();
}

CheckResult check_invert(const CheckOptions& o) {
    Builder b("invert", "invert_arcsine1 o arcsine1 recovers tails; NotInRange outside the range", 1e-6, o);
    const auto grid = default_inversion_grid();
    RadialComponent two;
    two.atoms = {{0.5, 1.0}, {2.0, 1.0}};
    const std::pair<const char*, PolarMeasure> inputs[] = {
        {"delta_1", PolarMeasure::one_dimensional(atom_component(1.0, 1.0))},
        {"delta_2 + delta_0.5", PolarMeasure::one_dimensional(two)},
        {"EX1 input", ex1_input()}};
    for (const auto& [label, m] : inputs) {
        const InversionResult inv = invert_arcsine1(arcsine1(m), grid);
        const RadialComponent& rc = m.components().front().radial;
        double e = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            QuadOptions q;
            q.abs_tol = 1e-13;
            e = std::max(e, std::abs(inv.tails.front().tail[i] - tail(rc, grid[i], q)));
        }
        b.error(std::string(label) + ": max tail error on " + std::to_string(grid.size()) + " points in [1e-3, 1e2]", e);
    }
    const PolarMeasure ramp = PolarMeasure::one_dimensional(
        density_component(std::make_shared<ExpPowerDensity>(1.0, 1.0, 0.0, 1.0, Interval{0.0, 1.0})));
    bool raised = false;
    try {
        invert_arcsine1(ramp, grid);
    } catch (const NotInRange& e) {
        raised = true;
        b.note(std::string("r 1_(0,1): ") + e.what());
    }
    b.require("NotInRange raised for r 1_(0,1)", raised);
    return b.done();
}

CheckResult check_frac_half(const CheckOptions& o) {
    Builder b("frac_half", "frac_half o frac_half (delta_s) = 1_(0,s)", 1e-8, o);
    const auto grid = geometric_grid_n(1e-3, 10.0, 200);
    for (double s : {0.5, 1.0, 3.0}) {
        const RadialComponent twice = frac_half(frac_half(atom_component(s, 1.0)));
        double e = 0.0;
        for (double u : grid) {
            if (std::abs(u - s) < 1e-12 * s) continue;
            e = std::max(e, std::abs((*twice.density)(u) - (u < s ? 1.0 : 0.0)));
        }
        b.error("s = " + num(s) + ": max |density - 1_(0,s)|", e);
    }
    return b.done();
}

CheckResult check_triplet(const CheckOptions& o) {
    Builder b("triplet", "Phi_cos on triplets agrees with arcsine2; Gaussian part x 1/2, drift x 2/pi", 1e-8, o);
    const IntegrandSpec cosf(IntegrandName::cos_pi_half);
    const auto grid = check_grid();
    const std::pair<const char*, PolarMeasure> inputs[] = {
        {"delta_1", PolarMeasure::one_dimensional(atom_component(1.0, 1.0))},
        {"EX1 input", ex1_input()},
        {"EX2 input", ex2_input()}};
    for (const auto& [label, nu] : inputs) {
        const Triplet t(Eigen::MatrixXd::Zero(1, 1), nu, Eigen::VectorXd::Zero(1));
        const Triplet tt = transform_triplet(t, cosf);
        const Density& got = only_density(tt.nu);
        const PolarMeasure ref = arcsine2(nu);
        const Density& want = only_density(ref);
        b.error(std::string(label) + ": max relative difference vs arcsine2",
                max_rel_error(got, [&want](double r) { return want(r); }, grid));
    }
    Eigen::MatrixXd sigma(2, 2);
    sigma << 2.0, 0.5, 0.5, 1.0;
    const Eigen::Vector2d gamma(3.0, -1.0);
    const Triplet g(sigma, PolarMeasure::zero(2), gamma);
    const Triplet gt = transform_triplet(g, cosf);
    const double es = (gt.Sigma - 0.5 * sigma).cwiseAbs().maxCoeff();
    const double eg = (gt.gamma - 2.0 / kPi * gamma).cwiseAbs().maxCoeff();
    b.require("Gaussian part scales by 1/2 within 1e-12 (error " + num(es) + ")", es <= 1e-12);
    b.require("drift scales by 2/pi within 1e-12 (error " + num(eg) + ")", eg <= 1e-12);
    return b.done();
}

CheckResult check_laplace(const CheckOptions& o) {
    Builder b("laplace", "Laplace transform of K0 and its integral", 1e-8, o);
    QuadOptions q;
    q.abs_tol = 1e-13;
    for (double s : {0.5, 1.0, 2.0}) {
        const double numeric =
            integrate_pieces([s](double x) { return std::exp(-s * x) * special::k0(x); }, 0.0, kInf, {1.0, 2.0}, q).value;
        b.error("s = " + num(s) + ": |quadrature - closed form|", std::abs(numeric - special::k0_laplace(s)));
    }
    const double total = integrate_pieces([](double x) { return special::k0(x); }, 0.0, kInf, {1.0, 2.0}, q).value;
    b.error("|int K0 - pi/2|", std::abs(total - kPi / 2.0));
    return b.done();
}

CheckResult check_box_muller(const CheckOptions& o) {
    Builder b("box_muller", "Gaussian density as an arcsine mixture", 1e-8, o);
    double classical = 0.0, atomic = 0.0;
    for (double x : {0.0, 0.5, 1.0, 2.0})
        for (double t : {0.5, 1.0, 2.0}) {
            classical = std::max(classical, special::box_muller_residual(x, t));
            atomic = std::max(atomic, special::gauss_arcsine_residual(x, 1.0 / (2.0 * t)));
        }
    b.error("max classical residual on {0,0.5,1,2} x {0.5,1,2}", classical);
    b.error("max single-exponential residual (v = 1/(2t))", atomic);
    return b.done();
}

CheckResult check_separation(const CheckOptions& o) {
    Builder b("separation", "Jurek class is strictly smaller than the range of arcsine1", 0.0, o);
    const PolarMeasure ce = jurek_counterexample();
    const PolarMeasure expo =
        PolarMeasure::one_dimensional(density_component(std::make_shared<ExpPowerDensity>(1.0, 0.0, 1.0, 1.0)));
    const MembershipReport j = is_jurek(ce);
    const MembershipReport a = class_a_necessary(ce);
    const MembershipReport je = is_jurek(expo);
    b.require("is_jurek rejects 2/pi (1-r^2)^{-1/2}", j.verdict == Verdict::non_member);
    if (j.witness) b.note("witness r = " + num(j.witness->location));
    b.require("class_a_necessary accepts 2/pi (1-r^2)^{-1/2}", a.verdict == Verdict::member);
    b.require("is_jurek accepts e^{-r}", je.verdict == Verdict::member);
    return b.done();
}

CheckResult check_type_g(const CheckOptions& o) {
    Builder b("type_g", "class B and L1 input maps to type G under arcsine1", 0.0, o);
    const PolarMeasure in = ex1_input();
    b.require("EX1 input in class B", is_class_b(in).verdict == Verdict::member);
    b.require("EX1 input passes levy_l1", validate(in, LevyLevel::levy_l1).pass);
    b.require("arcsine1(EX1 input) of type G", is_type_g(arcsine1(in)).verdict == Verdict::member);
    return b.done();
}

CheckResult check_monte_carlo(const CheckOptions& o) {
    Builder b("monte_carlo", "empirical cf of int f dX vs cf of the transformed triplet", 0.02, o);
    SimConfig cfg;
    cfg.paths = o.paths;
    cfg.time_steps = o.time_steps;
    cfg.eps = o.eps;
    cfg.seed = o.seed;
    const auto z = line_grid(1, -5.0, 5.0, 21);
    const std::pair<const char*, Triplet> fixtures[] = {
        {"gaussian", Triplet::gaussian(1.0)},
        {"poisson", Triplet(Eigen::MatrixXd::Zero(1, 1), PolarMeasure::one_dimensional(atom_component(1.0, 1.0)),
                            Eigen::VectorXd::Constant(1, 0.5))}};
    b.note("paths " + std::to_string(cfg.paths) + ", steps " + std::to_string(cfg.time_steps) + ", eps " + num(cfg.eps) +
           ", statistical scale 4/sqrt(paths) = " + num(4.0 / std::sqrt(static_cast<double>(cfg.paths))));
    for (const auto& [label, t] : fixtures) {
        const Clock::time_point t0 = Clock::now();
        for (auto name : {IntegrandName::cos_pi_half, IntegrandName::log_sqrt}) {
            const IntegrandSpec f(name);
            const SampleSet s = sample_integral(t, f, cfg);
            const double d = cf_distance(empirical_cf(s, z), char_fn_grid(transform_triplet(t, f), z));
            b.error(std::string(label) + " / " + to_string(name) + ": cf distance", d);
            const SampleSet again = sample_integral(t, f, cfg);
            b.require(std::string(label) + " / " + to_string(name) + ": rerun bit-identical",
                      again.draws.rows() == s.draws.rows() && (again.draws.array() == s.draws.array()).all());
        }
        const double secs = since(t0);
        b.require(std::string(label) + ": runtime " + num(secs) + " s < 60 s", secs < 60.0);
    }
    return b.done();
}

CheckResult check_compose(const CheckOptions& o) {
    Builder b("compose_g", "Psi(-2,2) o Phi_cos = Phi_cos o Psi(-2,2) on delta_1", 1e-5, o);
    const Triplet t(Eigen::MatrixXd::Identity(1, 1), PolarMeasure::one_dimensional(atom_component(1.0, 1.0)),
                    Eigen::VectorXd::Constant(1, 0.25));
    const Triplet a = compose_g(t);
    const Triplet r = compose_g_reversed(t);
    b.error("max |density difference| on 50 points in [0.1, 5]", max_abs_diff(only_density(a.nu), only_density(r.nu), check_grid()));
    b.error("|Sigma difference|", (a.Sigma - r.Sigma).cwiseAbs().maxCoeff());
    b.error("|gamma difference|", (a.gamma - r.gamma).cwiseAbs().maxCoeff());
    b.note("Sigma = " + num(a.Sigma(0, 0)) + " (expected 1/2)");
    return b.done();
}

using CheckFn = std::function<CheckResult(const CheckOptions&)>;

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> r = {
        {"ex1", [](const CheckOptions& o) { return ex_fixture("ex1", "EX1", 1e-6, 10.0, o); }},
        {"ex2", [](const CheckOptions& o) { return ex_fixture("ex2", "EX2", 1e-8, 0.0, o); }},
        {"ex3", [](const CheckOptions& o) { return ex_fixture("ex3", "EX3", 1e-6, 0.0, o); }},
        {"commute", check_commute},
        {"noncommute", check_noncommute},
        {"invert", check_invert},
        {"frac_half", check_frac_half},
        {"triplet", check_triplet},
        {"laplace", check_laplace},
        {"box_muller", check_box_muller},
        {"separation", check_separation},
        {"type_g", check_type_g},
        {"monte_carlo", check_monte_carlo},
        {"compose_g", check_compose},
    };
    return r;
}

}  // namespace

std::vector<std::string> check_names() {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
}

CheckResult run_check(const std::string& name, const CheckOptions& opts) {
    for (const auto& [n, fn] : registry())
        if (n == name) return fn(opts);
    throw ConfigError("unknown check '" + name + "'");
}

}  // namespace levyarc
