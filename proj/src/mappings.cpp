#include "levyarc/mappings.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>

#include "levyarc/errors.hpp"
#include "levyarc/parallel.hpp"

namespace levyarc {
namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(kPi);

// sin(x) - x without cancellation for small x.
double sin_minus_x(double x) {
    if (std::abs(x) < 1e-2) {
        const double x2 = x * x;
        return x * x2 * (-1.0 / 6.0 + x2 * (1.0 / 120.0 - x2 / 5040.0));
    }
    return std::sin(x) - x;
}

QuadOptions exponent_quad() {
    QuadOptions q;
    q.abs_tol = 1e-12;
    q.rel_tol = 1e-11;
    return q;
}

}  // namespace

// ---------------------------------------------------------------- Triplet

Triplet::Triplet(Eigen::MatrixXd sigma, PolarMeasure measure, Eigen::VectorXd drift)
    : Sigma(std::move(sigma)), nu(std::move(measure)), gamma(std::move(drift)) {
    check();
}

void Triplet::check() const {
    const auto d = static_cast<Eigen::Index>(nu.dim());
    if (Sigma.rows() != d || Sigma.cols() != d) throw MalformedMeasure("triplet: Sigma must be d x d");
    if (gamma.size() != d) throw MalformedMeasure("triplet: gamma must have length d");
    if (!Sigma.allFinite() || !gamma.allFinite()) throw MalformedMeasure("triplet: non-finite entries");
    if ((Sigma - Sigma.transpose()).cwiseAbs().maxCoeff() > 1e-12) throw MalformedMeasure("triplet: Sigma is not symmetric");
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Sigma, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-12) throw MalformedMeasure("triplet: Sigma is not nonnegative-definite");
    if (!validate(nu, LevyLevel::levy).pass) throw MalformedMeasure("triplet: nu is not a Levy measure");
}

Triplet Triplet::gaussian(double variance, double drift) {
    return Triplet(Eigen::MatrixXd::Constant(1, 1, variance), PolarMeasure::zero(1), Eigen::VectorXd::Constant(1, drift));
}

Triplet Triplet::zero(std::size_t dim) {
    const auto d = static_cast<Eigen::Index>(dim);
    return Triplet(Eigen::MatrixXd::Zero(d, d), PolarMeasure::zero(dim), Eigen::VectorXd::Zero(d));
}

// ---------------------------------------------------------------- integrands

std::string to_string(IntegrandName n) {
    switch (n) {
        case IntegrandName::cos_pi_half: return "cos_pi_half";
        case IntegrandName::log_sqrt: return "log_sqrt";
        case IntegrandName::log: return "log";
        case IntegrandName::gauss_tail_inverse: return "gauss_tail_inverse";
    }
    return "?";
}

IntegrandName integrand_from_string(const std::string& s) {
    for (auto n : {IntegrandName::cos_pi_half, IntegrandName::log_sqrt, IntegrandName::log,
                   IntegrandName::gauss_tail_inverse})
        if (to_string(n) == s) return n;
    throw ConfigError("unknown integrand '" + s + "'");
}

double gauss_tail(double u) { return 0.5 * kSqrtPi * std::erfc(u); }

// Monotone bisection to a loose bracket, then safeguarded Newton on h.
double gauss_tail_inverse(double t) {
    const double top = 0.5 * kSqrtPi;
    if (!(t > 0.0)) return kInf;
    if (!(t < top)) return 0.0;
    double lo = 0.0, hi = 1.0;
    while (gauss_tail(hi) > t) {
        lo = hi;
        hi *= 2.0;
    }
    for (int i = 0; i < 200 && hi - lo > 1e-6 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (gauss_tail(mid) > t ? lo : hi) = mid;
    }
    double u = 0.5 * (lo + hi);
    for (int i = 0; i < 20; ++i) {
        const double step = (gauss_tail(u) - t) * std::exp(u * u);
        double next = u + step;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        (gauss_tail(next) > t ? lo : hi) = next;
        if (std::abs(next - u) <= 1e-16 * next) {
            u = next;
            break;
        }
        u = next;
    }
    return u;
}

namespace {

double closed_square_integral(IntegrandName n) {
    switch (n) {
        case IntegrandName::cos_pi_half: return 0.5;
        case IntegrandName::log_sqrt: return 1.0;
        case IntegrandName::log: return 2.0;
        case IntegrandName::gauss_tail_inverse: return 0.25 * std::sqrt(std::numbers::pi);
    }
    return 0.0;
}

std::array<std::once_flag, 4> square_checked;

}  // namespace

IntegrandSpec::IntegrandSpec(IntegrandName name)
    : name_(name),
      T_(name == IntegrandName::gauss_tail_inverse ? 0.5 * kSqrtPi : 1.0),
      sq_integral_(closed_square_integral(name)) {
    std::call_once(square_checked[static_cast<std::size_t>(name)], [this] {
        QuadOptions q;
        q.abs_tol = 1e-13;
        const double numeric = integrate(dilation(), [](double u) { return u * u; }, {}, q).value;
        if (std::abs(numeric - sq_integral_) > 1e-10) {
            std::ostringstream msg;
            msg << to_string(name_) << ": int f^2 = " << numeric << " by quadrature, expected " << sq_integral_;
            throw Error(msg.str());
        }
    });
}

double IntegrandSpec::operator()(double t) const {
    if (!(t < T_)) return 0.0;
    switch (name_) {
        case IntegrandName::cos_pi_half: return std::cos(0.5 * kPi * t);
        case IntegrandName::log_sqrt: return t > 0.0 ? std::sqrt(-std::log(t)) : kInf;
        case IntegrandName::log: return t > 0.0 ? -std::log(t) : kInf;
        case IntegrandName::gauss_tail_inverse: return gauss_tail_inverse(t);
    }
    return 0.0;
}

double IntegrandSpec::derivative(double t) const {
    switch (name_) {
        case IntegrandName::cos_pi_half: return -0.5 * kPi * std::sin(0.5 * kPi * t);
        case IntegrandName::log_sqrt: return t > 0.0 ? -0.5 / (t * std::sqrt(-std::log(t))) : -kInf;
        case IntegrandName::log: return -1.0 / t;
        case IntegrandName::gauss_tail_inverse: {
            const double u = gauss_tail_inverse(t);
            return -std::exp(u * u);
        }
    }
    return 0.0;
}

double IntegrandSpec::inverse(double u) const {
    switch (name_) {
        case IntegrandName::cos_pi_half: return 2.0 / kPi * std::acos(std::min(1.0, u));
        case IntegrandName::log_sqrt: return std::exp(-u * u);
        case IntegrandName::log: return std::exp(-u);
        case IntegrandName::gauss_tail_inverse: return gauss_tail(u);
    }
    return 0.0;
}

double IntegrandSpec::primitive(double t) const {
    if (!(t > 0.0)) return 0.0;
    t = std::min(t, T_);
    switch (name_) {
        case IntegrandName::cos_pi_half: return 2.0 / kPi * std::sin(0.5 * kPi * t);
        case IntegrandName::log_sqrt: {
            // int_c^inf 2 u^2 e^{-u^2} du with c = f(t)
            const double c = std::sqrt(-std::log(t));
            return c * t + 0.5 * kSqrtPi * std::erfc(c);
        }
        case IntegrandName::log: return t - t * std::log(t);
        case IntegrandName::gauss_tail_inverse: {
            const double c = gauss_tail_inverse(t);
            return 0.5 * std::exp(-c * c);
        }
    }
    return 0.0;
}

DilationMeasure IntegrandSpec::dilation() const {
    const IntegrandSpec self = *this;
    const double top = name_ == IntegrandName::cos_pi_half ? 1.0 : kInf;
    Asymptotics asym;
    asym.zero_exponent = name_ == IntegrandName::log_sqrt ? 1.0 : 0.0;
    std::vector<double> breaks;
    if (std::isfinite(top)) breaks.push_back(top);
    ScalarFn density = [self](double u) {
        const double d = std::abs(self.derivative(self.inverse(u)));
        return std::isinf(d) ? 0.0 : 1.0 / d;
    };
    return density_component(
        std::make_shared<FunctionDensity>("dilation:" + to_string(name_), density, Interval{0.0, top}, asym, breaks));
}

// ---------------------------------------------------------------- characteristic function

std::complex<double> levy_exponent(const Triplet& t, const Eigen::VectorXd& z) {
    if (z.size() != static_cast<Eigen::Index>(t.dim())) throw DomainError("char_fn: z has the wrong dimension");
    double re = -0.5 * z.dot(t.Sigma * z);
    double im = t.gamma.dot(z);
    for (const auto& c : t.nu.components()) {
        double k = 0.0;
        for (std::size_t i = 0; i < t.dim(); ++i) k += c.direction[i] * z[static_cast<Eigen::Index>(i)];
        if (k == 0.0 || c.radial.empty()) continue;
        const QuadOptions q = exponent_quad();
        const double r_part = integrate(c.radial, [k](double r) {
            const double s = std::sin(0.5 * k * r);
            return -2.0 * s * s;
        }, {}, q).value;
        const double i_part = integrate(c.radial, [k](double r) {
            return sin_minus_x(k * r) + k * r * r * r / (1.0 + r * r);
        }, {}, q).value;
        re += c.radial.weight * r_part;
        im += c.radial.weight * i_part;
    }
    return {std::min(re, 0.0), im};
}

std::complex<double> char_fn(const Triplet& t, const Eigen::VectorXd& z) {
    if (z.size() == static_cast<Eigen::Index>(t.dim()) && (z.array() == 0.0).all()) return {1.0, 0.0};
    return std::exp(levy_exponent(t, z));
}

CharFnGrid char_fn_grid(const Triplet& t, const std::vector<Eigen::VectorXd>& z) {
    CharFnGrid g{z, std::vector<std::complex<double>>(z.size())};
    parallel_for(z.size(), [&](std::size_t i) { g.values[i] = char_fn(t, z[i]); });
    return g;
}

std::vector<Eigen::VectorXd> line_grid(std::size_t dim, double lo, double hi, std::size_t points) {
    std::vector<Eigen::VectorXd> out;
    for (std::size_t i = 0; i < points; ++i) {
        Eigen::VectorXd z = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
        z[0] = points == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
        out.push_back(z);
    }
    return out;
}

// ---------------------------------------------------------------- triplet transform

Triplet transform_triplet(const Triplet& t, const IntegrandSpec& f) {
    t.check();
    const DilationMeasure tau = f.dilation();
    const double f_int = f.integral();

    Eigen::MatrixXd sigma = f.square_integral() * t.Sigma;
    PolarMeasure nu = upsilon_tau(t.nu, tau, "phi_" + to_string(f.name()));

    // int_0^T f(t) int x (1/(1+|f(t)x|^2) - 1/(1+|x|^2)) nu(dx) dt, rewritten with
    // u = f(t) as  int nu(dr) r^3/(1+r^2) int u (1-u^2)/(1+u^2 r^2) tau(du).
    QuadOptions inner;
    inner.abs_tol = 1e-14;
    inner.rel_tol = 1e-12;
    QuadOptions outer;
    outer.abs_tol = 1e-12;
    outer.rel_tol = 1e-11;
    auto kernel = [&](double r) {
        const double r2 = r * r;
        const double i = integrate(tau, [r2](double u) { return u * (1.0 - u * u) / (1.0 + u * u * r2); }, {}, inner).value;
        return r * r2 / (1.0 + r2) * i;
    };
    Eigen::VectorXd gamma = f_int * t.gamma;
    double err = t.gamma_error * std::abs(f_int);
    for (const auto& c : t.nu.components()) {
        if (c.radial.empty()) continue;
        const QuadResult q = integrate(c.radial, kernel, {}, outer);
        for (std::size_t i = 0; i < t.dim(); ++i) gamma[static_cast<Eigen::Index>(i)] += c.radial.weight * c.direction[i] * q.value;
        err += c.radial.weight * (q.error + 1e-12 * std::abs(q.value));
    }
    Triplet out(std::move(sigma), std::move(nu), std::move(gamma));
    out.gamma_error = err;
    return out;
}

Triplet compose_g(const Triplet& t) {
    return transform_triplet(transform_triplet(t, IntegrandSpec(IntegrandName::cos_pi_half)),
                             IntegrandSpec(IntegrandName::log_sqrt));
}

Triplet compose_g_reversed(const Triplet& t) {
    return transform_triplet(transform_triplet(t, IntegrandSpec(IntegrandName::log_sqrt)),
                             IntegrandSpec(IntegrandName::cos_pi_half));
}

}  // namespace levyarc
