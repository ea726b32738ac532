#include "levyarc/special.hpp"

#include <cmath>
#include <numbers>

#include "levyarc/errors.hpp"
#include "levyarc/quadrature.hpp"

namespace levyarc::special {
namespace {

constexpr double kPi = std::numbers::pi;

// Power series  K0 = -(log(x/2) + gamma) I0 + sum_k (x^2/4)^k / (k!)^2 H_k.
double k0_series(double x) {
    const double q = 0.25 * x * x;
    double term = 1.0;
    double i0 = 1.0;
    double harmonic = 0.0;
    double tail = 0.0;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<double>(k) * k);
        harmonic += 1.0 / k;
        i0 += term;
        tail += term * harmonic;
        if (term * (1.0 + harmonic) < 1e-18 * (i0 + tail)) break;
    }
    return -(std::log(0.5 * x) + std::numbers::egamma) * i0 + tail;
}

// K0(x) = int_0^inf exp(-x cosh t) dt; the trapezoidal rule converges
// geometrically for this integrand. Scaled by e^{x} to avoid underflow.
double k0_scaled_integral(double x) {
    constexpr double h = 0.0625;
    const double t_max = std::acosh(1.0 + 45.0 / x);
    double sum = 0.5;
    for (int k = 1;; ++k) {
        const double t = k * h;
        if (t > t_max) break;
        const double sh = std::sinh(0.5 * t);
        sum += std::exp(-2.0 * x * sh * sh);
    }
    return h * sum;
}

}  // namespace

double k0(double x) {
    if (!(x > 0.0)) throw DomainError("k0: x must be positive");
    if (x <= 2.0) return k0_series(x);
    return std::exp(-x) * k0_scaled_integral(x);
}

double k0_laplace(double s) {
    if (!(s > 0.0)) throw DomainError("k0_laplace: s must be positive");
    const double e = s - 1.0;
    if (std::abs(e) < 1e-4) return 1.0 - e / 3.0 + 2.0 * e * e / 15.0;
    if (s < 1.0) return std::acos(s) / std::sqrt((1.0 - s) * (1.0 + s));
    return std::log(s + std::sqrt((s - 1.0) * (s + 1.0))) / std::sqrt((s - 1.0) * (s + 1.0));
}

double arcsine_density(const ArcsineKernel& k, double point) {
    if (!(k.s > 0.0) || !std::isfinite(k.s)) throw DomainError("arcsine kernel parameter must be positive");
    switch (k.variant) {
        case ArcsineVariant::symmetric: {
            const double root = std::sqrt(k.s);
            const double x = std::abs(point);
            if (!(x < root)) return 0.0;
            return 1.0 / (kPi * std::sqrt((root - x) * (root + x)));
        }
        case ArcsineVariant::one_sided: {
            if (point < 0.0) throw DomainError("one-sided arcsine density needs r >= 0");
            const double root = std::sqrt(k.s);
            if (!(point < root)) return 0.0;
            return 2.0 / (kPi * std::sqrt((root - point) * (root + point)));
        }
        case ArcsineVariant::squared: {
            if (point < 0.0) throw DomainError("squared arcsine density needs r >= 0");
            if (!(point < k.s)) return 0.0;
            return 2.0 / (kPi * std::sqrt((k.s - point) * (k.s + point)));
        }
    }
    return 0.0;
}

double gauss_arcsine_residual(double x, double v) {
    if (!(v > 0.0)) throw DomainError("gauss_arcsine_residual: v must be positive");
    const double r = std::abs(x);
    const double lhs = std::exp(-r * r * v);
    const double c = 0.5 * std::sqrt(kPi * v);
    QuadOptions q;
    q.abs_tol = 1e-14;
    q.rel_tol = 1e-13;
    const double lo = r * r;
    const QuadResult rhs = integrate_pieces([&](double s) { return a1(r, s) * c * std::exp(-s * v); }, lo, kInf,
                                            {lo}, q);
    return std::abs(lhs - rhs.value);
}

double box_muller_residual(double x, double t) {
    if (!(t > 0.0)) throw DomainError("box_muller_residual: t must be positive");
    const double phi = std::exp(-x * x / (2.0 * t)) / std::sqrt(2.0 * kPi * t);
    const double lo = 0.5 * x * x;
    QuadOptions q;
    q.abs_tol = 1e-14;
    q.rel_tol = 1e-13;
    const QuadResult rhs = integrate_pieces(
        [&](double s) { return std::exp(-s / t) * arcsine_density({ArcsineVariant::symmetric, 2.0 * s}, x); }, lo,
        kInf, {lo}, q);
    return std::abs(phi - rhs.value / t);
}

}  // namespace levyarc::special
