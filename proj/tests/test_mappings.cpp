#include <doctest.h>

#include <complex>

#include "helpers.hpp"
#include "levyarc/errors.hpp"
#include "levyarc/mappings.hpp"
#include "levyarc/quadrature.hpp"
#include "oracle_values.hpp"

using namespace levyarc;

namespace {

const IntegrandName kAll[] = {IntegrandName::cos_pi_half, IntegrandName::log_sqrt, IntegrandName::log,
                              IntegrandName::gauss_tail_inverse};

Triplet poisson_triplet() {
    Eigen::MatrixXd s(1, 1);
    s << 0.5;
    Eigen::VectorXd g(1);
    g << 0.3;
    return Triplet(s, th::atoms_1d({{1.0, 2.0}}), g);
}

Triplet exp_triplet() {
    return Triplet(Eigen::MatrixXd::Zero(1, 1), th::exp_power_1d(1.0, 0.0, 1.0, 1.0), Eigen::VectorXd::Zero(1));
}

Eigen::VectorXd z1(double x) {
    Eigen::VectorXd z(1);
    z << x;
    return z;
}

template <std::size_t N>
void check_exponent(const Triplet& t, const oracle::RefComplex (&ref)[N], double tol) {
    for (const auto& r : ref) {
        const std::complex<double> got = levy_exponent(t, z1(r.z));
        const double scale = std::max(1.0, std::abs(std::complex<double>(r.re, r.im)));
        CHECK(std::abs(got.real() - r.re) < tol * scale);
        CHECK(std::abs(got.imag() - r.im) < tol * scale);
    }
}

}  // namespace

TEST_SUITE("mappings") {

TEST_CASE("integrand closed forms agree with quadrature") {
    for (IntegrandName n : kAll) {
        CAPTURE(to_string(n));
        const IntegrandSpec f(n);
        CHECK(integrand_from_string(to_string(n)) == n);
        const QuadResult i1 = integrate_gk([&](double t) { return f(t); }, 0.0, f.T());
        const QuadResult i2 = integrate_gk([&](double t) { return f(t) * f(t); }, 0.0, f.T());
        CHECK(i1.value == doctest::Approx(f.integral()).epsilon(1e-9));
        CHECK(i2.value == doctest::Approx(f.square_integral()).epsilon(1e-9));
        for (double t : {0.1, 0.4, 0.8}) {
            const double tt = t * f.T();
            CHECK(f.inverse(f(tt)) == doctest::Approx(tt).epsilon(1e-10));
            const double h = 1e-6 * f.T();
            CHECK(f.derivative(tt) == doctest::Approx((f(tt + h) - f(tt - h)) / (2 * h)).epsilon(1e-5));
            CHECK(f.primitive(tt) ==
                  doctest::Approx(integrate_gk([&](double s) { return f(s); }, 0.0, tt).value).epsilon(1e-9));
        }
    }
    CHECK_THROWS_AS(integrand_from_string("sin"), ConfigError);
}

TEST_CASE("gauss tail inverse") {
    for (const auto& [t, u] : oracle::kGaussTailInverse) CHECK(th::rel(gauss_tail_inverse(t), u) < 1e-12);
    for (double t : {1e-12, 1e-5, 0.2, 0.5, 0.88}) CHECK(std::abs(gauss_tail(gauss_tail_inverse(t)) - t) <= 1e-10 * t);
    CHECK(std::isinf(gauss_tail_inverse(0.0)));
    CHECK(gauss_tail_inverse(0.5 * std::sqrt(M_PI)) == 0.0);
}

TEST_CASE("triplet invariants") {
    Eigen::MatrixXd bad(1, 1);
    bad << -1.0;
    CHECK_THROWS_AS(Triplet(bad, PolarMeasure::zero(1), Eigen::VectorXd::Zero(1)), MalformedMeasure);
    CHECK_THROWS_AS(Triplet(Eigen::MatrixXd::Zero(2, 2), PolarMeasure::zero(1), Eigen::VectorXd::Zero(1)),
                    MalformedMeasure);
    Eigen::MatrixXd asym(2, 2);
    asym << 1.0, 0.5, 0.0, 1.0;
    CHECK_THROWS_AS(Triplet(asym, PolarMeasure::zero(2), Eigen::VectorXd::Zero(2)), MalformedMeasure);
    CHECK_THROWS_AS(Triplet(Eigen::MatrixXd::Zero(1, 1), th::exp_power_1d(1.0, -3.5, 1.0, 1.0), Eigen::VectorXd::Zero(1)),
                    MalformedMeasure);
}

TEST_CASE("Levy exponent matches direct quadrature") {
    check_exponent(poisson_triplet(), oracle::kPsiAtom, 1e-12);
    check_exponent(exp_triplet(), oracle::kPsiExp, 1e-9);
}

TEST_CASE("characteristic function basics") {
    const Triplet t = poisson_triplet();
    CHECK(char_fn(t, z1(0.0)) == std::complex<double>(1.0, 0.0));
    for (double x : {-10.0, -1.0, 0.5, 3.0, 40.0}) CHECK(std::abs(char_fn(t, z1(x))) <= 1.0);
    // symmetric measure, no drift: real characteristic function
    RadialComponent rc = density_component(std::make_shared<ExpPowerDensity>(1.0, -1.5, 1.0, 1.0));
    const PolarMeasure sym(1, {{Direction({1.0}), rc}, {Direction({-1.0}), rc}});
    const Triplet s(Eigen::MatrixXd::Zero(1, 1), sym, Eigen::VectorXd::Zero(1));
    for (double x : {0.3, 2.0}) {
        const auto v = char_fn(s, z1(x));
        CHECK(std::abs(v.imag()) < 1e-12);
        CHECK(v.real() == doctest::Approx(char_fn(s, z1(-x)).real()).epsilon(1e-12));
    }
    CHECK_THROWS_AS(char_fn(t, Eigen::VectorXd::Zero(2)), DomainError);
    const auto g = char_fn_grid(t, line_grid(1, -2.0, 2.0, 5));
    REQUIRE(g.values.size() == 5);
    CHECK(g.values[2] == std::complex<double>(1.0, 0.0));
}

TEST_CASE("Phi_f has exponent int_0^T psi(f(t) z) dt") {
    const Triplet t = poisson_triplet();
    check_exponent(transform_triplet(t, IntegrandSpec(IntegrandName::cos_pi_half)), oracle::kPhiAtom_cos_pi_half, 1e-8);
    check_exponent(transform_triplet(t, IntegrandSpec(IntegrandName::log_sqrt)), oracle::kPhiAtom_log_sqrt, 1e-8);
    check_exponent(transform_triplet(t, IntegrandSpec(IntegrandName::log)), oracle::kPhiAtom_log, 1e-8);
    check_exponent(transform_triplet(t, IntegrandSpec(IntegrandName::gauss_tail_inverse)),
                   oracle::kPhiAtom_gauss_tail_inverse, 1e-8);
    check_exponent(transform_triplet(exp_triplet(), IntegrandSpec(IntegrandName::cos_pi_half)),
                   oracle::kPhiExp_cos_pi_half, 1e-7);
}

TEST_CASE("Gaussian part and drift scale by the integrals of f") {
    Eigen::MatrixXd s(2, 2);
    s << 2.0, 0.5, 0.5, 1.0;
    Eigen::VectorXd g(2);
    g << 3.0, -1.0;
    const Triplet t(s, PolarMeasure::zero(2), g);
    for (IntegrandName n : kAll) {
        const IntegrandSpec f(n);
        const Triplet out = transform_triplet(t, f);
        CHECK((out.Sigma - f.square_integral() * s).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((out.gamma - f.integral() * g).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(out.nu.is_zero());
    }
}

TEST_CASE("the two orders of the G composition give the same Levy measure") {
    const Triplet t(Eigen::MatrixXd::Identity(1, 1), th::atoms_1d({{1.0, 1.0}}), Eigen::VectorXd::Zero(1));
    const Triplet a = compose_g(t), b = compose_g_reversed(t);
    for (double r : {0.1, 0.5, 1.0, 2.0})
        CHECK(th::density_of(a.nu)(r) == doctest::Approx(th::density_of(b.nu)(r)).epsilon(1e-6));
    CHECK(a.Sigma(0, 0) == doctest::Approx(0.5));
    CHECK(b.Sigma(0, 0) == doctest::Approx(0.5));
}

}
