#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "levyarc/measure.hpp"
#include "levyarc/transforms.hpp"

namespace levyarc {

// Levy-Khintchine triplet with centering x / (1 + |x|^2).
struct Triplet {
    Eigen::MatrixXd Sigma;
    PolarMeasure nu;
    Eigen::VectorXd gamma;
    // Bound on the quadrature error carried by gamma (nonzero after transform_triplet).
    double gamma_error = 0.0;

    Triplet(Eigen::MatrixXd sigma, PolarMeasure nu, Eigen::VectorXd gamma);

    std::size_t dim() const { return nu.dim(); }
    // Throws MalformedMeasure when Sigma is not symmetric nonnegative-definite,
    // dimensions disagree, or nu is not a Levy measure.
    void check() const;

    static Triplet gaussian(double variance, double drift = 0.0);
    static Triplet zero(std::size_t dim);
};

enum class IntegrandName { cos_pi_half, log_sqrt, log, gauss_tail_inverse };

std::string to_string(IntegrandName n);
IntegrandName integrand_from_string(const std::string& s);

// One of the four nonnegative decreasing integrands on [0, T] used by the
// stochastic-integral mappings.
class IntegrandSpec {
public:
    explicit IntegrandSpec(IntegrandName name);

    IntegrandName name() const { return name_; }
    double T() const { return T_; }
    double operator()(double t) const;
    double derivative(double t) const;
    // Inverse of f on (f(T), f(0)).
    double inverse(double u) const;
    // int_0^t f(s) ds in closed form.
    double primitive(double t) const;
    double integral() const { return primitive(T_); }
    // int_0^T f^2, closed form; verified once by quadrature at construction.
    double square_integral() const { return sq_integral_; }
    // Image of Lebesgue measure on [0, T] under f, density 1 / |f'(f^{-1}(u))|.
    DilationMeasure dilation() const;
    // f is unbounded at t = 0.
    bool singular_at_zero() const { return name_ != IntegrandName::cos_pi_half; }

private:
    IntegrandName name_;
    double T_;
    double sq_integral_;
};

// h(u) = int_u^inf e^{-v^2} dv and its inverse on (0, sqrt(pi)/2).
double gauss_tail(double u);
double gauss_tail_inverse(double t);

// Levy exponent psi(z) with  char_fn = exp(psi).
std::complex<double> levy_exponent(const Triplet& t, const Eigen::VectorXd& z);
std::complex<double> char_fn(const Triplet& t, const Eigen::VectorXd& z);

struct CharFnGrid {
    std::vector<Eigen::VectorXd> z;
    std::vector<std::complex<double>> values;
};

CharFnGrid char_fn_grid(const Triplet& t, const std::vector<Eigen::VectorXd>& z);
// Points z = (x, 0, ..., 0) for x on an equispaced grid.
std::vector<Eigen::VectorXd> line_grid(std::size_t dim, double lo, double hi, std::size_t points);

// Triplet of the law of  int_0^T f(t) dX_t.
Triplet transform_triplet(const Triplet& t, const IntegrandSpec& f);

// Psi_{-2,2} o Phi_cos: cos_pi_half first, then log_sqrt.
Triplet compose_g(const Triplet& t);
Triplet compose_g_reversed(const Triplet& t);

}  // namespace levyarc
