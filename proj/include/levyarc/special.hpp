#pragma once

namespace levyarc::special {

// Modified Bessel function of the second kind, order zero.
double k0(double x);

// Laplace transform  int_0^inf e^{-s x} K0(x) dx.
double k0_laplace(double s);

enum class ArcsineVariant { symmetric, one_sided, squared };

struct ArcsineKernel {
    ArcsineVariant variant;
    double s;
};

// symmetric:  a(x; s)   = pi^{-1} (s - x^2)^{-1/2} on |x| < sqrt(s)
// one_sided:  a1(r; s)  = 2 pi^{-1} (s - r^2)^{-1/2} on [0, sqrt(s))
// squared:    a2(r; s)  = a1(r; s^2)
double arcsine_density(const ArcsineKernel& k, double point);

inline double a1(double r, double s) { return arcsine_density({ArcsineVariant::one_sided, s}, r); }
inline double a2(double r, double s) { return arcsine_density({ArcsineVariant::squared, s}, r); }

// | e^{-x^2 v} - int_0^inf a1(x; s) (sqrt(pi)/2) v^{1/2} e^{-s v} ds |,
// the completely monotone representation with a single exponential.
double gauss_arcsine_residual(double x, double v);

// | phi(x; t) - t^{-1} int_0^inf e^{-s/t} a(x; 2s) ds |, phi the N(0, t) density.
double box_muller_residual(double x, double t);

}  // namespace levyarc::special
