#pragma once

#include <mutex>
#include <string>
#include <vector>

#include "levyarc/measure.hpp"

namespace levyarc {

// A dilation measure tau on (0, inf) for Upsilon transforms. Reuses the radial
// representation; `weight` is ignored.
using DilationMeasure = RadialComponent;

enum class KernelKind { arcsine1, upsilon, frac_half };

// Lazily evaluated output density of a transform applied to one radial
// component. Each evaluation costs at most one quadrature against the source.
class TransformedDensity final : public Density {
public:
    TransformedDensity(KernelKind kind, RadialComponent source, DilationMeasure tau = {}, std::string label = {});

    double operator()(double r) const override;
    Interval support() const override { return support_; }
    std::vector<double> breakpoints() const override { return breaks_; }
    Asymptotics asymptotics() const override { return asym_; }
    int nesting() const override;
    std::string kind() const override { return label_; }

    KernelKind kernel() const { return kind_; }
    const RadialComponent& source() const { return source_; }
    const DilationMeasure& tau() const { return tau_; }

    // Memoised tabulation on a geometric grid (write-once, thread-safe).
    DensityPtr tabulated() const;

private:
    double eval_arcsine1(double r) const;
    double eval_upsilon(double r) const;
    double eval_frac_half(double u) const;

    KernelKind kind_;
    RadialComponent source_;
    DilationMeasure tau_;
    std::string label_;
    Interval support_;
    std::vector<double> breaks_;
    Asymptotics asym_;

    mutable std::once_flag table_once_;
    mutable DensityPtr table_;
};

// Tabulates a density on a geometric grid with `per_decade` points per decade
// and log-log cubic interpolation.
DensityPtr tabulate(const Density& f, int per_decade = 512);

// Chains deeper than two nested quadratures tabulate their input first.
inline constexpr int kMaxNesting = 2;

// Transforms of a single radial component (weights are carried through).
RadialComponent arcsine1(const RadialComponent& rc);
RadialComponent upsilon_tau(const RadialComponent& rc, const DilationMeasure& tau, const std::string& label = "upsilon");
RadialComponent frac_half(const RadialComponent& rc);

PolarMeasure arcsine1(const PolarMeasure& m);
PolarMeasure arcsine2(const PolarMeasure& m);
PolarMeasure upsilon_tau(const PolarMeasure& m, const DilationMeasure& tau, const std::string& label = "upsilon");
PolarMeasure upsilon0(const PolarMeasure& m);
PolarMeasure upsilon_alpha_beta(const PolarMeasure& m, double alpha, double beta);

// Dilation measures of the named transforms.
DilationMeasure arcsine_dilation();                       // 2/pi (1-u^2)^{-1/2} on (0,1)
DilationMeasure exponential_dilation();                   // e^{-u}
DilationMeasure alpha_beta_dilation(double alpha, double beta);  // beta s^{-alpha-1} e^{-s^beta}

struct TailTable {
    Direction direction;
    double weight;
    std::vector<double> u;
    std::vector<double> tail;
};

struct InversionResult {
    std::size_t dim;
    std::vector<TailTable> tails;
};

// Maximum allowed increase of a recovered tail between grid points, relative
// to the largest recovered value.
inline constexpr double kNotInRangeTolerance = 1e-7;

std::vector<double> default_inversion_grid();

// Recovers source tails  rho((u, inf)) = int_0^inf l(sqrt(u + w^2)) dw  from
// arcsine1 output densities l. Throws NotInRange on non-monotone tails.
InversionResult invert_arcsine1(const PolarMeasure& transformed, const std::vector<double>& grid,
                                const QuadOptions& opts = kernel_quad(),
                                double monotone_tol = kNotInRangeTolerance);
std::vector<double> recovered_tail(const RadialComponent& transformed, const std::vector<double>& grid,
                                   const QuadOptions& opts = kernel_quad());

// Applies a comma-separated chain of a1, a2, ups0, ups:ALPHA:BETA, pow2, powhalf
// from left to right. Throws ConfigError on an unknown token.
PolarMeasure apply_chain(const PolarMeasure& m, const std::string& chain);

// Moment  int r^k nu_xi(dr)  of a radial component by quadrature.
double radial_moment(const RadialComponent& rc, double k, const QuadOptions& opts = kernel_quad());

}  // namespace levyarc
