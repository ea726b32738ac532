#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "levyarc/quadrature.hpp"

namespace levyarc {

struct Interval {
    double lo = 0.0;
    double hi = kInf;
};

// Asymptotic metadata used to decide integrability symbolically.
//   zero_exponent:    density = O(r^a) as r -> 0 (up to log factors);
//                     +inf when the support is bounded away from 0.
//   infinity_moment:  sup of p with  int_1^inf r^p density(r) dr < inf;
//                     +inf for bounded support or stretched-exponential decay.
struct Asymptotics {
    double zero_exponent = kInf;
    double infinity_moment = kInf;
};

// A nonnegative density on (0, inf). Implementations are immutable and may be
// shared between measures and threads.
class Density {
public:
    virtual ~Density() = default;

    virtual double operator()(double r) const = 0;
    virtual Interval support() const = 0;
    // Points where the density has an integrable singularity, a jump, or a
    // kink; quadratures split there.
    virtual std::vector<double> breakpoints() const { return {}; }
    virtual Asymptotics asymptotics() const = 0;
    // Number of nested quadratures needed for one evaluation.
    virtual int nesting() const { return 0; }
    virtual std::string kind() const = 0;
};

using DensityPtr = std::shared_ptr<const Density>;

// c * r^a * exp(-b * r^p) on `support`.
class ExpPowerDensity final : public Density {
public:
    ExpPowerDensity(double c, double a, double b, double p, Interval support = {});

    double operator()(double r) const override;
    Interval support() const override { return support_; }
    std::vector<double> breakpoints() const override;
    Asymptotics asymptotics() const override;
    std::string kind() const override { return "exp_power"; }

    double c() const { return c_; }
    double a() const { return a_; }
    double b() const { return b_; }
    double p() const { return p_; }

private:
    double c_, a_, b_, p_;
    Interval support_;
};

// mass * a2(r; scale) = mass * (2/pi) (scale^2 - r^2)^{-1/2} on (0, scale).
// This is the output kernel of both arcsine transforms applied to one atom.
class ArcsineDensity final : public Density {
public:
    ArcsineDensity(double scale, double mass = 1.0);

    double operator()(double r) const override;
    Interval support() const override { return {0.0, scale_}; }
    std::vector<double> breakpoints() const override { return {scale_}; }
    Asymptotics asymptotics() const override { return {0.0, kInf}; }
    std::string kind() const override { return "arcsine"; }

    double scale() const { return scale_; }
    double mass() const { return mass_; }

private:
    double scale_, mass_;
};

enum class TableInterp { linear, loglog_cubic };

// Samples (r_i, f_i). `linear` is zero outside [r_0, r_n]; `loglog_cubic`
// interpolates log f against log r with cubic Hermite segments and extends below
// r_0 as a power law when `extend_low` is set.
class TableDensity final : public Density {
public:
    TableDensity(std::vector<double> r, std::vector<double> f, TableInterp interp = TableInterp::linear,
                 bool extend_low = true);

    double operator()(double r) const override;
    Interval support() const override;
    std::vector<double> breakpoints() const override;
    Asymptotics asymptotics() const override;
    std::string kind() const override { return "table"; }

    const std::vector<double>& abscissae() const { return r_; }
    const std::vector<double>& ordinates() const { return f_; }
    TableInterp interp() const { return interp_; }
    bool extends_low() const { return interp_ == TableInterp::loglog_cubic && extend_low_; }

private:
    double low_slope() const;

    std::vector<double> r_;
    std::vector<double> f_;
    TableInterp interp_;
    bool extend_low_;
};

// Closed-form density supplied as a callable, used for fixtures.
class FunctionDensity final : public Density {
public:
    FunctionDensity(std::string name, ScalarFn fn, Interval support, Asymptotics asym,
                    std::vector<double> breaks = {});

    double operator()(double r) const override;
    Interval support() const override { return support_; }
    std::vector<double> breakpoints() const override { return breaks_; }
    Asymptotics asymptotics() const override { return asym_; }
    std::string kind() const override { return name_; }

private:
    std::string name_;
    ScalarFn fn_;
    Interval support_;
    Asymptotics asym_;
    std::vector<double> breaks_;
};

enum class Power { square, sqrt };

inline double power_value(Power k) { return k == Power::square ? 2.0 : 0.5; }

// Image of a density under r -> r^k with the change-of-variables Jacobian.
class PowerImageDensity final : public Density {
public:
    PowerImageDensity(DensityPtr source, Power k);

    double operator()(double v) const override;
    Interval support() const override;
    std::vector<double> breakpoints() const override;
    Asymptotics asymptotics() const override;
    int nesting() const override { return source_->nesting(); }
    std::string kind() const override { return "power_image"; }

    const DensityPtr& source() const { return source_; }
    Power power() const { return power_; }

private:
    DensityPtr source_;
    Power power_;
};

struct Atom {
    double r;
    double mass;
};

class Direction {
public:
    explicit Direction(std::vector<double> coords);
    static Direction normalized(std::vector<double> v);

    std::size_t dim() const { return coords_.size(); }
    const std::vector<double>& coords() const { return coords_; }
    double operator[](std::size_t i) const { return coords_[i]; }
    double norm() const;

private:
    std::vector<double> coords_;
};

// Radial measure along one direction: atoms plus an optional density.
// `weight` is the spherical mass of the direction; radial integrals below do
// not include it.
struct RadialComponent {
    std::vector<Atom> atoms;
    DensityPtr density;
    double weight = 1.0;

    bool empty() const { return atoms.empty() && !density; }
    // Throws MalformedMeasure on invalid atoms or weight.
    void check() const;
};

RadialComponent atom_component(double r, double mass = 1.0, double weight = 1.0);
RadialComponent density_component(DensityPtr density, double weight = 1.0);

struct PolarComponent {
    Direction direction;
    RadialComponent radial;
};

class PolarMeasure {
public:
    explicit PolarMeasure(std::size_t dim, std::vector<PolarComponent> components = {});

    static PolarMeasure one_dimensional(RadialComponent positive);
    static PolarMeasure zero(std::size_t dim) { return PolarMeasure(dim); }

    std::size_t dim() const { return dim_; }
    const std::vector<PolarComponent>& components() const { return components_; }
    bool is_zero() const;

private:
    std::size_t dim_;
    std::vector<PolarComponent> components_;
};

enum class LevyLevel { levy, levy_l1 };

struct ComponentDiagnostic {
    std::size_t index;
    bool near_zero_ok;
    bool at_infinity_ok;
    std::string detail;
};

struct ValidationReport {
    LevyLevel level;
    bool pass = true;
    std::vector<ComponentDiagnostic> components;
};

// Symbolic check of  int (1 ^ r^2) nu(dr) < inf  (levy) or
// int (1 ^ r) nu(dr) < inf  (levy_l1). Throws MalformedMeasure.
ValidationReport validate(const PolarMeasure& m, LevyLevel level);
bool radial_passes(const RadialComponent& rc, LevyLevel level);

// Sum over atoms in (a, b] of g * mass plus the integral of density * g.
QuadResult integrate(const RadialComponent& rc, const ScalarFn& g, Interval interval = {},
                     const QuadOptions& opts = {});
// Mass of (u, inf).
double tail(const RadialComponent& rc, double u, const QuadOptions& opts = {});
// Total radial mass; infinite when the density is not integrable at 0.
double total_mass(const RadialComponent& rc, const QuadOptions& opts = {});

// Density integral over (a, b) with quadrature split at the density's breakpoints.
QuadResult integrate_density(const Density& f, const ScalarFn& g, double a, double b,
                             const QuadOptions& opts = {});

RadialComponent power_reparam(const RadialComponent& rc, Power k);
PolarMeasure power_reparam(const PolarMeasure& m, Power k);

}  // namespace levyarc
