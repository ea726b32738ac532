#include "levyarc/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "levyarc/errors.hpp"

namespace levyarc {

// ---------------------------------------------------------------- exp_power

ExpPowerDensity::ExpPowerDensity(double c, double a, double b, double p, Interval support)
    : c_(c), a_(a), b_(b), p_(p), support_(support) {
    std::ostringstream why;
    if (!(c > 0.0) || !std::isfinite(c)) why << "exp_power: c must be positive (got " << c << ")";
    else if (!std::isfinite(a)) why << "exp_power: a must be finite";
    else if (!(b >= 0.0) || !std::isfinite(b)) why << "exp_power: b must be >= 0 (got " << b << ")";
    else if (!(p > 0.0) || !std::isfinite(p)) why << "exp_power: p must be positive (got " << p << ")";
    else if (!(support.lo >= 0.0) || !(support.hi > support.lo))
        why << "exp_power: support must satisfy 0 <= lo < hi";
    else if (b == 0.0 && std::isinf(support.hi)) why << "exp_power: b = 0 requires a bounded support";
    if (!why.str().empty()) throw MalformedMeasure(why.str());
}

double ExpPowerDensity::operator()(double r) const {
    if (!(r > support_.lo) || !(r < support_.hi)) return 0.0;
    const double e = a_ * std::log(r) - b_ * std::pow(r, p_);
    return c_ * std::exp(e);
}

std::vector<double> ExpPowerDensity::breakpoints() const {
    std::vector<double> out;
    if (support_.lo > 0.0) out.push_back(support_.lo);
    if (std::isfinite(support_.hi)) out.push_back(support_.hi);
    return out;
}

Asymptotics ExpPowerDensity::asymptotics() const {
    Asymptotics s;
    s.zero_exponent = support_.lo > 0.0 ? kInf : a_;
    s.infinity_moment = kInf;
    return s;
}

// ---------------------------------------------------------------- arcsine

ArcsineDensity::ArcsineDensity(double scale, double mass) : scale_(scale), mass_(mass) {
    if (!(scale > 0.0) || !std::isfinite(scale)) throw MalformedMeasure("arcsine: scale must be positive");
    if (!(mass > 0.0) || !std::isfinite(mass)) throw MalformedMeasure("arcsine: mass must be positive");
}

double ArcsineDensity::operator()(double r) const {
    if (!(r >= 0.0) || !(r < scale_)) return 0.0;
    const double gap = (scale_ - r) * (scale_ + r);
    if (!(gap > 0.0)) return 0.0;
    return mass_ * 2.0 / std::numbers::pi / std::sqrt(gap);
}

// ---------------------------------------------------------------- table

TableDensity::TableDensity(std::vector<double> r, std::vector<double> f, TableInterp interp, bool extend_low)
    : r_(std::move(r)), f_(std::move(f)), interp_(interp), extend_low_(extend_low) {
    if (r_.size() != f_.size() || r_.size() < 2) throw MalformedMeasure("table: need >= 2 samples of equal length");
    if (!(r_.front() >= 0.0)) throw MalformedMeasure("table: abscissae must be nonnegative");
    for (std::size_t i = 0; i < r_.size(); ++i) {
        if (!(f_[i] >= 0.0) || !std::isfinite(f_[i])) throw MalformedMeasure("table: ordinates must be finite and >= 0");
        if (i > 0 && !(r_[i] > r_[i - 1])) throw MalformedMeasure("table: abscissae must be strictly increasing");
    }
    if (interp_ == TableInterp::loglog_cubic && !(r_.front() > 0.0))
        throw MalformedMeasure("table: loglog interpolation needs positive abscissae");
}

double TableDensity::low_slope() const {
    if (f_[0] > 0.0 && f_[1] > 0.0) return std::log(f_[1] / f_[0]) / std::log(r_[1] / r_[0]);
    return 0.0;
}

double TableDensity::operator()(double r) const {
    if (!(r < r_.back())) return r == r_.back() ? f_.back() : 0.0;
    if (r < r_.front()) {
        if (!extends_low() || !(r > 0.0)) return 0.0;
        if (!(f_[0] > 0.0)) return 0.0;
        return f_[0] * std::pow(r / r_[0], low_slope());
    }
    const auto it = std::upper_bound(r_.begin(), r_.end(), r);
    const std::size_t i = static_cast<std::size_t>(it - r_.begin()) - 1;
    const double r0 = r_[i], r1 = r_[i + 1];
    const double f0 = f_[i], f1 = f_[i + 1];
    if (interp_ == TableInterp::linear || !(f0 > 0.0) || !(f1 > 0.0)) {
        const double t = (r - r0) / (r1 - r0);
        return f0 + t * (f1 - f0);
    }
    // Cubic Hermite in (log r, log f) with centred secant tangents.
    const double x0 = std::log(r0), x1 = std::log(r1);
    const double y0 = std::log(f0), y1 = std::log(f1);
    const double h = x1 - x0;
    const double s = (y1 - y0) / h;
    double m0 = s, m1 = s;
    if (i > 0 && f_[i - 1] > 0.0) m0 = 0.5 * (s + (y0 - std::log(f_[i - 1])) / (x0 - std::log(r_[i - 1])));
    if (i + 2 < r_.size() && f_[i + 2] > 0.0) m1 = 0.5 * (s + (std::log(f_[i + 2]) - y1) / (std::log(r_[i + 2]) - x1));
    const double t = (std::log(r) - x0) / h;
    const double t2 = t * t, t3 = t2 * t;
    const double y = (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * h * m0 + (-2 * t3 + 3 * t2) * y1 +
                     (t3 - t2) * h * m1;
    return std::exp(y);
}

Interval TableDensity::support() const {
    return {extends_low() ? 0.0 : r_.front(), r_.back()};
}

std::vector<double> TableDensity::breakpoints() const {
    std::vector<double> out;
    if (!extends_low() && r_.front() > 0.0) out.push_back(r_.front());
    out.push_back(r_.back());
    return out;
}

Asymptotics TableDensity::asymptotics() const {
    Asymptotics s;
    if (!extends_low()) s.zero_exponent = r_.front() > 0.0 ? kInf : 0.0;
    else s.zero_exponent = f_[0] > 0.0 ? low_slope() : kInf;
    return s;
}

// ---------------------------------------------------------------- function

FunctionDensity::FunctionDensity(std::string name, ScalarFn fn, Interval support, Asymptotics asym,
                                 std::vector<double> breaks)
    : name_(std::move(name)), fn_(std::move(fn)), support_(support), asym_(asym), breaks_(std::move(breaks)) {}

double FunctionDensity::operator()(double r) const {
    if (!(r > support_.lo) || !(r < support_.hi)) return 0.0;
    return fn_(r);
}

// ---------------------------------------------------------------- power image

PowerImageDensity::PowerImageDensity(DensityPtr source, Power k) : source_(std::move(source)), power_(k) {
    if (!source_) throw MalformedMeasure("power image of a null density");
}

double PowerImageDensity::operator()(double v) const {
    if (!(v > 0.0)) return 0.0;
    if (power_ == Power::square) {
        const double r = std::sqrt(v);
        return (*source_)(r) / (2.0 * r);
    }
    return (*source_)(v * v) * 2.0 * v;
}

Interval PowerImageDensity::support() const {
    const Interval s = source_->support();
    if (power_ == Power::square) return {s.lo * s.lo, s.hi * s.hi};
    return {std::sqrt(s.lo), std::sqrt(s.hi)};
}

std::vector<double> PowerImageDensity::breakpoints() const {
    std::vector<double> out;
    for (double b : source_->breakpoints()) out.push_back(power_ == Power::square ? b * b : std::sqrt(b));
    return out;
}

Asymptotics PowerImageDensity::asymptotics() const {
    const Asymptotics s = source_->asymptotics();
    if (power_ == Power::square) return {(s.zero_exponent - 1.0) / 2.0, s.infinity_moment / 2.0};
    return {2.0 * s.zero_exponent + 1.0, 2.0 * s.infinity_moment};
}

// ---------------------------------------------------------------- direction

Direction::Direction(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw MalformedMeasure("direction must have dimension >= 1");
    if (std::abs(norm() - 1.0) > 1e-12) {
        std::ostringstream msg;
        msg << "direction is not a unit vector (norm " << norm() << ")";
        throw MalformedMeasure(msg.str());
    }
}

Direction Direction::normalized(std::vector<double> v) {
    double n = 0.0;
    for (double x : v) n += x * x;
    n = std::sqrt(n);
    if (!(n > 0.0) || !std::isfinite(n)) throw MalformedMeasure("cannot normalise a zero direction");
    for (double& x : v) x /= n;
    return Direction(std::move(v));
}

double Direction::norm() const {
    double n = 0.0;
    for (double x : coords_) n += x * x;
    return std::sqrt(n);
}

// ---------------------------------------------------------------- radial component

void RadialComponent::check() const {
    if (!(weight > 0.0) || !std::isfinite(weight)) throw MalformedMeasure("component weight must be positive");
    for (const Atom& at : atoms) {
        if (!(at.r > 0.0) || !std::isfinite(at.r)) throw MalformedMeasure("atom location must be positive and finite");
        if (!(at.mass > 0.0) || !std::isfinite(at.mass)) throw MalformedMeasure("atom mass must be positive and finite");
    }
}

RadialComponent atom_component(double r, double mass, double weight) {
    RadialComponent rc;
    rc.atoms.push_back({r, mass});
    rc.weight = weight;
    rc.check();
    return rc;
}

RadialComponent density_component(DensityPtr density, double weight) {
    RadialComponent rc;
    rc.density = std::move(density);
    rc.weight = weight;
    rc.check();
    return rc;
}

// ---------------------------------------------------------------- polar measure

PolarMeasure::PolarMeasure(std::size_t dim, std::vector<PolarComponent> components)
    : dim_(dim), components_(std::move(components)) {
    if (dim_ == 0) throw MalformedMeasure("dimension must be >= 1");
    for (std::size_t i = 0; i < components_.size(); ++i) {
        const auto& ci = components_[i];
        if (ci.direction.dim() != dim_) throw MalformedMeasure("direction dimension does not match measure");
        ci.radial.check();
        for (std::size_t j = 0; j < i; ++j) {
            double diff = 0.0;
            for (std::size_t k = 0; k < dim_; ++k)
                diff = std::max(diff, std::abs(ci.direction[k] - components_[j].direction[k]));
            if (diff <= 1e-12) throw MalformedMeasure("two components share the same direction");
        }
    }
}

PolarMeasure PolarMeasure::one_dimensional(RadialComponent positive) {
    std::vector<PolarComponent> comps;
    comps.push_back({Direction({1.0}), std::move(positive)});
    return PolarMeasure(1, std::move(comps));
}

bool PolarMeasure::is_zero() const {
    return std::all_of(components_.begin(), components_.end(), [](const auto& c) { return c.radial.empty(); });
}

// ---------------------------------------------------------------- validation

namespace {

ComponentDiagnostic diagnose(std::size_t index, const RadialComponent& rc, LevyLevel level) {
    ComponentDiagnostic d{index, true, true, {}};
    if (!rc.density) {
        d.detail = rc.atoms.empty() ? "empty component" : "atoms only (finite measure)";
        return d;
    }
    const Asymptotics s = rc.density->asymptotics();
    // int_0^1 r^q r^a dr < inf  <=>  a > -1 - q,  q = 2 (levy) or 1 (levy_l1)
    const double threshold = level == LevyLevel::levy ? -3.0 : -2.0;
    d.near_zero_ok = s.zero_exponent > threshold;
    d.at_infinity_ok = s.infinity_moment > 0.0;
    std::ostringstream msg;
    msg << rc.density->kind() << ": density ~ r^" << s.zero_exponent << " at 0 (need > " << threshold << ")";
    if (!d.at_infinity_ok) msg << "; not integrable at infinity";
    d.detail = msg.str();
    return d;
}

}  // namespace

bool radial_passes(const RadialComponent& rc, LevyLevel level) {
    rc.check();
    const auto d = diagnose(0, rc, level);
    return d.near_zero_ok && d.at_infinity_ok;
}

ValidationReport validate(const PolarMeasure& m, LevyLevel level) {
    ValidationReport rep;
    rep.level = level;
    for (std::size_t i = 0; i < m.components().size(); ++i) {
        const auto& c = m.components()[i];
        c.radial.check();
        if (std::abs(c.direction.norm() - 1.0) > 1e-12) throw MalformedMeasure("direction is not a unit vector");
        auto d = diagnose(i, c.radial, level);
        rep.pass = rep.pass && d.near_zero_ok && d.at_infinity_ok;
        rep.components.push_back(std::move(d));
    }
    return rep;
}

// ---------------------------------------------------------------- integration

QuadResult integrate_density(const Density& f, const ScalarFn& g, double a, double b, const QuadOptions& opts) {
    const Interval s = f.support();
    const double lo = std::max(a, s.lo);
    const double hi = std::min(b, s.hi);
    if (!(hi > lo)) return {};
    const std::vector<double> breaks = f.breakpoints();
    auto integrand = [&](double x) {
        const double v = f(x);
        return v == 0.0 ? 0.0 : v * g(x);
    };
    return integrate_pieces(integrand, lo, hi, breaks, opts);
}

QuadResult integrate(const RadialComponent& rc, const ScalarFn& g, Interval interval, const QuadOptions& opts) {
    QuadResult out;
    for (const Atom& at : rc.atoms)
        if (at.r > interval.lo && at.r <= interval.hi) out.value += at.mass * g(at.r);
    if (rc.density) {
        const QuadResult d = integrate_density(*rc.density, g, interval.lo, interval.hi, opts);
        out.value += d.value;
        out.error += d.error;
        out.evaluations += d.evaluations;
    }
    return out;
}

double tail(const RadialComponent& rc, double u, const QuadOptions& opts) {
    if (!(u > 0.0)) throw DomainError("tail: u must be positive");
    return integrate(rc, [](double) { return 1.0; }, {u, kInf}, opts).value;
}

double total_mass(const RadialComponent& rc, const QuadOptions& opts) {
    if (rc.density && !(rc.density->asymptotics().zero_exponent > -1.0)) return kInf;
    return integrate(rc, [](double) { return 1.0; }, {0.0, kInf}, opts).value;
}

// ---------------------------------------------------------------- power reparametrisation

RadialComponent power_reparam(const RadialComponent& rc, Power k) {
    RadialComponent out;
    out.weight = rc.weight;
    for (const Atom& at : rc.atoms)
        out.atoms.push_back({k == Power::square ? at.r * at.r : std::sqrt(at.r), at.mass});
    if (!rc.density) return out;

    if (const auto* ep = dynamic_cast<const ExpPowerDensity*>(rc.density.get())) {
        const Interval s = ep->support();
        if (k == Power::square) {
            out.density = std::make_shared<ExpPowerDensity>(ep->c() / 2.0, (ep->a() - 1.0) / 2.0, ep->b(),
                                                            ep->p() / 2.0, Interval{s.lo * s.lo, s.hi * s.hi});
        } else {
            out.density = std::make_shared<ExpPowerDensity>(2.0 * ep->c(), 2.0 * ep->a() + 1.0, ep->b(),
                                                            2.0 * ep->p(),
                                                            Interval{std::sqrt(s.lo), std::sqrt(s.hi)});
        }
        return out;
    }
    if (const auto* pi = dynamic_cast<const PowerImageDensity*>(rc.density.get()); pi && pi->power() != k) {
        out.density = pi->source();
        return out;
    }
    out.density = std::make_shared<PowerImageDensity>(rc.density, k);
    return out;
}

PolarMeasure power_reparam(const PolarMeasure& m, Power k) {
    if (k == Power::square && !validate(m, LevyLevel::levy).pass)
        throw DomainError("power_reparam(2) requires a Levy measure");
    std::vector<PolarComponent> comps;
    for (const auto& c : m.components()) comps.push_back({c.direction, power_reparam(c.radial, k)});
    return PolarMeasure(m.dim(), std::move(comps));
}

}  // namespace levyarc
