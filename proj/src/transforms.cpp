#include "levyarc/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "levyarc/errors.hpp"
#include "levyarc/parallel.hpp"
#include "levyarc/special.hpp"

namespace levyarc {
namespace {

constexpr double kPi = std::numbers::pi;

// Atoms, density breakpoints and finite support ends: every location where a
// component may be singular.
std::vector<double> singular_locations(const RadialComponent& rc) {
    std::vector<double> out;
    for (const Atom& a : rc.atoms) out.push_back(a.r);
    if (rc.density) {
        for (double b : rc.density->breakpoints()) out.push_back(b);
        const Interval s = rc.density->support();
        if (s.lo > 0.0) out.push_back(s.lo);
        if (std::isfinite(s.hi)) out.push_back(s.hi);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double max_atom(const RadialComponent& rc) {
    double m = 0.0;
    for (const Atom& a : rc.atoms) m = std::max(m, a.r);
    return m;
}

void include(Interval& acc, bool& any, Interval add) {
    if (!(add.hi > add.lo)) return;
    if (!any) {
        acc = add;
        any = true;
        return;
    }
    acc.lo = std::min(acc.lo, add.lo);
    acc.hi = std::max(acc.hi, add.hi);
}

RadialComponent flatten_deep(RadialComponent rc) {
    if (rc.density && rc.density->nesting() >= kMaxNesting) {
        if (const auto* t = dynamic_cast<const TransformedDensity*>(rc.density.get())) rc.density = t->tabulated();
        else rc.density = tabulate(*rc.density);
    }
    return rc;
}

}  // namespace

// ---------------------------------------------------------------- TransformedDensity

TransformedDensity::TransformedDensity(KernelKind kind, RadialComponent source, DilationMeasure tau, std::string label)
    : kind_(kind), source_(flatten_deep(std::move(source))), tau_(flatten_deep(std::move(tau))), label_(std::move(label)) {
    if (label_.empty()) label_ = kind == KernelKind::arcsine1 ? "a1" : kind == KernelKind::upsilon ? "upsilon" : "frac_half";

    const bool src_density = static_cast<bool>(source_.density);
    const Asymptotics src_asym = src_density ? source_.density->asymptotics() : Asymptotics{};
    const Interval src_support = src_density ? source_.density->support() : Interval{0.0, 0.0};
    const std::vector<double> src_sing = singular_locations(source_);

    switch (kind_) {
        case KernelKind::arcsine1: {
            const double top = std::max(max_atom(source_), src_density ? src_support.hi : 0.0);
            support_ = {0.0, std::sqrt(top)};
            for (double p : src_sing) breaks_.push_back(std::sqrt(p));
            asym_.zero_exponent = src_density ? std::min(0.0, 2.0 * src_asym.zero_exponent + 1.0) : 0.0;
            asym_.infinity_moment = 2.0 * src_asym.infinity_moment;
            break;
        }
        case KernelKind::frac_half: {
            const double top = std::max(max_atom(source_), src_density ? src_support.hi : 0.0);
            support_ = {0.0, top};
            breaks_ = src_sing;
            const double a = src_asym.zero_exponent;
            asym_.zero_exponent = (src_density && a < -0.5) ? a + 0.5 : 0.0;
            asym_.infinity_moment = src_asym.infinity_moment - 0.5;
            break;
        }
        case KernelKind::upsilon: {
            const bool tau_density = static_cast<bool>(tau_.density);
            const Interval tau_support = tau_density ? tau_.density->support() : Interval{0.0, 0.0};
            bool any = false;
            if (tau_density) {
                for (const Atom& a : source_.atoms) include(support_, any, {a.r * tau_support.lo, a.r * tau_support.hi});
                if (src_density)
                    include(support_, any,
                            {src_support.lo * tau_support.lo, src_support.hi * tau_support.hi});
            }
            if (src_density)
                for (const Atom& c : tau_.atoms) include(support_, any, {c.r * src_support.lo, c.r * src_support.hi});
            if (!any) support_ = {0.0, 0.0};

            const std::vector<double> tau_sing = singular_locations(tau_);
            for (double p : src_sing)
                for (double q : tau_sing) breaks_.push_back(p * q);

            const double t0 = tau_density ? tau_.density->asymptotics().zero_exponent : kInf;
            const double a_src = src_density ? src_asym.zero_exponent : kInf;
            double z = kInf;
            if (src_density && (tau_density || !tau_.atoms.empty())) z = std::min(z, a_src);
            if (tau_density && (src_density || !source_.atoms.empty())) z = std::min(z, t0);
            asym_.zero_exponent = z;
            // Small dilations pull mass in from infinity: int_0 u^{p + t0} du must converge.
            const double m = src_density ? src_asym.infinity_moment : kInf;
            asym_.infinity_moment = (std::isinf(t0) || m + t0 + 1.0 > 0.0) ? m : -1.0;
            break;
        }
    }
    std::sort(breaks_.begin(), breaks_.end());
    breaks_.erase(std::unique(breaks_.begin(), breaks_.end()), breaks_.end());
    breaks_.erase(std::remove_if(breaks_.begin(), breaks_.end(), [](double b) { return !(b > 0.0) || std::isinf(b); }),
                  breaks_.end());
}

int TransformedDensity::nesting() const {
    const int src = source_.density ? source_.density->nesting() : 0;
    const int tau = tau_.density ? tau_.density->nesting() : 0;
    bool quad = static_cast<bool>(source_.density);
    if (kind_ == KernelKind::upsilon) quad = source_.density && tau_.density;
    return std::max(src + (quad ? 1 : 0), tau);
}

double TransformedDensity::operator()(double r) const {
    if (!(r >= 0.0) || !(r < support_.hi)) return 0.0;
    switch (kind_) {
        case KernelKind::arcsine1: return eval_arcsine1(r);
        case KernelKind::upsilon: return r > 0.0 ? eval_upsilon(r) : 0.0;
        case KernelKind::frac_half: return eval_frac_half(r);
    }
    return 0.0;
}

// (2/pi) int_{(r^2, inf)} (v - r^2)^{-1/2} nu(dv); with v = r^2 + w^2 the
// density part is (4/pi) int_0^inf f(r^2 + w^2) dw.
double TransformedDensity::eval_arcsine1(double r) const {
    double out = 0.0;
    for (const Atom& a : source_.atoms) out += a.mass * special::a1(r, a.r);
    if (!source_.density) return out;
    const Density& f = *source_.density;
    const Interval s = f.support();
    const double r2 = r * r;
    if (!(s.hi > r2)) return out;
    const double w_lo = std::sqrt(std::max(0.0, s.lo - r2));
    const double w_hi = std::isinf(s.hi) ? kInf : std::sqrt(s.hi - r2);
    std::vector<double> breaks;
    for (double b : f.breakpoints())
        if (b > r2) breaks.push_back(std::sqrt(b - r2));
    const QuadResult q = integrate_pieces([&](double w) { return f(r2 + w * w); }, w_lo, w_hi, breaks, kernel_quad());
    return out + 4.0 / kPi * q.value;
}

// int_0^inf nu(u^{-1} dr) tau(du) expressed as a density in r.
double TransformedDensity::eval_upsilon(double r) const {
    double out = 0.0;
    const Density* f = source_.density.get();
    const Density* t = tau_.density.get();
    if (f)
        for (const Atom& c : tau_.atoms) out += c.mass * (*f)(r / c.r) / c.r;
    if (t)
        for (const Atom& a : source_.atoms) out += a.mass * (*t)(r / a.r) / a.r;
    if (!f || !t) return out;

    const Interval fs = f->support();
    const Interval ts = t->support();
    const double lo = std::max(ts.lo, std::isinf(fs.hi) ? 0.0 : r / fs.hi);
    const double hi = std::min(ts.hi, fs.lo > 0.0 ? r / fs.lo : kInf);
    if (!(hi > lo)) return out;
    std::vector<double> breaks = t->breakpoints();
    for (double b : f->breakpoints())
        if (b > 0.0) breaks.push_back(r / b);
    const QuadResult q = integrate_pieces(
        [&](double u) {
            const double tv = (*t)(u);
            return tv == 0.0 ? 0.0 : (*f)(r / u) * tv / u;
        },
        lo, hi, breaks, kernel_quad());
    return out + q.value;
}

// pi^{-1/2} int_{(u, inf)} (s - u)^{-1/2} rho(ds); with s = u + w^2 the density
// part is 2 pi^{-1/2} int_0^inf f(u + w^2) dw.
double TransformedDensity::eval_frac_half(double u) const {
    const double c = 1.0 / std::sqrt(kPi);
    double out = 0.0;
    for (const Atom& a : source_.atoms)
        if (a.r > u) out += a.mass * c / std::sqrt(a.r - u);
    if (!source_.density) return out;
    const Density& f = *source_.density;
    const Interval s = f.support();
    if (!(s.hi > u)) return out;
    const double w_lo = std::sqrt(std::max(0.0, s.lo - u));
    const double w_hi = std::isinf(s.hi) ? kInf : std::sqrt(s.hi - u);
    std::vector<double> breaks;
    for (double b : f.breakpoints())
        if (b > u) breaks.push_back(std::sqrt(b - u));
    const QuadResult q = integrate_pieces([&](double w) { return f(u + w * w); }, w_lo, w_hi, breaks, kernel_quad());
    return out + 2.0 * c * q.value;
}

DensityPtr TransformedDensity::tabulated() const {
    std::call_once(table_once_, [this] { table_ = tabulate(*this); });
    return table_;
}

DensityPtr tabulate(const Density& f, int per_decade) {
    const Interval s = f.support();
    const std::vector<double> breaks = f.breakpoints();
    double scale = 1.0;
    for (double b : breaks) scale = std::max(scale, b);
    if (std::isfinite(s.hi)) scale = std::max(scale, s.hi);

    double r_lo = s.lo > 0.0 ? s.lo * (1.0 + 1e-12) : 1e-9 * (std::isfinite(s.hi) ? std::min(1.0, s.hi) : 1.0);
    double r_hi = s.hi;
    if (std::isinf(r_hi)) {
        double peak = 0.0;
        for (double r = std::min(1.0, scale) * 1e-3; r <= scale; r *= 2.0) peak = std::max(peak, f(r));
        r_hi = scale;
        while (r_hi < 1e8) {
            const double v = f(r_hi);
            peak = std::max(peak, v);
            if (v <= 1e-18 * peak) break;
            r_hi *= 2.0;
        }
    } else {
        r_hi = s.hi * (1.0 - 1e-12);
    }

    std::vector<double> grid = geometric_grid(r_lo, r_hi, per_decade);
    for (double b : breaks)
        if (b > r_lo && b < r_hi) grid.push_back(b);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    std::vector<double> values(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) { values[i] = f(grid[i]); });
    return std::make_shared<TableDensity>(std::move(grid), std::move(values), TableInterp::loglog_cubic,
                                          !(s.lo > 0.0));
}

// ---------------------------------------------------------------- component transforms

RadialComponent arcsine1(const RadialComponent& rc) {
    RadialComponent out;
    out.weight = rc.weight;
    if (rc.empty()) return out;
    out.density = std::make_shared<TransformedDensity>(KernelKind::arcsine1, rc, DilationMeasure{}, "a1");
    return out;
}

RadialComponent upsilon_tau(const RadialComponent& rc, const DilationMeasure& tau, const std::string& label) {
    tau.check();
    RadialComponent out;
    out.weight = rc.weight;
    if (rc.empty() || tau.empty()) return out;
    for (const Atom& a : rc.atoms)
        for (const Atom& c : tau.atoms) out.atoms.push_back({a.r * c.r, a.mass * c.mass});
    std::sort(out.atoms.begin(), out.atoms.end(), [](const Atom& x, const Atom& y) { return x.r < y.r; });
    std::vector<Atom> merged;
    for (const Atom& a : out.atoms) {
        if (!merged.empty() && merged.back().r == a.r) merged.back().mass += a.mass;
        else merged.push_back(a);
    }
    out.atoms = std::move(merged);
    if (rc.density || tau.density)
        out.density = std::make_shared<TransformedDensity>(KernelKind::upsilon, rc, tau, label);
    return out;
}

RadialComponent frac_half(const RadialComponent& rc) {
    rc.check();
    if (rc.density && !(rc.density->asymptotics().infinity_moment > 0.0))
        throw DomainError("frac_half: tail must be finite at every b > 0");
    RadialComponent out;
    out.weight = rc.weight;
    if (rc.empty()) return out;
    out.density = std::make_shared<TransformedDensity>(KernelKind::frac_half, rc, DilationMeasure{}, "frac_half");
    return out;
}

// ---------------------------------------------------------------- measure transforms

namespace {

template <class Fn>
PolarMeasure map_components(const PolarMeasure& m, Fn&& fn) {
    std::vector<PolarComponent> comps;
    comps.reserve(m.components().size());
    for (const auto& c : m.components()) comps.push_back({c.direction, fn(c.radial)});
    return PolarMeasure(m.dim(), std::move(comps));
}

}  // namespace

PolarMeasure arcsine1(const PolarMeasure& m) {
    const ValidationReport rep = validate(m, LevyLevel::levy_l1);
    if (!rep.pass) throw DomainError("arcsine1 is defined on Levy measures with int (1 ^ |x|) nu(dx) < inf");
    return map_components(m, [](const RadialComponent& rc) { return arcsine1(rc); });
}

PolarMeasure upsilon_tau(const PolarMeasure& m, const DilationMeasure& tau, const std::string& label) {
    PolarMeasure out = map_components(m, [&](const RadialComponent& rc) { return upsilon_tau(rc, tau, label); });
    const ValidationReport rep = validate(out, LevyLevel::levy);
    if (!rep.pass) {
        std::ostringstream msg;
        msg << label << ": output is not a Levy measure";
        for (const auto& d : rep.components)
            if (!d.near_zero_ok || !d.at_infinity_ok) msg << " [component " << d.index << ": " << d.detail << "]";
        throw RangeError(msg.str());
    }
    return out;
}

DilationMeasure arcsine_dilation() { return density_component(std::make_shared<ArcsineDensity>(1.0, 1.0)); }

DilationMeasure exponential_dilation() { return density_component(std::make_shared<ExpPowerDensity>(1.0, 0.0, 1.0, 1.0)); }

DilationMeasure alpha_beta_dilation(double alpha, double beta) {
    if (!(alpha < 2.0) || !(beta > 0.0) || !(beta <= 2.0))
        throw DomainError("upsilon_alpha_beta needs alpha < 2 and 0 < beta <= 2");
    return density_component(std::make_shared<ExpPowerDensity>(beta, -alpha - 1.0, 1.0, beta));
}

PolarMeasure arcsine2(const PolarMeasure& m) {
    if (!validate(m, LevyLevel::levy).pass) throw DomainError("arcsine2 is defined on Levy measures");
    return upsilon_tau(m, arcsine_dilation(), "a2");
}

PolarMeasure upsilon0(const PolarMeasure& m) { return upsilon_tau(m, exponential_dilation(), "ups0"); }

PolarMeasure upsilon_alpha_beta(const PolarMeasure& m, double alpha, double beta) {
    DilationMeasure tau = alpha_beta_dilation(alpha, beta);
    if (!validate(m, LevyLevel::levy).pass) throw DomainError("upsilon_alpha_beta is defined on Levy measures");
    std::ostringstream label;
    label << "ups(" << alpha << "," << beta << ")";
    return upsilon_tau(m, tau, label.str());
}

// ---------------------------------------------------------------- inversion

std::vector<double> default_inversion_grid() { return geometric_grid(1e-3, 1e2, 32); }

std::vector<double> recovered_tail(const RadialComponent& transformed, const std::vector<double>& grid,
                                   const QuadOptions& opts) {
    if (!transformed.atoms.empty())
        throw NotInRange("arcsine1 images are absolutely continuous; input has atoms", transformed.atoms.front().r);
    std::vector<double> out(grid.size(), 0.0);
    if (!transformed.density) return out;
    DensityPtr ell = transformed.density;
    if (ell->nesting() >= kMaxNesting) {
        if (const auto* t = dynamic_cast<const TransformedDensity*>(ell.get())) ell = t->tabulated();
        else ell = tabulate(*ell);
    }
    const Density& f = *ell;
    const Interval s = f.support();
    const std::vector<double> bps = f.breakpoints();
    parallel_for(grid.size(), [&](std::size_t i) {
        const double u = grid[i];
        if (!(u > 0.0)) throw DomainError("inversion grid must be positive");
        const double hi2 = s.hi * s.hi;
        if (!(hi2 > u)) return;
        const double w_lo = std::sqrt(std::max(0.0, s.lo * s.lo - u));
        const double w_hi = std::isinf(s.hi) ? kInf : std::sqrt(hi2 - u);
        std::vector<double> breaks;
        for (double b : bps)
            if (b * b > u) breaks.push_back(std::sqrt(b * b - u));
        out[i] = integrate_pieces([&](double w) { return f(std::sqrt(u + w * w)); }, w_lo, w_hi, breaks, opts).value;
    });
    return out;
}

InversionResult invert_arcsine1(const PolarMeasure& transformed, const std::vector<double>& grid,
                                const QuadOptions& opts, double monotone_tol) {
    if (grid.empty()) throw DomainError("inversion grid is empty");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1])) throw DomainError("inversion grid must be strictly increasing");
    InversionResult res{transformed.dim(), {}};
    for (const auto& c : transformed.components()) {
        std::vector<double> t = recovered_tail(c.radial, grid, opts);
        double ref = 0.0;
        for (double v : t) ref = std::max(ref, std::abs(v));
        for (std::size_t i = 1; i < t.size(); ++i) {
            if (t[i] - t[i - 1] > monotone_tol * ref) {
                std::ostringstream msg;
                msg << "recovered tail increases between u = " << grid[i - 1] << " and " << grid[i] << " ("
                    << t[i - 1] << " -> " << t[i] << "): input is not in the range of arcsine1";
                throw NotInRange(msg.str(), grid[i - 1]);
            }
        }
        res.tails.push_back({c.direction, c.radial.weight, grid, std::move(t)});
    }
    return res;
}

PolarMeasure apply_chain(const PolarMeasure& m, const std::string& chain) {
    PolarMeasure out = m;
    std::stringstream ss(chain);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(0, tok.find_first_not_of(" \t"));
        tok.erase(tok.find_last_not_of(" \t") + 1);
        if (tok == "a1") out = arcsine1(out);
        else if (tok == "a2") out = arcsine2(out);
        else if (tok == "ups0") out = upsilon0(out);
        else if (tok == "pow2") out = power_reparam(out, Power::square);
        else if (tok == "powhalf") out = power_reparam(out, Power::sqrt);
        else if (tok.rfind("ups:", 0) == 0) {
            const auto colon = tok.find(':', 4);
            if (colon == std::string::npos) throw ConfigError("chain token '" + tok + "' must be ups:ALPHA:BETA");
            double alpha = 0.0, beta = 0.0;
            try {
                alpha = std::stod(tok.substr(4, colon - 4));
                beta = std::stod(tok.substr(colon + 1));
            } catch (const std::exception&) {
                throw ConfigError("chain token '" + tok + "' must be ups:ALPHA:BETA");
            }
            out = upsilon_alpha_beta(out, alpha, beta);
        } else if (!tok.empty()) {
            throw ConfigError("unknown chain token '" + tok + "'");
        }
    }
    return out;
}

double radial_moment(const RadialComponent& rc, double k, const QuadOptions& opts) {
    return integrate(rc, [k](double r) { return std::pow(r, k); }, {0.0, kInf}, opts).value;
}

}  // namespace levyarc
