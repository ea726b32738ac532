#include "levyarc/classes.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "levyarc/parallel.hpp"

namespace levyarc {
namespace {

constexpr double kJurekTol = 1e-9;
constexpr double kEdgeRatio = 1e-14;
// Relative accuracy assumed for g values in the divided-difference screen;
// transform outputs are evaluated to 1e-11 relative.
constexpr double kValueNoise = 1e-9;
constexpr double kValueFloor = 1e-300;
// log-log slope over the smallest grid decade above which the density is
// taken to vanish at 0.
constexpr double kVanishingSlope = 0.1;

const std::vector<std::string> kUnchecked = {
    "lower semicontinuity of the radial density",
    "measurability in (xi, r)",
};

std::vector<double> sample(const ScalarFn& g, const std::vector<double>& grid) {
    std::vector<double> v(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) { v[i] = g(grid[i]); });
    return v;
}

std::vector<double> sample(const Density& f, const std::vector<double>& grid) {
    return sample([&f](double r) { return f(r); }, grid);
}

MembershipReport fail(MembershipReport rep, double at, int order, std::size_t comp, std::string detail) {
    rep.verdict = Verdict::non_member;
    rep.witness = Witness{at, order, comp, std::move(detail)};
    return rep;
}

MembershipReport atom_witness(MembershipReport rep, const RadialComponent& rc, std::size_t comp) {
    std::ostringstream msg;
    msg << "atom at r = " << rc.atoms.front().r << ": radial measure has no density";
    return fail(std::move(rep), rc.atoms.front().r, 0, comp, msg.str());
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::member: return "member";
        case Verdict::non_member: return "non_member";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

std::vector<double> default_class_grid() { return geometric_grid(1e-3, 1e3, 64); }

MembershipReport is_jurek(const PolarMeasure& m, const std::vector<double>& grid) {
    MembershipReport rep;
    rep.unchecked = {"right-continuity between grid points"};
    if (grid.size() < 2) {
        rep.note = "grid too small";
        return rep;
    }
    bool checked = false;
    for (std::size_t c = 0; c < m.components().size(); ++c) {
        const RadialComponent& rc = m.components()[c].radial;
        if (!rc.atoms.empty()) return atom_witness(std::move(rep), rc, c);
        if (!rc.density) continue;
        checked = true;
        const std::vector<double> v = sample(*rc.density, grid);
        for (std::size_t i = 0; i + 1 < v.size(); ++i) {
            const double scale = std::max(v[i], v[i + 1]);
            if (v[i + 1] - v[i] > kJurekTol * scale) {
                std::ostringstream msg;
                msg << "density increases from " << v[i] << " at r = " << grid[i] << " to " << v[i + 1];
                return fail(std::move(rep), grid[i + 1], 1, c, msg.str());
            }
        }
    }
    rep.verdict = checked ? Verdict::member : Verdict::inconclusive;
    if (!checked) rep.note = "no density component";
    return rep;
}

double positivity_edge(const std::vector<double>& grid, const std::vector<double>& values) {
    double peak = 0.0;
    for (double v : values) peak = std::max(peak, v);
    std::size_t edge = values.size();
    while (edge > 0 && values[edge - 1] < kEdgeRatio * peak) --edge;
    return edge == values.size() ? kInf : grid[edge];
}

MembershipReport class_a_necessary(const PolarMeasure& m, const std::vector<double>& grid) {
    MembershipReport rep;
    rep.unchecked = kUnchecked;
    if (grid.size() < 2) {
        rep.note = "grid too small";
        return rep;
    }
    std::ostringstream note;
    for (std::size_t c = 0; c < m.components().size(); ++c) {
        const RadialComponent& rc = m.components()[c].radial;
        if (!rc.atoms.empty()) return atom_witness(std::move(rep), rc, c);
        if (!rc.density) continue;
        const std::vector<double> v = sample(*rc.density, grid);
        const double b = positivity_edge(grid, v);
        note << "component " << c << ": b = " << b << "; ";
        for (std::size_t i = 0; i < v.size() && grid[i] < b; ++i) {
            if (!(v[i] > 0.0)) {
                std::ostringstream msg;
                msg << "density vanishes at r = " << grid[i] << " below the positivity edge b = " << b;
                return fail(std::move(rep), grid[i], 0, c, msg.str());
            }
        }
        if (!(b > grid.front())) continue;  // zero density
        const double decade_end = std::min(10.0 * grid.front(), b);
        double low_min = kInf;
        std::size_t last = 0;
        for (std::size_t i = 0; i < v.size() && grid[i] <= decade_end; ++i) {
            low_min = std::min(low_min, v[i]);
            last = i;
        }
        if (!(low_min > 0.0)) return fail(std::move(rep), grid.front(), 0, c, "density vanishes near 0");
        const double exponent = rc.density->asymptotics().zero_exponent;
        double slope = 0.0;
        if (last > 0) slope = std::log(v[last] / v[0]) / std::log(grid[last] / grid[0]);
        if (exponent > 0.0 || slope > kVanishingSlope) {
            std::ostringstream msg;
            msg << "liminf at 0 is 0 (density ~ r^" << (exponent > 0.0 ? exponent : slope) << ")";
            return fail(std::move(rep), grid.front(), 0, c, msg.str());
        }
    }
    rep.verdict = Verdict::member;
    rep.note = note.str();
    return rep;
}

MembershipReport is_completely_monotone(const ScalarFn& g, const std::vector<double>& grid, int order, int stride) {
    MembershipReport rep;
    rep.checked_order = order;
    rep.unchecked = {"derivatives of order > " + std::to_string(order), "behaviour between grid points"};
    if (order < 1 || stride < 1 || grid.size() < static_cast<std::size_t>(order * stride + 1)) {
        rep.note = "grid too small for the requested order";
        return rep;
    }
    const std::vector<double> f = sample(g, grid);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!std::isfinite(f[i])) {
            rep.note = "non-finite value on the grid";
            return rep;
        }
        if (f[i] < -kValueFloor) return fail(std::move(rep), grid[i], 0, 0, "negative value");
    }
    const std::size_t s = static_cast<std::size_t>(stride);
    for (int j = 1; j <= order; ++j) {
        const double sign = j % 2 == 0 ? 1.0 : -1.0;
        const std::size_t span = static_cast<std::size_t>(j) * s;
        for (std::size_t i = 0; i + span < f.size(); ++i) {
            double dd = 0.0, noise = 0.0;
            for (int k = 0; k <= j; ++k) {
                const std::size_t ik = i + static_cast<std::size_t>(k) * s;
                double denom = 1.0;
                for (int q = 0; q <= j; ++q)
                    if (q != k) denom *= grid[ik] - grid[i + static_cast<std::size_t>(q) * s];
                dd += f[ik] / denom;
                noise += (kValueNoise * std::abs(f[ik]) + kValueFloor) / std::abs(denom);
            }
            if (sign * dd < -noise) {
                std::ostringstream msg;
                msg << "(-1)^" << j << " times divided difference of order " << j << " is " << sign * dd
                    << " (noise bound " << noise << ")";
                return fail(std::move(rep), grid[i], j, 0, msg.str());
            }
        }
    }
    rep.verdict = Verdict::member;
    rep.note = "no sign violation up to the checked order";
    return rep;
}

namespace {

MembershipReport cm_per_component(const PolarMeasure& m, const std::vector<double>& grid, int order, bool squared) {
    MembershipReport rep;
    rep.checked_order = order;
    rep.unchecked = kUnchecked;
    bool checked = false;
    for (std::size_t c = 0; c < m.components().size(); ++c) {
        const RadialComponent& rc = m.components()[c].radial;
        if (!rc.atoms.empty()) return atom_witness(std::move(rep), rc, c);
        if (!rc.density) continue;
        const Density& f = *rc.density;
        ScalarFn g = squared ? ScalarFn([&f](double u) { return f(std::sqrt(u)); }) : ScalarFn([&f](double r) { return f(r); });
        MembershipReport sub = is_completely_monotone(g, grid, order);
        if (sub.verdict == Verdict::non_member) {
            sub.witness->component = c;
            sub.unchecked = kUnchecked;
            return sub;
        }
        if (sub.verdict == Verdict::inconclusive) return sub;
        checked = true;
    }
    rep.verdict = checked ? Verdict::member : Verdict::inconclusive;
    rep.note = checked ? "no sign violation up to the checked order" : "no density component";
    return rep;
}

}  // namespace

MembershipReport is_type_g(const PolarMeasure& m, const std::vector<double>& grid, int order) {
    return cm_per_component(m, grid, order, true);
}

MembershipReport is_class_b(const PolarMeasure& m, const std::vector<double>& grid, int order) {
    return cm_per_component(m, grid, order, false);
}

}  // namespace levyarc
