#include "levyarc/fixtures.hpp"

#include <cmath>
#include <numbers>

#include "levyarc/errors.hpp"
#include "levyarc/special.hpp"
#include "levyarc/transforms.hpp"

namespace levyarc {
namespace {

constexpr double kPi = std::numbers::pi;

PolarMeasure one_density(DensityPtr f) { return PolarMeasure::one_dimensional(density_component(std::move(f))); }

}  // namespace

PolarMeasure ex1_input() { return one_density(std::make_shared<ExpPowerDensity>(kPi / 4.0, -0.5, 1.0, 0.5)); }

PolarMeasure ex2_input() {
    return one_density(std::make_shared<ExpPowerDensity>(std::sqrt(kPi) / 4.0, -0.5, 0.25, 1.0));
}

PolarMeasure jurek_counterexample() { return one_density(std::make_shared<ArcsineDensity>(1.0, 1.0)); }

std::vector<Fixture> fixture_catalog() {
    const auto a1 = [](const PolarMeasure& m) { return arcsine1(m); };
    const auto ups0 = [](const PolarMeasure& m) { return upsilon0(m); };
    std::vector<Fixture> out;
    out.push_back({"EX1", "arcsine1 of (pi/4) r^{-1/2} e^{-r^{1/2}} is the K0 density", ex1_input(), "a1", a1, "k0",
                   [](double r) { return special::k0(r); }});
    out.push_back({"EX2", "upsilon0 of (sqrt(pi)/4) r^{-1/2} e^{-r/4} is the EX1 input", ex2_input(), "ups0", ups0,
                   "exp_power(pi/4,-1/2,1,1/2)",
                   [](double x) { return kPi / 4.0 / std::sqrt(x) * std::exp(-std::sqrt(x)); }});
    out.push_back({"EX3", "arcsine1 of the EX2 input", ex2_input(), "a1", a1, "k0_gauss",
                   [](double r) {
                       const double q = r * r / 8.0;
                       return std::exp(-q) * special::k0(q) / (2.0 * std::sqrt(kPi));
                   }});
    out.push_back({"JUREK_CE", "2/pi (1 - r^2)^{-1/2} on (0,1): in the range of arcsine1, not Jurek",
                   jurek_counterexample(), "none", [](const PolarMeasure& m) { return m; }, "arcsine_tail(1)",
                   [](double r) { return special::a1(r, 1.0); }});
    return out;
}

const Fixture& fixture(const std::string& name) {
    static const std::vector<Fixture> catalog = fixture_catalog();
    for (const auto& f : catalog)
        if (f.name == name) return f;
    throw ConfigError("unknown fixture '" + name + "'");
}

}  // namespace levyarc
