#pragma once

#include <cmath>
#include <memory>

#include "levyarc/measure.hpp"

namespace th {

using namespace levyarc;

inline PolarMeasure exp_power_1d(double c, double a, double b, double p, Interval support = {}) {
    return PolarMeasure::one_dimensional(density_component(std::make_shared<ExpPowerDensity>(c, a, b, p, support)));
}

inline PolarMeasure atoms_1d(std::vector<Atom> atoms) {
    RadialComponent rc;
    rc.atoms = std::move(atoms);
    return PolarMeasure::one_dimensional(rc);
}

inline const Density& density_of(const PolarMeasure& m, std::size_t i = 0) {
    return *m.components().at(i).radial.density;
}

inline double rel(double got, double want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

}  // namespace th
