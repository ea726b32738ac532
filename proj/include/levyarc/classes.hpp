#pragma once

#include <optional>
#include <string>
#include <vector>

#include "levyarc/measure.hpp"

namespace levyarc {

enum class Verdict { member, non_member, inconclusive };

std::string to_string(Verdict v);

struct Witness {
    double location = 0.0;      // grid point (r or u) where the defining property fails
    int order = 0;              // divided-difference order, 0 when not applicable
    std::size_t component = 0;  // direction index
    std::string detail;
};

// "member" is always relative to the finite screen that was run: no violation
// was found on the grid up to `checked_order`.
struct MembershipReport {
    Verdict verdict = Verdict::inconclusive;
    std::optional<Witness> witness;
    int checked_order = 0;
    // Defining clauses that cannot be checked from grid values.
    std::vector<std::string> unchecked;
    std::string note;
};

// Geometric grid, 64 points per decade over [1e-3, 1e3].
std::vector<double> default_class_grid();

MembershipReport is_jurek(const PolarMeasure& m, const std::vector<double>& grid = default_class_grid());
MembershipReport class_a_necessary(const PolarMeasure& m, const std::vector<double>& grid = default_class_grid());

// Divided-difference screen: (-1)^j [u_i, ..., u_{i+j}] g >= -noise for all
// j <= order, with nodes taken every `stride` grid points.
MembershipReport is_completely_monotone(const ScalarFn& g, const std::vector<double>& grid = default_class_grid(),
                                        int order = 6, int stride = 8);

MembershipReport is_type_g(const PolarMeasure& m, const std::vector<double>& grid = default_class_grid(), int order = 6);
MembershipReport is_class_b(const PolarMeasure& m, const std::vector<double>& grid = default_class_grid(), int order = 6);

// Detected upper end b of the positivity region of a density on a grid
// (infinity when the density is positive on the whole grid).
double positivity_edge(const std::vector<double>& grid, const std::vector<double>& values);

}  // namespace levyarc
