#pragma once

#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace levyarc {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

using ScalarFn = std::function<double(double)>;

struct QuadOptions {
    double abs_tol = 1e-10;
    double rel_tol = 0.0;
    // Maximum number of bisections applied to any one subinterval.
    int max_depth = 60;
    int max_intervals = 5000;
};

// Tolerance used for evaluating densities that are themselves defined by an
// integral (transform outputs). Densities are nonnegative, so a relative
// criterion is meaningful down to the underflow range.
inline QuadOptions kernel_quad() {
    QuadOptions q;
    q.abs_tol = 1e-300;
    q.rel_tol = 1e-11;
    return q;
}

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    int evaluations = 0;
};

// Globally adaptive Gauss-Kronrod (10/21) on a finite or semi-infinite
// interval. Throws QuadratureNonConvergence when the tolerance cannot be met.
QuadResult integrate_gk(const ScalarFn& f, double a, double b, const QuadOptions& opts = {});

// Integrate over (a, b) after splitting at `breaks`. Every piece receives the
// substitution x = p + w^2 (resp. q - w^2) at both ends, which removes inverse
// square-root singularities and jumps located at piece endpoints.
QuadResult integrate_pieces(const ScalarFn& f, double a, double b, std::span<const double> breaks,
                            const QuadOptions& opts = {});

inline QuadResult integrate_pieces(const ScalarFn& f, double a, double b,
                                   std::initializer_list<double> breaks, const QuadOptions& opts = {}) {
    return integrate_pieces(f, a, b, std::span<const double>(breaks.begin(), breaks.size()), opts);
}

// Geometric grid with `per_decade` points per decade, both ends included.
std::vector<double> geometric_grid(double lo, double hi, int per_decade);
std::vector<double> geometric_grid_n(double lo, double hi, int points);

}  // namespace levyarc
