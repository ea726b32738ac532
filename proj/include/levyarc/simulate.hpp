#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "levyarc/mappings.hpp"

namespace levyarc {

struct SimConfig {
    std::size_t paths = 100000;
    std::size_t time_steps = 2000;
    double eps = 1e-3;
    std::uint64_t seed = 20240601;
    bool compensate_small_jumps = true;

    // Throws ConfigError.
    void check() const;
};

struct SampleSet {
    std::size_t dim = 1;
    Eigen::MatrixXd draws;  // paths x dim
    SimConfig config;
    std::string integrand;  // "identity" for sample_id
    std::vector<std::string> warnings;
};

// Draws of X_1 for the Levy process with triplet t: Gaussian part, compound
// Poisson jumps with |x| >= eps, eps-adjusted drift and (optionally) a
// Gaussian stand-in for the jumps below eps.
SampleSet sample_id(const Triplet& t, const SimConfig& cfg);

// Draws of  sum_k c_k (X_{t_{k+1}} - X_{t_k})  on a uniform grid of [0, T],
// c_k = f at the cell midpoint, or the cell average of f on a cell touching a
// singular endpoint.
SampleSet sample_integral(const Triplet& t, const IntegrandSpec& f, const SimConfig& cfg);

// Riemann coefficients used by sample_integral.
std::vector<double> riemann_coefficients(const IntegrandSpec& f, std::size_t steps);

CharFnGrid empirical_cf(const SampleSet& s, const std::vector<Eigen::VectorXd>& z);

// max_i |a_i - b_i|; throws GridMismatch unless both grids have the same points.
double cf_distance(const CharFnGrid& a, const CharFnGrid& b);

}  // namespace levyarc
