#include <doctest.h>

#include "helpers.hpp"
#include "levyarc/errors.hpp"
#include "levyarc/special.hpp"
#include "levyarc/transforms.hpp"
#include "oracle_values.hpp"

using namespace levyarc;
using th::density_of;
using th::exp_power_1d;

TEST_SUITE("transforms") {

TEST_CASE("arcsine1 of a density matches direct quadrature") {
    const auto out = arcsine1(exp_power_1d(1.0, 1.0, 1.0, 1.0));
    for (const auto& [r, y] : oracle::kArcsine1UExpU) CHECK(th::rel(density_of(out)(r), y) < 1e-10);
}

TEST_CASE("arcsine1 of atoms is a sum of one-sided arcsine laws") {
    const auto out = arcsine1(th::atoms_1d({{1.0, 2.0}, {4.0, 0.5}}));
    for (double r : {0.1, 0.9, 1.5, 1.99})
        CHECK(density_of(out)(r) == doctest::Approx(2.0 * special::a1(r, 1.0) + 0.5 * special::a1(r, 4.0)));
    CHECK(density_of(out)(2.5) == 0.0);
}

TEST_CASE("arcsine1 rejects measures without a finite first truncated moment") {
    CHECK_THROWS_AS(arcsine1(exp_power_1d(1.0, -2.5, 1.0, 1.0)), DomainError);
    CHECK_NOTHROW(arcsine1(exp_power_1d(1.0, -1.5, 1.0, 1.0)));
}

TEST_CASE("arcsine2 of delta_1 is the squared arcsine law") {
    const auto out = arcsine2(th::atoms_1d({{1.0, 1.0}}));
    for (double r : {0.05, 0.5, 0.95}) CHECK(density_of(out)(r) == doctest::Approx(special::a2(r, 1.0)).epsilon(1e-10));
}

TEST_CASE("Upsilon transforms match direct quadrature") {
    const auto g = exp_power_1d(1.0, 0.0, 1.0, 2.0);
    const auto u0 = upsilon0(g);
    for (const auto& [r, y] : oracle::kUpsilon0Gauss) CHECK(th::rel(density_of(u0)(r), y) < 1e-9);
    const auto ab = upsilon_alpha_beta(g, -2.0, 2.0);
    for (const auto& [r, y] : oracle::kUpsilonM2_2Gauss) CHECK(th::rel(density_of(ab)(r), y) < 1e-9);
    CHECK_THROWS_AS(upsilon_alpha_beta(g, 2.0, 1.0), DomainError);
    CHECK_THROWS_AS(upsilon_alpha_beta(g, 0.0, 2.5), DomainError);
}

TEST_CASE("Upsilon of an atom at 1 returns the dilation density") {
    const auto out = upsilon0(th::atoms_1d({{1.0, 1.0}}));
    for (double r : {0.1, 1.0, 5.0}) CHECK(density_of(out)(r) == doctest::Approx(std::exp(-r)));
}

TEST_CASE("dilation measures are probability measures") {
    for (const auto& tau : {arcsine_dilation(), exponential_dilation(), alpha_beta_dilation(-2.0, 2.0),
                            alpha_beta_dilation(-1.0, 1.0)})
        CHECK(total_mass(tau) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("frac_half matches direct quadrature") {
    const auto out = frac_half(exp_power_1d(1.0, 0.0, 1.0, 1.0).components().front().radial);
    for (const auto& [u, y] : oracle::kFracHalfExpU) CHECK(th::rel((*out.density)(u), y) < 1e-10);
}

TEST_CASE("first moment of arcsine1(delta_1)") {
    const auto out = arcsine1(th::atoms_1d({{1.0, 1.0}}));
    CHECK(radial_moment(out.components().front().radial, 1.0) == doctest::Approx(2.0 / M_PI).epsilon(1e-10));
}

TEST_CASE("tabulated transforms agree with lazy evaluation") {
    const auto out = arcsine1(exp_power_1d(1.0, 1.0, 1.0, 1.0));
    const auto& lazy = dynamic_cast<const TransformedDensity&>(density_of(out));
    const DensityPtr tab = lazy.tabulated();
    for (double r : {0.01, 0.3, 1.0, 2.7}) CHECK(th::rel((*tab)(r), lazy(r)) < 1e-6);
}

TEST_CASE("inversion recovers tails and detects non-images") {
    RadialComponent src = density_component(std::make_shared<ExpPowerDensity>(1.0, 0.0, 1.0, 2.0));
    src.atoms = {{1.5, 0.7}};
    const auto image = arcsine1(PolarMeasure::one_dimensional(src));
    const std::vector<double> grid = geometric_grid_n(0.05, 5.0, 41);
    const InversionResult inv = invert_arcsine1(image, grid);
    REQUIRE(inv.tails.size() == 1);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (std::abs(grid[i] - 1.5) < 1e-3) continue;
        CHECK(inv.tails[0].tail[i] == doctest::Approx(tail(src, grid[i])).epsilon(1e-6));
    }
    CHECK_THROWS_AS(invert_arcsine1(th::atoms_1d({{1.0, 1.0}}), grid), NotInRange);
    CHECK_THROWS_AS(invert_arcsine1(exp_power_1d(1.0, 1.0, 0.0, 1.0, {0.0, 1.0}), grid), NotInRange);
    CHECK_THROWS_AS(invert_arcsine1(image, {1.0, 0.5}), DomainError);
}

TEST_CASE("transform chains") {
    const auto m = exp_power_1d(1.0, 0.0, 1.0, 2.0);
    const auto a = apply_chain(m, "a1,ups0");
    const auto b = upsilon0(arcsine1(m));
    for (double r : {0.2, 1.0, 2.0}) CHECK(density_of(a)(r) == doctest::Approx(density_of(b)(r)).epsilon(1e-12));
    const auto c = apply_chain(m, "ups:-2:2");
    const auto d = upsilon_alpha_beta(m, -2.0, 2.0);
    CHECK(density_of(c)(0.7) == doctest::Approx(density_of(d)(0.7)).epsilon(1e-12));
    CHECK_THROWS_AS(apply_chain(m, "a3"), ConfigError);
    CHECK_THROWS_AS(apply_chain(m, "ups:1"), ConfigError);
}

}
