#include <doctest.h>

#include "helpers.hpp"
#include "levyarc/errors.hpp"
#include "levyarc/quadrature.hpp"

using namespace levyarc;
using th::exp_power_1d;

TEST_SUITE("measure_core") {

TEST_CASE("Gauss-Kronrod handles endpoint singularities and infinite ranges") {
    QuadOptions loose;
    loose.abs_tol = 1e-8;
    CHECK(integrate_gk([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, loose).value ==
          doctest::Approx(2.0).epsilon(1e-8));
    CHECK(integrate_gk([](double x) { return std::exp(-x * x); }, 0.0, kInf).value ==
          doctest::Approx(0.5 * std::sqrt(M_PI)).epsilon(1e-12));
    CHECK(integrate_gk([](double x) { return std::log(x); }, 0.0, 1.0).value == doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("geometric grids hit their endpoints") {
    const auto g = geometric_grid_n(1e-3, 1e2, 6);
    REQUIRE(g.size() == 6);
    CHECK(g.front() == doctest::Approx(1e-3));
    CHECK(g.back() == doctest::Approx(1e2));
    CHECK(g[1] / g[0] == doctest::Approx(10.0));
}

TEST_CASE("malformed inputs are rejected") {
    CHECK_THROWS_AS(ExpPowerDensity(-1.0, 0.0, 1.0, 1.0), MalformedMeasure);
    CHECK_THROWS_AS(ExpPowerDensity(1.0, 0.0, 0.0, 1.0), MalformedMeasure);
    CHECK_THROWS_AS(ExpPowerDensity(1.0, 0.0, 1.0, 0.0), MalformedMeasure);
    CHECK_THROWS_AS(atom_component(-1.0).check(), MalformedMeasure);
    CHECK_THROWS_AS(atom_component(1.0, -2.0).check(), MalformedMeasure);
    CHECK_THROWS_AS(Direction::normalized({0.0, 0.0}), MalformedMeasure);
}

TEST_CASE("Levy condition checks follow the exponents") {
    // r^a e^{-r}: levy iff a > -3, levy_l1 iff a > -2
    for (double a : {-2.9, -2.5, -1.9, -1.0, 0.0, 2.0}) {
        const auto m = exp_power_1d(1.0, a, 1.0, 1.0);
        CHECK(validate(m, LevyLevel::levy).pass == (a > -3.0));
        CHECK(validate(m, LevyLevel::levy_l1).pass == (a > -2.0));
    }
    CHECK_FALSE(validate(exp_power_1d(1.0, -3.0, 1.0, 1.0), LevyLevel::levy).pass);
    // r^{-1} on (0, 1) with b = 0
    CHECK(validate(exp_power_1d(1.0, -1.0, 0.0, 1.0, {0.0, 1.0}), LevyLevel::levy_l1).pass);
    CHECK_FALSE(validate(exp_power_1d(1.0, -2.0, 0.0, 1.0, {0.0, 1.0}), LevyLevel::levy_l1).pass);
}

TEST_CASE("levy_l1 implies levy on a family of measures") {
    for (double a : {-2.5, -1.5, -0.5, 0.5})
        for (double p : {0.5, 1.0, 2.0}) {
            const auto m = exp_power_1d(2.0, a, 1.5, p);
            if (validate(m, LevyLevel::levy_l1).pass) CHECK(validate(m, LevyLevel::levy).pass);
        }
}

TEST_CASE("tail is a right-continuous step function at atoms") {
    RadialComponent rc;
    rc.atoms = {{1.0, 2.0}, {3.0, 0.5}};
    CHECK(tail(rc, 0.5) == doctest::Approx(2.5));
    CHECK(tail(rc, 1.0) == doctest::Approx(0.5));  // mass of (1, inf)
    CHECK(tail(rc, std::nextafter(1.0, 0.0)) == doctest::Approx(2.5));
    CHECK(tail(rc, 3.0) == 0.0);
    CHECK(total_mass(rc) == doctest::Approx(2.5));
}

TEST_CASE("tail of a density matches its closed form") {
    const auto rc = exp_power_1d(1.0, 0.0, 1.0, 1.0).components().front().radial;  // e^{-r}
    for (double u : {1e-3, 0.5, 3.0}) CHECK(tail(rc, u) == doctest::Approx(std::exp(-u)).epsilon(1e-10));
    const auto inf_mass = exp_power_1d(1.0, -1.5, 1.0, 1.0).components().front().radial;
    CHECK(std::isinf(total_mass(inf_mass)));
}

TEST_CASE("power reparametrization round trips") {
    RadialComponent rc = density_component(std::make_shared<ExpPowerDensity>(1.0, 0.5, 1.0, 1.0));
    rc.atoms = {{0.7, 1.5}};
    const RadialComponent sq = power_reparam(rc, Power::square);
    const RadialComponent back = power_reparam(sq, Power::sqrt);
    for (double u : {0.1, 0.5, 1.0, 2.0, 4.0}) {
        CHECK(tail(sq, u * u) == doctest::Approx(tail(rc, u)).epsilon(1e-9));
        CHECK(tail(back, u) == doctest::Approx(tail(rc, u)).epsilon(1e-9));
    }
    for (double r : {0.2, 1.0, 3.0}) CHECK((*back.density)(r) == doctest::Approx((*rc.density)(r)).epsilon(1e-12));
    REQUIRE(sq.atoms.size() == 1);
    CHECK(sq.atoms[0].r == doctest::Approx(0.49));
}

TEST_CASE("table densities interpolate and extend") {
    const TableDensity t({1.0, 2.0, 4.0}, {4.0, 2.0, 1.0}, TableInterp::linear);
    CHECK(t(1.5) == doctest::Approx(3.0));
    CHECK(t(4.0) == doctest::Approx(1.0));
    CHECK(t(5.0) == 0.0);
    const TableDensity ll({1.0, 2.0, 4.0, 8.0}, {8.0, 4.0, 2.0, 1.0}, TableInterp::loglog_cubic);
    CHECK(ll(3.0) == doctest::Approx(8.0 / 3.0).epsilon(1e-10));  // exact power law
    CHECK_THROWS_AS(TableDensity({1.0, 1.0}, {1.0, 1.0}), MalformedMeasure);
}

TEST_CASE("polar measures normalize directions and keep dimension") {
    const Direction d = Direction::normalized({3.0, 4.0});
    CHECK(d.coords()[0] == doctest::Approx(0.6));
    CHECK(d.coords()[1] == doctest::Approx(0.8));
    const PolarMeasure m(2, {{d, atom_component(1.0)}});
    CHECK(m.dim() == 2);
    CHECK_FALSE(m.is_zero());
    CHECK(PolarMeasure::zero(3).is_zero());
    CHECK_THROWS_AS(PolarMeasure(1, {{d, atom_component(1.0)}}), MalformedMeasure);
}

}
