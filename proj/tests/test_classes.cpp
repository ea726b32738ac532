#include <doctest.h>

#include "helpers.hpp"
#include "levyarc/classes.hpp"
#include "levyarc/fixtures.hpp"
#include "levyarc/special.hpp"
#include "levyarc/transforms.hpp"

using namespace levyarc;
using th::exp_power_1d;

TEST_SUITE("classes") {

TEST_CASE("complete monotonicity screen") {
    for (double v : {0.5, 1.0, 3.0})
        CHECK(is_completely_monotone([v](double u) { return std::exp(-u * v); }).verdict == Verdict::member);
    CHECK(is_completely_monotone([](double u) { return 1.0 / (1.0 + u); }).verdict == Verdict::member);
    CHECK(is_completely_monotone([](double u) { return std::pow(u, -0.3); }).verdict == Verdict::member);
    const auto g = is_completely_monotone([](double u) { return std::exp(-u * u); });
    CHECK(g.verdict == Verdict::non_member);
    REQUIRE(g.witness.has_value());
    CHECK(g.witness->order >= 1);
    CHECK(is_completely_monotone([](double u) { return std::exp(-u) * (1.0 + 0.5 * std::sin(u)); }).verdict ==
          Verdict::non_member);
    CHECK(is_completely_monotone([](double u) { return special::k0(u); }, geometric_grid_n(1e-2, 20.0, 200)).verdict ==
          Verdict::member);
}

TEST_CASE("Jurek class") {
    CHECK(is_jurek(exp_power_1d(1.0, 0.0, 1.0, 1.0)).verdict == Verdict::member);
    CHECK(is_jurek(exp_power_1d(1.0, -1.5, 1.0, 1.0)).verdict == Verdict::member);
    // r e^{-r} increases up to r = 1
    const auto r = is_jurek(exp_power_1d(1.0, 1.0, 1.0, 1.0));
    CHECK(r.verdict == Verdict::non_member);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->location < 1.0);
    CHECK(is_jurek(th::atoms_1d({{1.0, 1.0}})).verdict == Verdict::non_member);
    CHECK(is_jurek(jurek_counterexample()).verdict == Verdict::non_member);
}

TEST_CASE("class A necessary conditions") {
    CHECK(class_a_necessary(arcsine1(ex1_input())).verdict != Verdict::non_member);
    CHECK(class_a_necessary(jurek_counterexample()).verdict != Verdict::non_member);
    // vanishes like r at the origin, which no arcsine1 image does
    CHECK(class_a_necessary(exp_power_1d(1.0, 1.0, 1.0, 1.0)).verdict == Verdict::non_member);
}

TEST_CASE("class B and type G") {
    CHECK(is_class_b(ex1_input()).verdict == Verdict::member);
    CHECK(is_type_g(ex1_input()).verdict == Verdict::member);
    CHECK(is_type_g(arcsine1(ex1_input())).verdict == Verdict::member);
    const auto gauss = exp_power_1d(1.0, 0.0, 1.0, 2.0);
    CHECK(is_class_b(gauss).verdict == Verdict::non_member);
    CHECK(is_type_g(gauss).verdict == Verdict::member);
    CHECK(is_type_g(th::atoms_1d({{1.0, 1.0}})).verdict == Verdict::non_member);
}

TEST_CASE("positivity edge") {
    const std::vector<double> grid = {1.0, 2.0, 3.0, 4.0};
    // first grid point of the trailing zero run
    CHECK(positivity_edge(grid, {1.0, 1.0, 0.0, 0.0}) == doctest::Approx(3.0));
    CHECK(std::isinf(positivity_edge(grid, {1.0, 1.0, 1.0, 1.0})));
}

}
