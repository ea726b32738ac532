#pragma once

#include <functional>
#include <string>
#include <vector>

#include "levyarc/measure.hpp"

namespace levyarc {

// A named input measure, the transform applied to it, and the closed-form
// density of the result.
struct Fixture {
    std::string name;
    std::string description;
    PolarMeasure input;
    std::string transform;  // chain token: a1, ups0 or "none"
    std::function<PolarMeasure(const PolarMeasure&)> apply;
    std::string closed_form_id;
    ScalarFn closed_form;
};

// EX1: (pi/4) r^{-1/2} e^{-sqrt r} --a1--> K0(r)
// EX2: (sqrt(pi)/4) r^{-1/2} e^{-r/4} --ups0--> (pi/4) x^{-1/2} e^{-sqrt x}
// EX3: EX2 input --a1--> (2 sqrt(pi))^{-1} e^{-r^2/8} K0(r^2/8)
// JUREK_CE: 2/pi (1 - r^2)^{-1/2} on (0, 1), in the range of A1 but not Jurek.
std::vector<Fixture> fixture_catalog();
const Fixture& fixture(const std::string& name);

PolarMeasure ex1_input();
PolarMeasure ex2_input();
PolarMeasure jurek_counterexample();

}  // namespace levyarc
