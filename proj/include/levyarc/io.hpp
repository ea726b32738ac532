#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "levyarc/classes.hpp"
#include "levyarc/mappings.hpp"
#include "levyarc/measure.hpp"
#include "levyarc/simulate.hpp"
#include "levyarc/transforms.hpp"

namespace levyarc::io {

using json = nlohmann::json;

// Measure JSON:
//   {"d":1,"components":[{"direction":[1.0],"weight":1.0,"atoms":[[r,mass],...],
//     "density":{"kind":"exp_power","c":..,"a":..,"b":..,"p":..,"support":[0,null]}}]}
// null stands for +infinity. Density kinds: exp_power, arcsine_tail (s, mass),
// table (r, f, interp). Densities without a closed form are written as tables
// with a "provenance" field naming the transform chain.
PolarMeasure measure_from_json(const json& j);
json measure_to_json(const PolarMeasure& m);
DensityPtr density_from_json(const json& j);
json density_to_json(const Density& f);
std::string provenance(const Density& f);

Triplet triplet_from_json(const json& j);
json triplet_to_json(const Triplet& t);

json report_to_json(const MembershipReport& r);
json validation_to_json(const ValidationReport& r);
json sim_config_to_json(const SimConfig& c);

json read_json(const std::string& path);
void write_json(const std::string& path, const json& j);

// Numbers in CSV output carry 17 significant digits.
std::string fmt(double x);
void write_csv(std::ostream& os, const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows);
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

void write_sample_set(const std::string& csv_path, const std::string& sidecar_path, const SampleSet& s);
void write_char_fn(const std::string& path, const CharFnGrid& g);
void write_tails(const std::string& path, const InversionResult& r);

}  // namespace levyarc::io
