#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace levyarc {

struct CheckResult {
    std::string name;
    std::string title;
    bool pass = false;
    double measured = 0.0;   // worst error observed
    double tolerance = 0.0;
    double seconds = 0.0;
    std::vector<std::string> details;
};

struct CheckOptions {
    std::size_t paths = 100000;
    std::size_t time_steps = 2000;
    double eps = 1e-3;
    std::uint64_t seed = 20240601;
    // Replaces the built-in tolerance of the check when set.
    std::optional<double> tolerance;
};

// Names of the end-to-end checks, in criterion order.
std::vector<std::string> check_names();

// Runs one named check. Throws ConfigError on an unknown name.
CheckResult run_check(const std::string& name, const CheckOptions& opts = {});

}  // namespace levyarc
