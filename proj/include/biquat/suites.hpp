#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "biquat/convention.hpp"

namespace biquat {

/// One named quantitative check: value compared against the pinned tolerance.
struct CheckResult {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool at_least = false;  // false: pass iff value <= tolerance; true: value >= tolerance
    bool pass = false;
};

struct SuiteResult {
    std::string suite;
    std::uint64_t seed = 0;
    ConventionAssignment convention;
    std::vector<CheckResult> checks;
    bool pass = false;

    void add(std::string name, double value, double tolerance, bool at_least = false);
    void finalize();
};

struct SuiteConfig {
    std::uint64_t seed = 1;
    int samples = 25;
    ConventionAssignment convention;
    std::array<int, 4> lattice_extents{8, 4, 4, 8};
    double lattice_spacing = 0.05;
};

const std::vector<std::string>& suite_names();

/// Runs one named suite; throws std::invalid_argument on an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg);

std::string suite_json(const SuiteResult& r);
std::string summary_markdown(const std::vector<SuiteResult>& results);

}  // namespace biquat
