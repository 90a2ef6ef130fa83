#pragma once

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace tetbox {

struct SuiteReport {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<std::string> failures;
    double seconds = 0;

    bool ok() const { return failed == 0; }
    nlohmann::json to_json() const;
};

/// relations, gradings, transitions, bilinear, twisting, drinfeld.
const std::vector<std::string>& suite_names();

/// Runs one named property suite over diameters up to max_d; "all" runs every
/// suite. Throws InvalidArgument for an unknown name.
std::vector<SuiteReport> run_suites(std::string_view name, int max_d);

} // namespace tetbox
