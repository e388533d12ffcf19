#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace lensskein::verify {

// Unset fields take the per-suite defaults listed by suite_defaults().
struct SuiteParams {
    std::optional<int> n;
    std::optional<int> p;
    std::optional<int> k;
    std::optional<int> samples;
    std::uint64_t seed = 7;
};

struct SuiteReport {
    std::string suite;
    nlohmann::json params;
    std::size_t checked = 0;
    bool passed = true;
    nlohmann::json counterexample;  // null when passed
    std::vector<std::string> notes;

    nlohmann::json to_json() const;
    std::string str() const;
};

const std::vector<std::string>& suite_names();
// Fully resolved parameters for a suite; throws std::invalid_argument for an unknown name.
nlohmann::json suite_defaults(const std::string& name);

// Runs a named suite. Throws std::invalid_argument for unknown names or
// parameters outside the suite's bounds.
SuiteReport run_suite(const std::string& name, const SuiteParams& params);

}  // namespace lensskein::verify
