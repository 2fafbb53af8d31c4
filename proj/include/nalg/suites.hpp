#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace nalg {

/// One tested structure: where it came from, the named boolean verdicts that
/// were computed on it, and whether they stand in the relation the suite
/// asserts.
struct SuiteInstance {
    std::string source;
    std::vector<std::pair<std::string, bool>> verdicts;
    bool agrees = true;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::vector<SuiteInstance> instances;

    std::size_t agree_count() const;
    bool holds() const { return agree_count() == instances.size(); }
    nlohmann::json to_json() const;
};

constexpr std::uint64_t default_suite_seed = 20240501;
constexpr std::size_t default_suite_samples = 100;

std::vector<std::string> suite_names();
/// One-line statement of what the suite checks.
std::string suite_statement(const std::string& name);

/// Runs the suite over the applicable catalog fixtures followed by `samples`
/// structures drawn from a generator seeded with `seed`. Throws UnknownSuite.
SuiteReport run_suite(const std::string& name, std::uint64_t seed = default_suite_seed,
                      std::size_t samples = default_suite_samples);

} // namespace nalg
