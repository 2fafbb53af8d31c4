#pragma once

#include "nalg/algebra.hpp"
#include "nalg/identity.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace nalg {

/// A recorded verdict about a fixture. `rename` maps the system's standard
/// names onto the fixture's (e.g. {"P": "Q"} to check a second map).
struct Claim {
    std::string system;
    bool holds = true;
    std::map<std::string, std::string> rename;
    std::vector<std::string> products;
};

struct Fixture {
    std::string name;
    AlgebraBundle bundle;
    std::string provenance;
    std::vector<Claim> claims;
};

/// Directory holding index.json and the bundle files. Defaults to the
/// fixtures directory of the source tree.
std::filesystem::path fixture_dir();
void set_fixture_dir(const std::filesystem::path& dir);

std::vector<std::string> fixture_names();
/// Throws UnknownFixture.
Fixture fixture(const std::string& name);

/// Runs the claim's system on the fixture bundle.
CheckReport check_claim(const Fixture& f, const Claim& c);

} // namespace nalg
