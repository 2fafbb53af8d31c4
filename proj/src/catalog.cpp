#include "nalg/catalog.hpp"
#include "nalg/error.hpp"
#include "nalg/io.hpp"

#include <fstream>
#include <mutex>

#ifndef NALG_FIXTURE_DIR
#define NALG_FIXTURE_DIR "fixtures"
#endif

namespace nalg {

using nlohmann::json;

namespace {

std::mutex dir_mutex;
std::filesystem::path current_dir = NALG_FIXTURE_DIR;

json load_index()
{
    const auto path = fixture_dir() / "index.json";
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::UnknownFixture, "cannot open fixture index '" + path.string() + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, "invalid fixture index: " + std::string(e.what()));
    }
}

} // namespace

std::filesystem::path fixture_dir()
{
    std::lock_guard lock(dir_mutex);
    return current_dir;
}

void set_fixture_dir(const std::filesystem::path& dir)
{
    std::lock_guard lock(dir_mutex);
    current_dir = dir;
}

std::vector<std::string> fixture_names()
{
    std::vector<std::string> names;
    const json index = load_index();
    for (const auto& entry : index.at("fixtures"))
        names.push_back(entry.at("name").get<std::string>());
    return names;
}

Fixture fixture(const std::string& name)
{
    const json index = load_index();
    for (const auto& entry : index.at("fixtures")) {
        if (entry.at("name").get<std::string>() != name)
            continue;
        Fixture f;
        f.name = name;
        f.bundle = load_bundle(fixture_dir() / entry.at("file").get<std::string>());
        f.provenance = entry.value("provenance", "");
        for (const auto& c : entry.value("claims", json::array())) {
            Claim claim;
            claim.system = c.at("system").get<std::string>();
            claim.holds = c.value("holds", true);
            if (c.contains("rename"))
                claim.rename = c["rename"].get<std::map<std::string, std::string>>();
            if (c.contains("products"))
                claim.products = c["products"].get<std::vector<std::string>>();
            f.claims.push_back(std::move(claim));
        }
        return f;
    }
    throw Error(ErrorKind::UnknownFixture, "no fixture named '" + name + "'");
}

CheckReport check_claim(const Fixture& f, const Claim& c)
{
    IdentitySystem sys = registry(c.system);
    if (!c.rename.empty())
        sys = rename_system(sys, c.rename);
    if (sys.per_product)
        sys = instantiate(sys, f.bundle, c.products);
    return check_system(sys, f.bundle);
}

} // namespace nalg
