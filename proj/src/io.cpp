#include "nalg/io.hpp"
#include "nalg/error.hpp"

#include <fstream>
#include <set>
#include <tuple>

namespace nalg {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what)
{
    throw Error(ErrorKind::ParseError, what);
}

Rational rational_from_json(const json& j)
{
    if (j.is_string())
        return Rational::parse(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long>());
    bad("rational must be a string \"p/q\" or an integer");
}

std::size_t index_from_json(const json& j, const char* key, std::size_t dim)
{
    if (!j.contains(key) || !j[key].is_number_integer())
        bad(std::string("constant is missing integer field '") + key + "'");
    long v = j[key].get<long>();
    if (v < 0 || static_cast<std::size_t>(v) >= dim)
        bad(std::string("index '") + key + "' out of range");
    return static_cast<std::size_t>(v);
}

MultTable table_from_json(const json& j, std::size_t dim)
{
    if (!j.is_array())
        bad("product must be a list of constants");
    MultTable t(dim);
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (const auto& e : j) {
        if (!e.is_object())
            bad("constant must be an object");
        auto i = index_from_json(e, "i", dim);
        auto jj = index_from_json(e, "j", dim);
        auto k = index_from_json(e, "k", dim);
        if (!e.contains("c"))
            bad("constant is missing field 'c'");
        if (!seen.insert({i, jj, k}).second)
            bad("duplicate constant (" + std::to_string(i) + "," + std::to_string(jj) + "," + std::to_string(k) + ")");
        t(i, jj, k) = rational_from_json(e["c"]);
    }
    return t;
}

json table_to_json(const MultTable& t)
{
    json out = json::array();
    const std::size_t n = t.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!t(i, j, k).is_zero())
                    out.push_back({{"i", i}, {"j", j}, {"k", k}, {"c", t(i, j, k).to_string()}});
    return out;
}

} // namespace

Matrix matrix_from_json(const json& j)
{
    if (!j.is_array())
        bad("matrix must be a list of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = rows ? j[0].size() : 0;
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            bad("matrix rows must be lists of equal length");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rational_from_json(j[r][c]);
    }
    return m;
}

json matrix_to_json(const Matrix& m)
{
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m(r, c).to_string());
        out.push_back(std::move(row));
    }
    return out;
}

json vector_to_json(const Vector& v)
{
    return json(v.to_strings());
}

AlgebraBundle bundle_from_json(const json& j)
{
    if (!j.is_object())
        bad("bundle must be a JSON object");
    if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long>() < 1)
        bad("bundle needs a positive integer 'dim'");
    const auto dim = static_cast<std::size_t>(j["dim"].get<long>());
    AlgebraBundle b(dim);

    auto section = [&](const char* key) -> const json* {
        if (!j.contains(key))
            return nullptr;
        if (!j[key].is_object())
            bad(std::string("'") + key + "' must be an object");
        return &j[key];
    };

    if (auto* p = section("products"))
        for (const auto& [name, t] : p->items())
            b.products.emplace(name, table_from_json(t, dim));
    if (auto* f = section("forms"))
        for (const auto& [name, g] : f->items()) {
            Matrix m = matrix_from_json(g);
            if (m.rows() != dim || m.cols() != dim)
                bad("form '" + name + "' must be dim x dim");
            b.forms.emplace(name, BilinearForm(std::move(m)));
        }
    if (auto* mp = section("maps"))
        for (const auto& [name, g] : mp->items()) {
            Matrix m = matrix_from_json(g);
            if (m.rows() != dim || m.cols() != dim)
                bad("map '" + name + "' must be dim x dim");
            b.maps.emplace(name, LinearEndo(std::move(m)));
        }
    return b;
}

json bundle_to_json(const AlgebraBundle& b)
{
    json out;
    out["dim"] = b.dim;
    json products = json::object();
    for (const auto& [name, t] : b.products)
        products[name] = table_to_json(t);
    out["products"] = std::move(products);
    if (!b.forms.empty()) {
        json forms = json::object();
        for (const auto& [name, w] : b.forms)
            forms[name] = matrix_to_json(w.gram);
        out["forms"] = std::move(forms);
    }
    if (!b.maps.empty()) {
        json maps = json::object();
        for (const auto& [name, m] : b.maps)
            maps[name] = matrix_to_json(m.matrix);
        out["maps"] = std::move(maps);
    }
    return out;
}

AlgebraBundle load_bundle(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        bad("cannot open '" + path.string() + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        bad("invalid JSON in '" + path.string() + "': " + e.what());
    }
    return bundle_from_json(j);
}

void save_bundle(const AlgebraBundle& b, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorKind::ParseError, "cannot write '" + path.string() + "'");
    out << bundle_to_json(b).dump(2) << '\n';
}

} // namespace nalg
