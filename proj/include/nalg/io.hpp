#pragma once

#include "nalg/algebra.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace nalg {

/// Structure-constant interchange format:
///   { "dim": n,
///     "products": { name: [ {"i":..,"j":..,"k":..,"c":"p/q"}, ... ] },
///     "forms":    { name: [[ "p/q", ... ], ...] },
///     "maps":     { name: [[ "p/q", ... ], ...] } }
/// Omitted constants are zero; a repeated (i,j,k) is a ParseError.
AlgebraBundle bundle_from_json(const nlohmann::json& j);

/// Zero constants are omitted; entries are sorted by (i, j, k).
nlohmann::json bundle_to_json(const AlgebraBundle& b);

AlgebraBundle load_bundle(const std::filesystem::path& path);
void save_bundle(const AlgebraBundle& b, const std::filesystem::path& path);

nlohmann::json vector_to_json(const Vector& v);
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

} // namespace nalg
