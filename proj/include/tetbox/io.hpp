#pragma once

#include "tetbox/evaluation.hpp"
#include "tetbox/matrix.hpp"
#include "tetbox/module.hpp"
#include "tetbox/poly.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace tetbox {

inline constexpr const char* kSchema = "tetbox/1";

nlohmann::json matrix_to_json(const ExactMatrix& m);
/// Entries may be strings "p/q" or JSON integers.
ExactMatrix matrix_from_json(const nlohmann::json& j);
/// Coefficients low to high, as strings.
nlohmann::json poly_to_json(const UniPoly& p);

/// {"schema", "dim", "label", "action": {"x01": [[...]], ...}} plus "basis"
/// when given. Matrices act on column vectors; for tensor products the left
/// factor indexes the slowest-varying coordinate.
nlohmann::json module_to_json(const TetModule& m, const std::optional<std::string>& basis = std::nullopt);
/// Throws Parse for malformed documents and ShapeMismatch for missing or
/// mis-sized matrices.
TetModule module_from_json(const nlohmann::json& j);

/// Header "generator,row,col,value", one line per entry.
std::string module_to_csv(const TetModule& m);
/// Aligned text rendering of all 12 matrices.
std::string module_to_table(const TetModule& m);

/// [{"d": n, "a": "p/q"}, ...]
nlohmann::json classification_to_json(const std::vector<EvalModuleSpec>& factors);

} // namespace tetbox
