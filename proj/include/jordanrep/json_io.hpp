#pragma once

#include <json.hpp>

#include "jordanrep/matrix.hpp"
#include "jordanrep/rational.hpp"

namespace jordanrep {

void to_json(nlohmann::json& j, const Rational& r);
void from_json(const nlohmann::json& j, Rational& r);

/// {"rows": n, "cols": m, "entries": [[...], ...]} with rational strings.
void to_json(nlohmann::json& j, const RatMatrix& m);
void from_json(const nlohmann::json& j, RatMatrix& m);

}  // namespace jordanrep
