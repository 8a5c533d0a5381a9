#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "json.hpp"

#include "qu2/canrep.hpp"
#include "qu2/element.hpp"

namespace qu2 {

/// [{coeff: "p/q", alpha: "word", k: int, beta: "word"}, ...]; words use "e"
/// for the empty word, k falls back to a decimal string beyond 64 bits.
nlohmann::json to_json(const Element& e);
/// Throws UsageError on a malformed payload.
Element element_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Int& n);

/// {phase: "a/b", index: int} or "zero".
nlohmann::json to_json(const std::optional<BasisVector>& v);

/// [{coeff, index}, ...]
nlohmann::json to_json(const std::vector<std::pair<Rational, Int>>& image);

}  // namespace qu2
