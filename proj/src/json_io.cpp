#include "qu2/json_io.hpp"

#include "qu2/errors.hpp"

namespace qu2 {

nlohmann::json to_json(const Int& n) {
  if (fits_int64(n)) return static_cast<std::int64_t>(n);
  return n.str();
}

nlohmann::json to_json(const Element& e) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : e.terms()) {
    out.push_back({{"coeff", to_string(c)}, {"alpha", m.alpha.str()}, {"k", to_json(m.k)},
                   {"beta", m.beta.str()}});
  }
  return out;
}

Element element_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw UsageError("element JSON must be an array of terms");
  Element e;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("alpha") || !t.contains("beta") || !t.contains("k")) {
      throw UsageError("element JSON term needs alpha, k, beta");
    }
    Rational c = 1;
    if (t.contains("coeff")) {
      auto q = t["coeff"].is_string() ? parse_rational(t["coeff"].get<std::string>()) : std::nullopt;
      if (t["coeff"].is_number_integer()) q = Rational(t["coeff"].get<std::int64_t>());
      if (!q) throw UsageError("element JSON: bad coeff");
      c = *q;
    }
    Int k;
    if (t["k"].is_number_integer()) {
      k = t["k"].get<std::int64_t>();
    } else if (t["k"].is_string() && parse_int(t["k"].get<std::string>())) {
      k = *parse_int(t["k"].get<std::string>());
    } else {
      throw UsageError("element JSON: bad k");
    }
    if (!t["alpha"].is_string() || !t["beta"].is_string()) throw UsageError("element JSON: words are strings");
    e.add_term(Monomial{Word::parse(t["alpha"].get<std::string>()), std::move(k),
                        Word::parse(t["beta"].get<std::string>())},
               c);
  }
  return e;
}

nlohmann::json to_json(const std::optional<BasisVector>& v) {
  if (!v) return "zero";
  return {{"phase", to_string(v->phase)}, {"index", to_json(v->index)}};
}

nlohmann::json to_json(const std::vector<std::pair<Rational, Int>>& image) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [c, n] : image) out.push_back({{"coeff", to_string(c)}, {"index", to_json(n)}});
  return out;
}

}  // namespace qu2
