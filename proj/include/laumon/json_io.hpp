#pragma once

#include <json.hpp>

#include "laumon/charpoly.hpp"
#include "laumon/modulevec.hpp"
#include "laumon/patterns.hpp"
#include "laumon/relations.hpp"

namespace laumon::io {

using json = nlohmann::ordered_json;

json to_json(const FinitePattern& p);
json to_json(const AffinePattern& p);
json to_json(const CharPoly& c);
json to_json(const RelationReport& r, bool only_failures = false);

FinitePattern finite_from_json(const json& j);
AffinePattern affine_from_json(const json& j);

template <class P>
json vector_to_json(const ModuleVec<P>& v) {
  json terms = json::array();
  for (const auto& [p, c] : v.terms()) {
    json t;
    t["pattern"] = to_json(p);
    t["coeff"] = c.to_string();
    terms.push_back(std::move(t));
  }
  return terms;
}

}  // namespace laumon::io
