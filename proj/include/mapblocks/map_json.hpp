#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "mapblocks/rooted_map.hpp"

namespace mapblocks {

// Serialization record: {num_darts, twin, next, root}; the trivial map is
// encoded as {"num_darts": 0}.
inline nlohmann::json map_to_json(const RootedMap& m) {
  if (m.is_trivial()) return nlohmann::json{{"num_darts", 0}};
  return nlohmann::json{
      {"num_darts", m.num_darts}, {"twin", m.twin}, {"next", m.next}, {"root", m.root}};
}

inline RootedMap map_from_json(const nlohmann::json& j) {
  RootedMap m;
  m.num_darts = j.at("num_darts").get<int>();
  if (m.num_darts == 0) return m;
  m.twin = j.at("twin").get<std::vector<int>>();
  m.next = j.at("next").get<std::vector<int>>();
  m.root = j.at("root").get<int>();
  if (const auto bad = validate(m); !bad.empty())
    throw std::invalid_argument("map_from_json: invalid map: " + bad.front());
  return m;
}

}  // namespace mapblocks
