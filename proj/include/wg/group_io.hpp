#pragma once

// JSON files for groups and character tables.
//
//   group: {"name", "version": 1, "order", "mul": [[...]]}   (0-indexed elements)
//      or: {"name", "version": 1, "perm_gens": [[...]]}      (1-indexed one-line)
//   table: {"group", "version": 1, "classes": [element per column],
//           "names": [...], "chars": [[CycNum text, ...], ...]}

#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include <json.hpp>

#include "wg/groups.hpp"

#ifndef WG_DATA_DIR
#define WG_DATA_DIR "data"
#endif

namespace wg {

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline nlohmann::json parse_json(const std::string& text, const std::string& origin) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

inline void check_version(const nlohmann::json& j, const std::string& origin) {
  if (j.contains("version") && j["version"] != 1) throw ParseError(origin + ": unsupported version");
}

template <typename T>
T field(const nlohmann::json& j, const char* key, const std::string& origin) {
  if (!j.contains(key)) throw ParseError(origin + ": missing field '" + key + "'");
  try {
    return j[key].get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(origin + ": field '" + key + "' has the wrong type");
  }
}

}  // namespace detail

inline FiniteGroup group_from_json(const nlohmann::json& j, const std::string& origin = "group",
                                   const Caps& caps = {}) {
  detail::check_version(j, origin);
  auto name = detail::field<std::string>(j, "name", origin);
  if (j.contains("mul")) {
    auto mul = detail::field<std::vector<std::vector<int>>>(j, "mul", origin);
    caps.check("group-order", caps.group_order, static_cast<long long>(mul.size()));
    if (j.contains("order") && j["order"] != mul.size()) throw ParseError(origin + ": order disagrees with table");
    return FiniteGroup::from_table(std::move(name), std::move(mul));
  }
  auto gens = detail::field<std::vector<std::vector<int>>>(j, "perm_gens", origin);
  for (auto& g : gens) {
    for (int& x : g) --x;
  }
  FiniteGroup g = FiniteGroup::from_permutations(std::move(name), gens, caps);
  if (j.contains("order") && j["order"] != g.order()) throw ParseError(origin + ": order disagrees with closure");
  return g;
}

inline CharacterTable table_from_json(std::shared_ptr<const FiniteGroup> group, const nlohmann::json& j,
                                      const std::string& origin = "table") {
  detail::check_version(j, origin);
  auto classes = detail::field<std::vector<int>>(j, "classes", origin);
  auto text = detail::field<std::vector<std::vector<std::string>>>(j, "chars", origin);
  std::vector<std::string> names;
  if (j.contains("names")) names = detail::field<std::vector<std::string>>(j, "names", origin);
  std::vector<std::vector<CycNum>> values;
  for (const auto& row : text) {
    std::vector<CycNum> r;
    for (const auto& s : row) {
      try {
        r.push_back(CycNum::parse(s));
      } catch (const ParseError& e) {
        throw ParseError(origin + ": " + e.what());
      }
    }
    values.push_back(std::move(r));
  }
  return CharacterTable(std::move(group), classes, values, std::move(names));
}

inline std::shared_ptr<const FiniteGroup> load_group(const std::string& path, const Caps& caps = {}) {
  return std::make_shared<const FiniteGroup>(group_from_json(detail::parse_json(detail::read_file(path), path), path, caps));
}

inline CharacterTable load_table(std::shared_ptr<const FiniteGroup> group, const std::string& path) {
  return table_from_json(std::move(group), detail::parse_json(detail::read_file(path), path), path);
}

/// Group and table shipped in the data directory, e.g. "Q8" or "GL2F3".
inline CharacterTable load_bundled(const std::string& name, const std::string& data_dir = WG_DATA_DIR) {
  auto group = load_group(data_dir + "/groups/" + name + ".json");
  return load_table(group, data_dir + "/tables/" + name + ".json");
}

inline nlohmann::json table_to_json(const CharacterTable& t) {
  nlohmann::json j;
  j["group"] = t.group().name();
  j["version"] = 1;
  std::vector<int> classes;
  std::vector<std::vector<std::string>> chars(t.size());
  for (int c = 0; c < t.group().num_classes(); ++c) {
    const int cls = t.column_class(c);
    classes.push_back(t.group().class_rep(cls));
    for (int r = 0; r < t.size(); ++r) chars[r].push_back(t.value(r, cls).to_string());
  }
  j["classes"] = classes;
  j["names"] = t.names();
  j["chars"] = chars;
  return j;
}

}  // namespace wg
