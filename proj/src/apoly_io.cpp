#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "zigzag/error.hpp"
#include "zigzag/polytope.hpp"

namespace zigzag {

namespace {

using nlohmann::json;

std::string id_text(const json& id) {
  if (id.is_string()) return id.get<std::string>();
  if (id.is_number_integer()) return std::to_string(id.get<long long>());
  throw Error(ErrorKind::Parse, "face ids must be integers or strings, got " + id.dump());
}

bool is_plain_index(const std::string& s) {
  return !s.empty() && s.size() < 10 && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
         (s.size() == 1 || s[0] != '0');
}

}  // namespace

AbstractPolytope parse_apoly(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::Parse, "top level must be an object");
  for (const char* key : {"rank", "faces", "incidence"})
    if (!doc.contains(key)) throw Error(ErrorKind::Parse, std::string("missing key \"") + key + "\"");
  if (!doc["rank"].is_number_integer()) throw Error(ErrorKind::Parse, "\"rank\" must be an integer");
  const long long rank = doc["rank"].get<long long>();
  if (rank < 1 || rank > 64) throw Error(ErrorKind::RankOutOfRange, "rank " + std::to_string(rank) + " out of range");
  const auto& faces = doc["faces"];
  if (!faces.is_array()) throw Error(ErrorKind::Parse, "\"faces\" must be an array");
  if (faces.size() != static_cast<std::size_t>(rank) + 2)
    throw Error(ErrorKind::RankMismatch, "rank " + std::to_string(rank) + " needs " + std::to_string(rank + 2) +
                                             " face lists (ranks -1.." + std::to_string(rank) + "), got " +
                                             std::to_string(faces.size()));
  std::vector<std::vector<std::string>> names(faces.size());
  std::vector<std::unordered_map<std::string, FaceId>> index(faces.size());
  for (std::size_t r = 0; r < faces.size(); ++r) {
    if (!faces[r].is_array()) throw Error(ErrorKind::Parse, "faces of rank " + std::to_string(static_cast<long long>(r) - 1) + " must be an array");
    for (const auto& id : faces[r]) {
      auto name = id_text(id);
      if (!index[r].emplace(name, static_cast<FaceId>(names[r].size())).second)
        throw Error(ErrorKind::InvalidPolytope, "duplicate face id " + name + " in rank " +
                                                    std::to_string(static_cast<long long>(r) - 1));
      names[r].push_back(std::move(name));
    }
  }
  const auto& inc = doc["incidence"];
  if (!inc.is_array()) throw Error(ErrorKind::Parse, "\"incidence\" must be an array");
  std::vector<Incidence> incidences;
  incidences.reserve(inc.size());
  for (const auto& e : inc) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer())
      throw Error(ErrorKind::Parse, "incidence entries must be [k, low, high], got " + e.dump());
    const long long k = e[0].get<long long>();
    if (k < -1 || k >= rank) throw Error(ErrorKind::InvalidPolytope, "incidence rank " + std::to_string(k) + " out of range");
    const auto lo_slot = static_cast<std::size_t>(k + 1);
    const auto lookup = [&](std::size_t slot, const json& id) {
      const auto it = index[slot].find(id_text(id));
      if (it == index[slot].end())
        throw Error(ErrorKind::InvalidPolytope, "incidence " + e.dump() + " names an unknown face of rank " +
                                                    std::to_string(static_cast<long long>(slot) - 1));
      return it->second;
    };
    incidences.push_back({static_cast<int>(k), lookup(lo_slot, e[1]), lookup(lo_slot + 1, e[2])});
  }
  return AbstractPolytope::build(static_cast<int>(rank), std::move(names), std::move(incidences));
}

AbstractPolytope read_apoly_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_apoly(buf.str());
}

std::string write_apoly(const AbstractPolytope& p) {
  const auto id_json = [](const std::string& name) -> json {
    if (is_plain_index(name)) return std::stoll(name);
    return name;
  };
  json faces = json::array();
  for (int k = -1; k <= p.rank(); ++k) {
    json row = json::array();
    for (FaceId f = 0; f < p.face_count(k); ++f) row.push_back(id_json(p.face_name(k, f)));
    faces.push_back(std::move(row));
  }
  json inc = json::array();
  for (const auto& e : p.incidences())
    inc.push_back(json::array({e.rank, id_json(p.face_name(e.rank, e.low)), id_json(p.face_name(e.rank + 1, e.high))}));
  json doc;
  doc["rank"] = p.rank();
  doc["faces"] = std::move(faces);
  doc["incidence"] = std::move(inc);
  return doc.dump() + "\n";
}

}  // namespace zigzag
