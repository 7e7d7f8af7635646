#include "cake/io.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace cake {

using nlohmann::json;

namespace {

Rat rat_field(const json& j, const std::string& where) {
  try {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long long>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(where + ": " + e.what());
  }
  throw FormatError(where + ": expected a rational string such as \"3/2\"");
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw FormatError(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

struct Parsed {
  std::vector<Rat> lengths;
  std::vector<std::string> names;
  std::vector<std::vector<Rat>> densities;
};

Parsed parse_cake(const json& j) {
  Parsed out;
  const json& slices = member(j, "slices", "problem");
  if (!slices.is_array()) throw FormatError("slices: expected an array");
  for (std::size_t k = 0; k < slices.size(); ++k) {
    std::string where = "slices[" + std::to_string(k) + "].length";
    Rat len = rat_field(member(slices[k], "length", "slices[" + std::to_string(k) + "]"), where);
    if (len <= 0) throw FormatError(where + ": slice lengths must be positive");
    out.lengths.push_back(len);
  }
  const json& agents = member(j, "agents", "problem");
  if (!agents.is_array()) throw FormatError("agents: expected an array");
  for (std::size_t i = 0; i < agents.size(); ++i) {
    std::string where = "agents[" + std::to_string(i) + "]";
    const json& name = member(agents[i], "name", where);
    if (!name.is_string() || name.get<std::string>().empty()) throw FormatError(where + ".name: expected a name");
    const json& dens = member(agents[i], "densities", where);
    if (!dens.is_array() || dens.size() != out.lengths.size())
      throw FormatError(where + ".densities: expected one density per slice");
    std::vector<Rat> row;
    for (std::size_t k = 0; k < dens.size(); ++k) {
      Rat d = rat_field(dens[k], where + ".densities[" + std::to_string(k) + "]");
      if (d < 0) throw FormatError(where + ".densities: densities must be nonnegative");
      row.push_back(d);
    }
    out.names.push_back(name.get<std::string>());
    out.densities.push_back(std::move(row));
  }
  return out;
}

}  // namespace

Problem problem_from_json(std::string_view text) {
  Parsed c = parse_cake(parse(text));
  try {
    return Problem(std::move(c.names), SliceGrid(std::move(c.lengths)), std::move(c.densities));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

std::string problem_to_json(const Problem& p) {
  json slices = json::array();
  for (const auto& len : p.grid().lengths()) slices.push_back({{"length", to_string(len)}});
  json agents = json::array();
  for (std::size_t i = 0; i < p.agent_count(); ++i) {
    json dens = json::array();
    for (const auto& d : p.measure(i).densities()) dens.push_back(to_string(d));
    agents.push_back({{"name", p.name(i)}, {"densities", dens}});
  }
  return json{{"slices", slices}, {"agents", agents}}.dump(2) + "\n";
}

Enlargement enlargement_from_json(std::string_view text) {
  Parsed c = parse_cake(parse(text));
  Enlargement e;
  e.lengths = std::move(c.lengths);
  for (std::size_t i = 0; i < c.names.size(); ++i)
    if (!e.densities.emplace(c.names[i], std::move(c.densities[i])).second)
      throw FormatError("duplicate agent " + c.names[i]);
  return e;
}

Division division_from_json(const Problem& p, std::string_view text) {
  json j = parse(text);
  if (!j.is_array()) throw FormatError("division: expected an array");
  Division x;
  x.pieces.resize(p.agent_count());
  std::vector<bool> seen(p.agent_count(), false);
  for (std::size_t e = 0; e < j.size(); ++e) {
    std::string where = "division[" + std::to_string(e) + "]";
    const json& agent = member(j[e], "agent", where);
    if (!agent.is_string()) throw FormatError(where + ".agent: expected a name");
    auto i = p.find(agent.get<std::string>());
    if (!i) throw FormatError(where + ": unknown agent " + agent.get<std::string>());
    if (seen[*i]) throw FormatError(where + ": agent listed twice");
    seen[*i] = true;
    const json& ivs = member(j[e], "intervals", where);
    if (!ivs.is_array()) throw FormatError(where + ".intervals: expected an array");
    Piece piece;
    for (const auto& iv : ivs) {
      if (!iv.is_array() || iv.size() != 2) throw FormatError(where + ": intervals are [lo, hi] pairs");
      piece.push_back({rat_field(iv[0], where), rat_field(iv[1], where)});
    }
    try {
      x.pieces[*i] = normalize_piece(std::move(piece));
    } catch (const std::invalid_argument& err) {
      throw FormatError(where + ": " + err.what());
    }
  }
  try {
    validate(p, x);
  } catch (const std::invalid_argument& err) {
    throw FormatError(err.what());
  }
  return x;
}

std::string division_to_json(const Problem& p, const Division& x) {
  json out = json::array();
  for (std::size_t i = 0; i < p.agent_count(); ++i) {
    json ivs = json::array();
    for (const auto& iv : x.pieces[i]) ivs.push_back({to_string(iv.lo), to_string(iv.hi)});
    out.push_back({{"agent", p.name(i)}, {"intervals", ivs}});
  }
  return out.dump(2) + "\n";
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << text;
}

}  // namespace cake
