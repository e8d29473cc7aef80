#include "posetlab/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

namespace posetlab {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::string position_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

const std::string& as_name(const json& j, const char* where) {
  if (!j.is_string()) fail(std::string("expected an element name string in ") + where);
  return j.get_ref<const std::string&>();
}

std::pair<std::string, std::string> as_pair(const json& j, const char* where) {
  if (!j.is_array() || j.size() != 2) fail(std::string("expected a pair [x, y] in ") + where);
  return {as_name(j[0], where), as_name(j[1], where)};
}

}  // namespace

LabeledPoset parse_poset_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(position_of(text, e.byte) + ": malformed JSON");
  }
  if (!doc.is_object()) fail("top level must be an object");
  if (!doc.contains("elements") || !doc["elements"].is_array()) fail("missing \"elements\" array");
  for (const auto& [key, value] : doc.items()) {
    if (key != "elements" && key != "covers" && key != "labeling") fail("unknown key \"" + key + "\"");
  }

  std::vector<std::string> elements;
  for (const auto& e : doc["elements"]) elements.push_back(as_name(e, "elements"));
  std::vector<std::pair<std::string, std::string>> relations;
  if (doc.contains("covers")) {
    if (!doc["covers"].is_array()) fail("\"covers\" must be an array");
    for (const auto& c : doc["covers"]) relations.push_back(as_pair(c, "covers"));
  }
  Poset poset = Poset::from_cover_relations(std::move(elements), relations);

  if (!doc.contains("labeling")) return LabeledPoset(poset, EdgeSigns{std::vector<int>(poset.edge_count(), 1)});
  const json& labeling = doc["labeling"];
  if (!labeling.is_object() || labeling.size() != 1) fail("\"labeling\" must hold exactly one of omega, epsilon");

  if (labeling.contains("omega")) {
    const json& map = labeling["omega"];
    if (!map.is_object()) fail("\"omega\" must map element names to labels");
    Omega omega;
    omega.labels.assign(poset.size(), 0);
    for (const auto& [name, label] : map.items()) {
      if (!label.is_number_integer()) fail("omega label of \"" + name + "\" is not an integer");
      omega.labels[poset.index_of(name)] = label.get<int>();
    }
    if (map.size() != poset.size()) throw Error(ErrorCode::InvalidLabeling, "omega must label every element");
    return LabeledPoset(std::move(poset), std::move(omega));
  }
  if (labeling.contains("epsilon")) {
    const json& list = labeling["epsilon"];
    if (!list.is_array()) fail("\"epsilon\" must be a list of [x, y, sign]");
    EdgeSigns signs{std::vector<int>(poset.edge_count(), 0)};
    for (const auto& entry : list) {
      if (!entry.is_array() || entry.size() != 3 || !entry[2].is_number_integer()) fail("epsilon entries are [x, y, sign]");
      const std::size_t lo = poset.index_of(as_name(entry[0], "epsilon"));
      const std::size_t hi = poset.index_of(as_name(entry[1], "epsilon"));
      const auto e = poset.edge_index(lo, hi);
      if (!e) throw Error(ErrorCode::InvalidLabeling, poset.name(lo) + " < " + poset.name(hi) + " is not a cover");
      if (signs.signs[*e] != 0) throw Error(ErrorCode::InvalidLabeling, "cover listed twice in epsilon");
      signs.signs[*e] = entry[2].get<int>();
    }
    return LabeledPoset(std::move(poset), std::move(signs));
  }
  fail("\"labeling\" must hold omega or epsilon");
}

LabeledPoset read_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_poset_file(buffer.str());
}

json poset_file_json(const Poset& poset) {
  json doc;
  doc["elements"] = poset.names();
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& c : poset.covers()) covers.emplace_back(poset.name(c.lower), poset.name(c.upper));
  std::sort(covers.begin(), covers.end());
  doc["covers"] = json::array();
  for (const auto& [lo, hi] : covers) doc["covers"].push_back({lo, hi});
  return doc;
}

json poset_file_json(const LabeledPoset& lp) {
  json doc = poset_file_json(lp.poset());
  const Poset& poset = lp.poset();
  if (lp.has_omega()) {
    json map = json::object();
    for (std::size_t x = 0; x < poset.size(); ++x) map[poset.name(x)] = lp.omega().labels[x];
    doc["labeling"] = {{"omega", map}};
  } else {
    std::vector<std::tuple<std::string, std::string, int>> entries;
    for (std::size_t e = 0; e < poset.edge_count(); ++e) {
      const auto& c = poset.covers()[e];
      entries.emplace_back(poset.name(c.lower), poset.name(c.upper), lp.sign(e));
    }
    std::sort(entries.begin(), entries.end());
    json list = json::array();
    for (const auto& [lo, hi, s] : entries) list.push_back({lo, hi, s});
    doc["labeling"] = {{"epsilon", list}};
  }
  return doc;
}

std::string serialize(const LabeledPoset& lp) { return poset_file_json(lp).dump(); }
std::string serialize(const Poset& poset) { return poset_file_json(poset).dump(); }

json bigint_json(const BigInt& n) { return n.get_str(); }

json polynomial_json(const IntPolynomial& f) {
  json out = json::array();
  for (const auto& c : f.coefficients()) out.push_back(c.get_str());
  return out;
}

}  // namespace posetlab
