#include "itg/matroid_io.hpp"

#include <fstream>
#include <string_view>
#include <unordered_map>

#include "itg/catalog.hpp"

namespace itg {

namespace {

using nlohmann::json;

std::vector<ElementSet> parse_family(const json& arr, int n,
                                     const std::unordered_map<std::string, int>& by_label,
                                     const char* what) {
  if (!arr.is_array()) throw ParseError(std::string(what) + " must be an array of arrays");
  std::vector<ElementSet> out;
  for (const json& set : arr) {
    if (!set.is_array()) throw ParseError(std::string(what) + " entries must be arrays");
    ElementSet s;
    for (const json& item : set) {
      int e = -1;
      if (item.is_number_integer()) {
        e = item.get<int>();
      } else if (item.is_string()) {
        auto it = by_label.find(item.get<std::string>());
        if (it == by_label.end())
          throw ParseError("unknown element label: " + item.get<std::string>());
        e = it->second;
      } else {
        throw ParseError("elements must be indices or labels");
      }
      if (e < 0 || e >= n) throw ParseError("element index out of range: " + std::to_string(e));
      if (s.contains(e)) throw ParseError("duplicate element in a set");
      s.insert(e);
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace

Matroid matroid_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("matroid document must be a JSON object");
  if (!doc.contains("ground_set")) throw ParseError("missing ground_set");

  int n = 0;
  std::vector<std::string> labels;
  const json& ground = doc.at("ground_set");
  if (ground.is_number_integer()) {
    n = ground.get<int>();
    if (n < 0) throw ParseError("ground_set size must be nonnegative");
  } else if (ground.is_array()) {
    for (const json& l : ground) {
      if (!l.is_string()) throw ParseError("ground_set labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    n = static_cast<int>(labels.size());
  } else {
    throw ParseError("ground_set must be an integer or an array of labels");
  }

  std::unordered_map<std::string, int> by_label;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    if (!by_label.emplace(labels[static_cast<std::size_t>(i)], i).second)
      throw ParseError("duplicate element label: " + labels[static_cast<std::size_t>(i)]);
  }

  const bool has_circuits = doc.contains("circuits");
  const bool has_bases = doc.contains("bases");
  if (has_circuits == has_bases)
    throw ParseError("exactly one of circuits/bases is required");

  Matroid m = [&] {
    try {
      if (has_circuits)
        return Matroid::from_circuits(n, parse_family(doc.at("circuits"), n, by_label, "circuits"));
      return Matroid::from_bases(n, parse_family(doc.at("bases"), n, by_label, "bases"));
    } catch (const ParseError&) {
      throw;
    }
  }();

  if (!labels.empty()) m = m.with_labels(labels);
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) throw ParseError("name must be a string");
    m = m.with_name(doc.at("name").get<std::string>());
  }
  return m;
}

nlohmann::ordered_json matroid_to_json(const Matroid& m) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  if (!m.name().empty()) doc["name"] = m.name();
  if (m.labels().empty())
    doc["ground_set"] = m.ground_size();
  else
    doc["ground_set"] = m.labels();
  nlohmann::ordered_json circuits = nlohmann::ordered_json::array();
  for (ElementSet c : m.circuits()) circuits.push_back(c.indices());
  doc["circuits"] = circuits;
  return doc;
}

Matroid load_matroid(const std::string& source) {
  constexpr std::string_view kScheme = "catalog:";
  if (source.rfind(kScheme, 0) == 0) return catalog_get(source.substr(kScheme.size()));
  std::ifstream in(source);
  if (!in) throw ParseError("cannot open matroid file: " + source);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in " + source + ": " + e.what());
  }
  return matroid_from_json(doc);
}

}  // namespace itg
