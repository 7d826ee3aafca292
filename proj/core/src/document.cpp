#include "vvlab/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vvlab/errors.hpp"
#include "vvlab/parse.hpp"

namespace vvlab {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void reject(const std::string& what) {
  throw InputError("input document: " + what);
}

} // namespace

InputDocument parse_document_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    reject(std::string("JSON parse error: ") + e.what());
  }
  if (!j.is_object()) reject("top level must be an object");

  static const char* known[] = {"characteristic", "variables", "relations",
                                "ideals"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : known)
      if (it.key() == k) ok = true;
    if (!ok) reject("unknown field \"" + it.key() + "\"");
  }
  for (const char* k : known)
    if (!j.contains(k)) reject(std::string("missing field \"") + k + "\"");

  InputDocument doc;
  doc.raw = text;
  if (!j["characteristic"].is_number_unsigned())
    reject("\"characteristic\" must be a positive integer");
  doc.characteristic = j["characteristic"].get<uint64_t>();

  if (!j["variables"].is_array() || j["variables"].empty())
    reject("\"variables\" must be a non-empty list of names");
  for (const auto& v : j["variables"]) {
    if (!v.is_string()) reject("\"variables\" entries must be strings");
    doc.variables.push_back(v.get<std::string>());
  }

  if (!j["relations"].is_array()) reject("\"relations\" must be a list");
  for (const auto& v : j["relations"]) {
    if (!v.is_string()) reject("\"relations\" entries must be strings");
    doc.relations.push_back(v.get<std::string>());
  }

  if (!j["ideals"].is_object() || j["ideals"].empty())
    reject("\"ideals\" must be a non-empty object of named generator lists");
  for (auto it = j["ideals"].begin(); it != j["ideals"].end(); ++it) {
    if (!it.value().is_array() || it.value().empty())
      reject("ideal \"" + it.key() + "\" must be a non-empty list of polynomials");
    std::vector<std::string> gens;
    for (const auto& g : it.value()) {
      if (!g.is_string()) reject("generators of \"" + it.key() + "\" must be strings");
      gens.push_back(g.get<std::string>());
    }
    for (const auto& [name, _] : doc.ideals)
      if (name == it.key()) reject("duplicate ideal name \"" + it.key() + "\"");
    doc.ideals.emplace_back(it.key(), std::move(gens));
  }
  return doc;
}

InputDocument parse_document_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open document: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document_text(ss.str());
}

ModelPtr build_model(const InputDocument& doc) {
  return LocalRingModel::build(doc.characteristic, doc.variables, doc.relations);
}

MPrimaryIdeal declare_named_ideal(const ModelPtr& A, const InputDocument& doc,
                                  const std::string& name) {
  for (const auto& [n, gens] : doc.ideals) {
    if (n != name) continue;
    std::vector<Polynomial> polys;
    for (const std::string& s : gens)
      polys.push_back(parse_polynomial(A->ring(), s));
    return MPrimaryIdeal::declare(A, std::move(polys));
  }
  throw InputError("no ideal named \"" + name + "\" in the document");
}

} // namespace vvlab
