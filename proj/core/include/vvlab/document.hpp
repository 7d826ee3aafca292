#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vvlab/local_model.hpp"

namespace vvlab {

// Input document: a single JSON text with exactly the top-level fields
// characteristic (integer), variables (list of names), relations (list of
// polynomial strings), ideals (object: name -> list of polynomial strings).
// Unknown fields are rejected by name.
struct InputDocument {
  uint64_t characteristic = 0;
  std::vector<std::string> variables;
  std::vector<std::string> relations;
  std::vector<std::pair<std::string, std::vector<std::string>>> ideals;
  std::string raw; // exact bytes, for the manifest digest
};

InputDocument parse_document_text(const std::string& text);
InputDocument parse_document_file(const std::string& path);

ModelPtr build_model(const InputDocument& doc);
MPrimaryIdeal declare_named_ideal(const ModelPtr& A, const InputDocument& doc,
                                  const std::string& name);

} // namespace vvlab
