#pragma once

#include <string>

#include <json.hpp>

namespace vvlab {

using Json = nlohmann::ordered_json;

// canonical serialization used for every report (stable field order comes
// from ordered_json; all numbers in reports are integers or strings)
std::string canonical_dump(const Json& j);

// temp-then-rename; existing identical files are left alone, differing
// content raises an error (run directories are append-only)
void atomic_write(const std::string& path, const std::string& content);

void ensure_directory(const std::string& path);

} // namespace vvlab
