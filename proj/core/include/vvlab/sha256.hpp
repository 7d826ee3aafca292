#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace vvlab {

std::string sha256_hex(std::string_view data);

// short content fingerprint (first 16 hex digits)
std::string fingerprint16(std::string_view data);

} // namespace vvlab
