#pragma once

#include <cstddef>
#include <string>

namespace biasgauge {

// SHA-256 digest as a lowercase hex string.
std::string sha256_hex(const void* data, std::size_t size);
std::string sha256_hex(const std::string& data);

}  // namespace biasgauge
