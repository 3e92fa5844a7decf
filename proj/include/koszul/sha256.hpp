#ifndef KOSZUL_SHA256_HPP
#define KOSZUL_SHA256_HPP

#include <string>

namespace koszul {

// Lowercase hex SHA-256 digest; used to fingerprint report inputs.
std::string sha256_hex(const std::string& bytes);

} // namespace koszul

#endif
