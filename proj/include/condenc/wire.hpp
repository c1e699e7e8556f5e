#pragma once

#include <span>

#include "condenc/scheme.hpp"

namespace condenc {

inline constexpr std::uint8_t kWireVersion = 1;

// version (1) || scheme id (1) || flag (1) || count (4, BE) ||
// count x length-prefixed Paillier values || optional length-prefixed AE.
Bytes serialize(const CondCiphertext& c);
// Throws MalformedError on any framing problem.
CondCiphertext deserialize_ciphertext(std::span<const std::uint8_t> b);

}  // namespace condenc
