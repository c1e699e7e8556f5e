#pragma once

#include <optional>
#include <span>

#include "condenc/random.hpp"

namespace condenc::legacy {

// Hybrid public-key encryption over P-256 (ECDH + AES-128-GCM), the kind of
// ordinary PKE the original typo vault used for its waitlist.
struct KeyPair {
  Bytes pk;  // compressed point, 33 bytes
  Bytes sk;  // scalar, 32 bytes
};

inline constexpr std::size_t kPointLen = 33;
inline constexpr std::size_t kScalarLen = 32;
inline constexpr std::size_t kOverhead = kPointLen + 12 + 16;

KeyPair keygen(Rng& rng);
// Ephemeral point || nonce || body || tag.
Bytes encrypt(std::span<const std::uint8_t> pk, std::span<const std::uint8_t> m, Rng& rng);
std::optional<Bytes> decrypt(std::span<const std::uint8_t> sk, std::span<const std::uint8_t> c);
// Whether sk is the scalar behind pk.
bool matches(std::span<const std::uint8_t> sk, std::span<const std::uint8_t> pk);

}  // namespace condenc::legacy
