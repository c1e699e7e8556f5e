#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "condenc/authenc.hpp"

namespace condenc {

// fast: PBKDF2-HMAC-SHA256, 1000 iterations (tests, demos).
// mhf:  Argon2id, 3 passes over 64 MiB.
enum class KdfProfile { fast, mhf };

std::string to_string(KdfProfile p);
KdfProfile parse_kdf_profile(std::string_view s);

inline constexpr std::size_t kSaltLen = 16;

AeKey pkdf(std::string_view pwd, std::span<const std::uint8_t> salt, KdfProfile profile);

}  // namespace condenc
