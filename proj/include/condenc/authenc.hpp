#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "condenc/random.hpp"

namespace condenc {

using AeKey = std::array<std::uint8_t, 16>;

// AES-128-GCM plus a key-commitment block SHA-256(domain || K || nonce).
// The commitment is checked before the tag, so decrypting under a wrong key
// fails even for tags that happen to verify under several keys.
struct AeCiphertext {
  static constexpr std::size_t kNonceLen = 12;
  static constexpr std::size_t kCommitLen = 32;
  static constexpr std::size_t kTagLen = 16;
  static constexpr std::size_t kOverhead = kNonceLen + kCommitLen + kTagLen;

  std::array<std::uint8_t, kNonceLen> nonce{};
  std::array<std::uint8_t, kCommitLen> commitment{};
  Bytes body;
  std::array<std::uint8_t, kTagLen> tag{};

  std::size_t size() const { return kOverhead + body.size(); }
  // nonce || commitment || body || tag
  Bytes serialize() const;
  static std::optional<AeCiphertext> parse(std::span<const std::uint8_t> b);
};

AeKey random_ae_key(Rng& rng);

AeCiphertext auth_enc(const AeKey& key, std::span<const std::uint8_t> m, Rng& rng);
std::optional<Bytes> auth_dec(const AeKey& key, const AeCiphertext& c);
// Parses then decrypts; malformed or truncated input is rejected in-band.
std::optional<Bytes> auth_dec(const AeKey& key, std::span<const std::uint8_t> c);

// Raw AES-128-GCM without the commitment block; returns nonce || body || tag.
Bytes gcm_seal(const AeKey& key, std::span<const std::uint8_t> m, Rng& rng);
std::optional<Bytes> gcm_open(const AeKey& key, std::span<const std::uint8_t> c);

}  // namespace condenc
