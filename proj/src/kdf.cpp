#include "condenc/kdf.hpp"

#include <openssl/evp.h>
#include <sodium.h>

#include "condenc/errors.hpp"

namespace condenc {

namespace {

constexpr int kPbkdf2Iterations = 1000;
constexpr unsigned long long kArgonOps = 3;
constexpr std::size_t kArgonMem = 64u << 20;

}  // namespace

std::string to_string(KdfProfile p) { return p == KdfProfile::fast ? "fast" : "mhf"; }

KdfProfile parse_kdf_profile(std::string_view s) {
  if (s == "fast") return KdfProfile::fast;
  if (s == "mhf") return KdfProfile::mhf;
  throw InputError("unknown KDF profile: " + std::string(s));
}

AeKey pkdf(std::string_view pwd, std::span<const std::uint8_t> salt, KdfProfile profile) {
  if (salt.size() != kSaltLen) throw DomainError("salt must be 16 bytes");
  AeKey key;
  if (profile == KdfProfile::fast) {
    if (PKCS5_PBKDF2_HMAC(pwd.data(), static_cast<int>(pwd.size()), salt.data(),
                          static_cast<int>(salt.size()), kPbkdf2Iterations, EVP_sha256(),
                          static_cast<int>(key.size()), key.data()) != 1)
      throw Error("PBKDF2 failed");
    return key;
  }
  if (sodium_init() < 0) throw Error("libsodium initialisation failed");
  if (crypto_pwhash(key.data(), key.size(), pwd.data(), pwd.size(), salt.data(), kArgonOps,
                    kArgonMem, crypto_pwhash_ALG_ARGON2ID13) != 0)
    throw Error("Argon2id failed (out of memory?)");
  return key;
}

}  // namespace condenc
