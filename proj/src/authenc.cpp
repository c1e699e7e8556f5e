#include "condenc/authenc.hpp"

#include <cstring>
#include <memory>

#include <openssl/crypto.h>
#include <openssl/evp.h>

#include "condenc/errors.hpp"

namespace condenc {

namespace {

using CtxPtr = std::unique_ptr<EVP_CIPHER_CTX, decltype(&EVP_CIPHER_CTX_free)>;

CtxPtr new_ctx() {
  CtxPtr ctx(EVP_CIPHER_CTX_new(), &EVP_CIPHER_CTX_free);
  if (!ctx) throw Error("EVP_CIPHER_CTX_new failed");
  return ctx;
}

void gcm_encrypt(const AeKey& key, const std::uint8_t* nonce, std::span<const std::uint8_t> m,
                 std::uint8_t* body, std::uint8_t* tag) {
  auto ctx = new_ctx();
  int len = 0;
  if (EVP_EncryptInit_ex(ctx.get(), EVP_aes_128_gcm(), nullptr, key.data(), nonce) != 1 ||
      EVP_EncryptUpdate(ctx.get(), body, &len, m.data(), static_cast<int>(m.size())) != 1 ||
      EVP_EncryptFinal_ex(ctx.get(), body + len, &len) != 1 ||
      EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_GET_TAG, AeCiphertext::kTagLen, tag) != 1)
    throw Error("AES-GCM encryption failed");
}

bool gcm_decrypt(const AeKey& key, const std::uint8_t* nonce,
                 std::span<const std::uint8_t> body, const std::uint8_t* tag,
                 std::uint8_t* out) {
  auto ctx = new_ctx();
  int len = 0;
  std::uint8_t tag_copy[AeCiphertext::kTagLen];
  std::memcpy(tag_copy, tag, sizeof(tag_copy));
  if (EVP_DecryptInit_ex(ctx.get(), EVP_aes_128_gcm(), nullptr, key.data(), nonce) != 1 ||
      EVP_DecryptUpdate(ctx.get(), out, &len, body.data(), static_cast<int>(body.size())) != 1 ||
      EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_SET_TAG, sizeof(tag_copy), tag_copy) != 1)
    return false;
  return EVP_DecryptFinal_ex(ctx.get(), out + len, &len) == 1;
}

std::array<std::uint8_t, AeCiphertext::kCommitLen> commit(
    const AeKey& key, const std::array<std::uint8_t, AeCiphertext::kNonceLen>& nonce) {
  static const char kDomain[] = "condenc key commitment v1";
  std::uint8_t buf[sizeof(kDomain) - 1 + 16 + AeCiphertext::kNonceLen];
  std::memcpy(buf, kDomain, sizeof(kDomain) - 1);
  std::memcpy(buf + sizeof(kDomain) - 1, key.data(), key.size());
  std::memcpy(buf + sizeof(kDomain) - 1 + key.size(), nonce.data(), nonce.size());
  std::array<std::uint8_t, AeCiphertext::kCommitLen> out;
  unsigned int len = 0;
  if (EVP_Digest(buf, sizeof(buf), out.data(), &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 failed");
  return out;
}

}  // namespace

Bytes AeCiphertext::serialize() const {
  Bytes out;
  out.reserve(size());
  out.insert(out.end(), nonce.begin(), nonce.end());
  out.insert(out.end(), commitment.begin(), commitment.end());
  out.insert(out.end(), body.begin(), body.end());
  out.insert(out.end(), tag.begin(), tag.end());
  return out;
}

std::optional<AeCiphertext> AeCiphertext::parse(std::span<const std::uint8_t> b) {
  if (b.size() < kOverhead) return std::nullopt;
  AeCiphertext c;
  std::memcpy(c.nonce.data(), b.data(), kNonceLen);
  std::memcpy(c.commitment.data(), b.data() + kNonceLen, kCommitLen);
  c.body.assign(b.begin() + kNonceLen + kCommitLen, b.end() - kTagLen);
  std::memcpy(c.tag.data(), b.data() + b.size() - kTagLen, kTagLen);
  return c;
}

AeKey random_ae_key(Rng& rng) {
  AeKey k;
  rng.fill(k.data(), k.size());
  return k;
}

AeCiphertext auth_enc(const AeKey& key, std::span<const std::uint8_t> m, Rng& rng) {
  AeCiphertext c;
  rng.fill(c.nonce.data(), c.nonce.size());
  c.commitment = commit(key, c.nonce);
  c.body.resize(m.size());
  gcm_encrypt(key, c.nonce.data(), m, c.body.data(), c.tag.data());
  return c;
}

std::optional<Bytes> auth_dec(const AeKey& key, const AeCiphertext& c) {
  const auto expected = commit(key, c.nonce);
  if (CRYPTO_memcmp(expected.data(), c.commitment.data(), expected.size()) != 0)
    return std::nullopt;
  Bytes out(c.body.size() + 16);
  if (!gcm_decrypt(key, c.nonce.data(), c.body, c.tag.data(), out.data())) return std::nullopt;
  out.resize(c.body.size());
  return out;
}

std::optional<Bytes> auth_dec(const AeKey& key, std::span<const std::uint8_t> c) {
  auto parsed = AeCiphertext::parse(c);
  if (!parsed) return std::nullopt;
  return auth_dec(key, *parsed);
}

Bytes gcm_seal(const AeKey& key, std::span<const std::uint8_t> m, Rng& rng) {
  constexpr auto N = AeCiphertext::kNonceLen, T = AeCiphertext::kTagLen;
  Bytes out(N + m.size() + T);
  rng.fill(out.data(), N);
  gcm_encrypt(key, out.data(), m, out.data() + N, out.data() + N + m.size());
  return out;
}

std::optional<Bytes> gcm_open(const AeKey& key, std::span<const std::uint8_t> c) {
  constexpr auto N = AeCiphertext::kNonceLen, T = AeCiphertext::kTagLen;
  if (c.size() < N + T) return std::nullopt;
  auto body = c.subspan(N, c.size() - N - T);
  Bytes out(body.size() + 16);
  if (!gcm_decrypt(key, c.data(), body, c.data() + c.size() - T, out.data()))
    return std::nullopt;
  out.resize(body.size());
  return out;
}

}  // namespace condenc
