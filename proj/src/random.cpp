#include "condenc/random.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

#include <sodium.h>

#include "condenc/errors.hpp"

namespace condenc {

namespace {

void ensure_sodium() {
  static const bool ok = sodium_init() >= 0;
  if (!ok) throw Error("libsodium initialisation failed");
}

}  // namespace

std::uint64_t Rng::next_u64() {
  std::uint8_t b[8];
  fill(b, sizeof(b));
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | b[i];
  return v;
}

std::uint64_t Rng::uniform(std::uint64_t bound) {
  if (bound == 0) throw DomainError("uniform: zero bound");
  const std::uint64_t limit = max() - (max() % bound + 1) % bound;
  for (;;) {
    std::uint64_t v = next_u64();
    if (v <= limit) return v % bound;
  }
}

mpz_class Rng::random_bits(unsigned bits) {
  if (bits == 0) return 0;
  Bytes buf((bits + 7) / 8);
  fill(buf.data(), buf.size());
  unsigned extra = static_cast<unsigned>(buf.size() * 8 - bits);
  buf[0] &= static_cast<std::uint8_t>(0xFF >> extra);
  mpz_class v;
  mpz_import(v.get_mpz_t(), buf.size(), 1, 1, 1, 0, buf.data());
  return v;
}

mpz_class Rng::uniform_below(const mpz_class& bound) {
  if (bound <= 0) throw DomainError("uniform_below: non-positive bound");
  const unsigned bits = static_cast<unsigned>(mpz_sizeinbase(bound.get_mpz_t(), 2));
  for (;;) {
    mpz_class v = random_bits(bits);
    if (v < bound) return v;
  }
}

Bytes Rng::bytes(std::size_t len) {
  Bytes out(len);
  if (len) fill(out.data(), len);
  return out;
}

SystemRng::SystemRng() { ensure_sodium(); }

void SystemRng::fill(std::uint8_t* out, std::size_t len) {
  randombytes_buf(out, len);
}

SeededRng::SeededRng(std::uint64_t seed) {
  ensure_sodium();
  std::uint8_t s[8];
  for (int i = 0; i < 8; ++i) s[i] = static_cast<std::uint8_t>(seed >> (8 * i));
  static const char kDomain[] = "condenc seeded rng v1";
  crypto_generichash(key_, sizeof(key_), s, sizeof(s),
                     reinterpret_cast<const unsigned char*>(kDomain),
                     sizeof(kDomain) - 1);
}

void SeededRng::refill() {
  static const std::uint8_t nonce[crypto_stream_chacha20_ietf_NONCEBYTES] = {0};
  std::memset(buf_, 0, sizeof(buf_));
  crypto_stream_chacha20_ietf_xor_ic(buf_, buf_, sizeof(buf_), nonce,
                                     static_cast<std::uint32_t>(block_), key_);
  block_ += sizeof(buf_) / 64;
  pos_ = 0;
}

void SeededRng::fill(std::uint8_t* out, std::size_t len) {
  while (len) {
    if (pos_ == sizeof(buf_)) refill();
    std::size_t take = std::min(len, sizeof(buf_) - pos_);
    std::memcpy(out, buf_ + pos_, take);
    pos_ += take;
    out += take;
    len -= take;
  }
}

std::unique_ptr<Rng> rng_from_env() {
  const char* s = std::getenv("CONDENC_SEED");
  if (s && *s) {
    try {
      return std::make_unique<SeededRng>(std::stoull(s, nullptr, 0));
    } catch (const std::exception&) {
      throw InputError("CONDENC_SEED is not an unsigned integer");
    }
  }
  return std::make_unique<SystemRng>();
}

}  // namespace condenc
