#pragma once

#include <span>

#include <gmpxx.h>

#include "condenc/random.hpp"

namespace condenc::paillier {

struct PublicKey {
  mpz_class N;
  mpz_class g;          // always N + 1
  mpz_class n_squared;

  static PublicKey from_modulus(const mpz_class& N);
  // Fixed byte width of a ciphertext, ceil(log2 N^2) / 8.
  std::size_t ciphertext_width() const;

  Bytes serialize() const;
  static PublicKey deserialize(std::span<const std::uint8_t> b);

  friend bool operator==(const PublicKey& a, const PublicKey& b) { return a.N == b.N; }
};

struct SecretKey {
  mpz_class p, q;
  mpz_class beta;      // lcm(p-1, q-1)
  mpz_class mu;        // phi(N)^-1 mod N
  mpz_class beta_inv;  // beta^-1 mod N, what decryption actually multiplies by

  Bytes serialize() const;  // p and q, each length-prefixed
  static SecretKey deserialize(std::span<const std::uint8_t> b);
};

struct KeyPair {
  PublicKey pk;
  SecretKey sk;
};

struct Ciphertext {
  mpz_class value;

  Bytes serialize() const;
  static Ciphertext deserialize(std::span<const std::uint8_t> b);

  friend bool operator==(const Ciphertext& a, const Ciphertext& b) {
    return a.value == b.value;
  }
};

// Samples primes until min(p, q) > min_prime_bound, N >= require_N_at_least,
// p != q and gcd(N, (p-1)(q-1)) = 1. N has exactly `bits` bits.
// Throws ParameterError when the bounds cannot be met at this size.
KeyPair keygen(unsigned bits, const mpz_class& min_prime_bound,
               const mpz_class& require_N_at_least, Rng& rng);

// Builds the key pair for explicit primes (used by toy-scale tests).
KeyPair key_from_primes(const mpz_class& p, const mpz_class& q);

mpz_class sample_nonce(const PublicKey& pk, Rng& rng);

Ciphertext enc(const PublicKey& pk, const mpz_class& m, const mpz_class& r);
Ciphertext enc(const PublicKey& pk, const mpz_class& m, Rng& rng);
mpz_class dec(const SecretKey& sk, const PublicKey& pk, const Ciphertext& c);

Ciphertext add(const PublicKey& pk, const Ciphertext& c1, const Ciphertext& c2);
Ciphertext sub(const PublicKey& pk, const Ciphertext& c1, const Ciphertext& c2);
Ciphertext scalar_mul(const PublicKey& pk, const mpz_class& k, const Ciphertext& c);

// (1 + N)^e mod N^2 for any integer e, via (1 + N)^e = 1 + eN.
mpz_class g_pow(const PublicKey& pk, const mpz_class& e);

}  // namespace condenc::paillier
