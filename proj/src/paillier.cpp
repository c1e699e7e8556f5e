#include "condenc/paillier.hpp"

#include "condenc/bigint.hpp"
#include "condenc/errors.hpp"

namespace condenc::paillier {

namespace {

constexpr int kPrimeReps = 40;  // error <= 4^-40 = 2^-80

bool is_prime(const mpz_class& v) {
  return mpz_probab_prime_p(v.get_mpz_t(), kPrimeReps) != 0;
}

// Random prime of exactly `bits` bits with the top two bits set, so the
// product of two such primes has exactly the sum of their sizes.
mpz_class random_prime(unsigned bits, Rng& rng) {
  for (;;) {
    mpz_class c = rng.random_bits(bits);
    mpz_setbit(c.get_mpz_t(), bits - 1);
    mpz_setbit(c.get_mpz_t(), bits - 2);
    mpz_setbit(c.get_mpz_t(), 0);
    if (is_prime(c)) return c;
  }
}

void check_ciphertext(const PublicKey& pk, const Ciphertext& c) {
  if (c.value <= 0 || c.value >= pk.n_squared)
    throw DomainError("ciphertext outside (0, N^2)");
}

}  // namespace

PublicKey PublicKey::from_modulus(const mpz_class& N) {
  if (N < 15 || mpz_even_p(N.get_mpz_t())) throw DomainError("invalid Paillier modulus");
  return PublicKey{N, N + 1, N * N};
}

std::size_t PublicKey::ciphertext_width() const { return byte_length(n_squared); }

Bytes PublicKey::serialize() const {
  Bytes out;
  put_prefixed_int(out, N);
  return out;
}

PublicKey PublicKey::deserialize(std::span<const std::uint8_t> b) {
  ByteReader r(b);
  mpz_class N = r.prefixed_int();
  if (!r.done()) throw MalformedError("trailing bytes after public key");
  try {
    return from_modulus(N);
  } catch (const DomainError& e) {
    throw MalformedError(e.what());
  }
}

Bytes SecretKey::serialize() const {
  Bytes out;
  put_prefixed_int(out, p);
  put_prefixed_int(out, q);
  return out;
}

SecretKey SecretKey::deserialize(std::span<const std::uint8_t> b) {
  ByteReader r(b);
  mpz_class p = r.prefixed_int();
  mpz_class q = r.prefixed_int();
  if (!r.done()) throw MalformedError("trailing bytes after secret key");
  try {
    return key_from_primes(p, q).sk;
  } catch (const DomainError& e) {
    throw MalformedError(e.what());
  }
}

Bytes Ciphertext::serialize() const {
  Bytes out;
  put_prefixed_int(out, value);
  return out;
}

Ciphertext Ciphertext::deserialize(std::span<const std::uint8_t> b) {
  ByteReader r(b);
  Ciphertext c{r.prefixed_int()};
  if (!r.done()) throw MalformedError("trailing bytes after ciphertext");
  return c;
}

KeyPair key_from_primes(const mpz_class& p, const mpz_class& q) {
  if (p < 2 || q < 2 || p == q) throw DomainError("need two distinct primes");
  const mpz_class N = p * q;
  const mpz_class pm1 = p - 1, qm1 = q - 1;
  const mpz_class phi = pm1 * qm1;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), N.get_mpz_t(), phi.get_mpz_t());
  if (g != 1) throw DomainError("gcd(N, phi(N)) != 1");
  mpz_class beta;
  mpz_lcm(beta.get_mpz_t(), pm1.get_mpz_t(), qm1.get_mpz_t());
  SecretKey sk{p, q, beta, invert(phi, N), invert(beta, N)};
  return KeyPair{PublicKey::from_modulus(N), sk};
}

KeyPair keygen(unsigned bits, const mpz_class& min_prime_bound,
               const mpz_class& require_N_at_least, Rng& rng) {
  if (bits < 16) throw ParameterError("modulus must have at least 16 bits");
  const unsigned p_bits = (bits + 1) / 2;
  const unsigned q_bits = bits / 2;
  // Largest prime we can produce for q is below 2^q_bits.
  if (min_prime_bound >= pow2(q_bits) - 1)
    throw ParameterError("min_prime_bound not achievable with a " +
                         std::to_string(bits) + "-bit modulus");
  if (require_N_at_least >= pow2(bits))
    throw ParameterError("require_N_at_least exceeds a " + std::to_string(bits) +
                         "-bit modulus");
  for (;;) {
    mpz_class p = random_prime(p_bits, rng);
    mpz_class q = random_prime(q_bits, rng);
    if (p == q) continue;
    if (p <= min_prime_bound || q <= min_prime_bound) continue;
    if (p * q < require_N_at_least) continue;
    try {
      return key_from_primes(p, q);
    } catch (const DomainError&) {
      continue;
    }
  }
}

mpz_class sample_nonce(const PublicKey& pk, Rng& rng) {
  for (;;) {
    mpz_class r = rng.uniform_below(pk.N);
    if (r == 0) continue;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), pk.N.get_mpz_t());
    if (g == 1) return r;
  }
}

mpz_class g_pow(const PublicKey& pk, const mpz_class& e) {
  mpz_class em = e % pk.N;
  if (em < 0) em += pk.N;
  mpz_class v = (1 + em * pk.N) % pk.n_squared;
  return v;
}

Ciphertext enc(const PublicKey& pk, const mpz_class& m, const mpz_class& r) {
  if (m < 0 || m >= pk.N) throw DomainError("plaintext outside Z_N");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), pk.N.get_mpz_t());
  if (r <= 0 || r >= pk.N || g != 1) throw NonceError("nonce not in Z*_N");
  return Ciphertext{(g_pow(pk, m) * powm(r, pk.N, pk.n_squared)) % pk.n_squared};
}

Ciphertext enc(const PublicKey& pk, const mpz_class& m, Rng& rng) {
  return enc(pk, m, sample_nonce(pk, rng));
}

mpz_class dec(const SecretKey& sk, const PublicKey& pk, const Ciphertext& c) {
  check_ciphertext(pk, c);
  mpz_class u = powm(c.value, sk.beta, pk.n_squared);
  mpz_class l = (u - 1) / pk.N;
  return (l * sk.beta_inv) % pk.N;
}

Ciphertext add(const PublicKey& pk, const Ciphertext& c1, const Ciphertext& c2) {
  check_ciphertext(pk, c1);
  check_ciphertext(pk, c2);
  return Ciphertext{(c1.value * c2.value) % pk.n_squared};
}

Ciphertext sub(const PublicKey& pk, const Ciphertext& c1, const Ciphertext& c2) {
  check_ciphertext(pk, c1);
  check_ciphertext(pk, c2);
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), c2.value.get_mpz_t(), pk.n_squared.get_mpz_t()) == 0)
    throw MalformedError("subtrahend ciphertext is not invertible mod N^2");
  return Ciphertext{(c1.value * inv) % pk.n_squared};
}

Ciphertext scalar_mul(const PublicKey& pk, const mpz_class& k, const Ciphertext& c) {
  check_ciphertext(pk, c);
  if (k < 0 || k >= pk.N) throw DomainError("scalar outside Z_N");
  return Ciphertext{powm(c.value, k, pk.n_squared)};
}

}  // namespace condenc::paillier
