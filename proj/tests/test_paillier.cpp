#include <doctest.h>

#include <set>

#include "condenc/bigint.hpp"
#include "condenc/errors.hpp"
#include "condenc/paillier.hpp"
#include "helpers.hpp"

using namespace condenc;
using namespace condenc::paillier;

namespace {

const KeyPair& key35() {
  static const KeyPair kp = key_from_primes(5, 7);
  return kp;
}

std::uint64_t u64(const mpz_class& v) { return v.get_ui(); }

}  // namespace

TEST_CASE("paillier: key from primes 5 and 7") {
  const auto& kp = key35();
  CHECK(kp.pk.N == 35);
  CHECK(kp.pk.g == 36);
  CHECK(kp.pk.n_squared == 1225);
  CHECK(kp.sk.beta == 12);
  CHECK((kp.sk.mu * 24) % 35 == 1);
}

TEST_CASE("paillier: enc(0, r=1) is 1") {
  CHECK(enc(key35().pk, 0, 1).value == 1);
}

TEST_CASE("paillier: enc(4, r=2) at N=35 matches a 64-bit oracle") {
  const std::uint64_t want = th::mulmod(th::powmod(36, 4, 1225), th::powmod(2, 35, 1225), 1225);
  CHECK(u64(enc(key35().pk, 4, 2).value) == want);
}

TEST_CASE("paillier: binomial identity (1+N)^i = 1 + N*i mod N^2 for all i in Z_35") {
  for (std::uint64_t i = 0; i < 35; ++i) {
    CHECK(th::powmod(36, i, 1225) == (1 + 35 * i) % 1225);
    CHECK(u64(g_pow(key35().pk, i)) == (1 + 35 * i) % 1225);
  }
}

TEST_CASE("paillier: exhaustive roundtrip and bijectivity at N=35") {
  const auto& [pk, sk] = key35();
  std::set<std::uint64_t> seen;
  for (std::uint64_t r = 1; r < 35; ++r) {
    if (th::gcd_u64(r, 35) != 1) continue;
    for (std::uint64_t m = 0; m < 35; ++m) {
      const auto c = enc(pk, m, r);
      const std::uint64_t want =
          th::mulmod(th::powmod(36, m, 1225), th::powmod(r, 35, 1225), 1225);
      REQUIRE(u64(c.value) == want);
      REQUIRE(dec(sk, pk, c) == m);
      seen.insert(want);
    }
  }
  // |Z*_1225| = phi(1225) = 840 and the map hits each unit once.
  CHECK(seen.size() == 840);
  for (std::uint64_t v : seen) CHECK(th::gcd_u64(v, 1225) == 1);
}

TEST_CASE("paillier: homomorphic laws exhaustively at N=35") {
  const auto& [pk, sk] = key35();
  for (std::uint64_t a = 0; a < 35; ++a) {
    const auto ca = enc(pk, a, 2);
    CHECK(dec(sk, pk, scalar_mul(pk, 0, ca)) == 0);
    CHECK(dec(sk, pk, scalar_mul(pk, 1, ca)) == a);
    for (std::uint64_t b = 0; b < 35; ++b) {
      const auto cb = enc(pk, b, 3);
      REQUIRE(dec(sk, pk, add(pk, ca, cb)) == (a + b) % 35);
      REQUIRE(dec(sk, pk, sub(pk, ca, cb)) == (a + 35 - b) % 35);
      REQUIRE(dec(sk, pk, scalar_mul(pk, b, ca)) == (a * b) % 35);
    }
  }
}

TEST_CASE("paillier: small examples") {
  SeededRng rng(1);
  const auto kp = keygen(128, 0, 0, rng);
  const auto& [pk, sk] = kp;
  CHECK(dec(sk, pk, add(pk, enc(pk, 2, rng), enc(pk, 3, rng))) == 5);
  CHECK(dec(sk, pk, sub(pk, enc(pk, 5, rng), enc(pk, 3, rng))) == 2);
  const auto c = enc(pk, 77, rng);
  CHECK(dec(sk, pk, sub(pk, c, c)) == 0);
  CHECK(dec(sk, pk, add(pk, c, enc(pk, 0, 1))) == 77);
  CHECK(dec(sk, pk, add(pk, enc(pk, pk.N - 1, rng), enc(pk, 1, rng))) == 0);
  CHECK(dec(sk, pk, enc(pk, 0, rng)) == 0);
}

TEST_CASE("paillier: random roundtrips at 512 bits") {
  SeededRng rng(2);
  const auto kp = keygen(512, 0, 0, rng);
  for (int i = 0; i < 1000; ++i) {
    const mpz_class m = rng.uniform_below(kp.pk.N);
    const mpz_class r = sample_nonce(kp.pk, rng);
    REQUIRE(dec(kp.sk, kp.pk, enc(kp.pk, m, r)) == m);
  }
  const mpz_class a = rng.uniform_below(kp.pk.N), b = rng.uniform_below(kp.pk.N);
  const auto ca = enc(kp.pk, a, rng), cb = enc(kp.pk, b, rng);
  CHECK(dec(kp.sk, kp.pk, add(kp.pk, ca, cb)) == (a + b) % kp.pk.N);
  CHECK(dec(kp.sk, kp.pk, scalar_mul(kp.pk, b, ca)) == (a * b) % kp.pk.N);
}

TEST_CASE("paillier: keygen invariants") {
  SeededRng rng(3);
  SUBCASE("16-bit toy key") {
    const auto kp = keygen(16, 0, 0, rng);
    CHECK(kp.sk.p * kp.sk.q == kp.pk.N);
    CHECK(bit_length(kp.pk.N) >= 15);
    CHECK(bit_length(kp.pk.N) <= 17);
    CHECK(th::is_prime_u64(kp.sk.p.get_ui()));
    CHECK(th::is_prime_u64(kp.sk.q.get_ui()));
  }
  SUBCASE("prime and modulus bounds, checked with an independent primality oracle") {
    const mpz_class bound = pow2(40), need = pow2(80);
    for (int i = 0; i < 5; ++i) {
      const auto kp = keygen(128, bound, need, rng);
      CHECK(kp.sk.p > bound);
      CHECK(kp.sk.q > bound);
      CHECK(kp.pk.N >= need);
      REQUIRE(kp.sk.p.fits_ulong_p());
      REQUIRE(kp.sk.q.fits_ulong_p());
      CHECK(th::is_prime_u64(kp.sk.p.get_ui()));
      CHECK(th::is_prime_u64(kp.sk.q.get_ui()));
      mpz_class phi = (kp.sk.p - 1) * (kp.sk.q - 1), g;
      mpz_gcd(g.get_mpz_t(), kp.pk.N.get_mpz_t(), phi.get_mpz_t());
      CHECK(g == 1);
      CHECK((kp.sk.mu * phi) % kp.pk.N == 1);
      CHECK(kp.pk.g == kp.pk.N + 1);
    }
  }
  SUBCASE("1024 bits with the n=32 byte-alphabet bound") {
    mpz_class bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), 256, 33);
    const auto kp = keygen(1024, bound, 0, rng);
    CHECK(kp.sk.p > bound);
    CHECK(kp.sk.q > bound);
    CHECK(bit_length(kp.pk.N) == 1024);
  }
  SUBCASE("unsatisfiable bounds") {
    // A 64-bit modulus has 32-bit primes, and its N stays below 2^64.
    CHECK_THROWS_AS(keygen(64, pow2(40), 0, rng), ParameterError);
    CHECK_THROWS_AS(keygen(64, 0, pow2(80), rng), ParameterError);
    CHECK_THROWS_AS(keygen(8, 0, 0, rng), ParameterError);
  }
}

TEST_CASE("paillier: domain errors") {
  const auto& [pk, sk] = key35();
  CHECK_THROWS_AS(enc(pk, 35, 1), DomainError);
  CHECK_THROWS_AS(enc(pk, -1, 1), DomainError);
  CHECK_THROWS_AS(enc(pk, 1, 5), NonceError);
  CHECK_THROWS_AS(enc(pk, 1, 0), NonceError);
  CHECK_THROWS_AS(dec(sk, pk, Ciphertext{0}), DomainError);
  CHECK_THROWS_AS(dec(sk, pk, Ciphertext{1225}), DomainError);
  CHECK_THROWS_AS(sub(pk, enc(pk, 1, 1), Ciphertext{5}), MalformedError);
  CHECK_THROWS_AS(scalar_mul(pk, 35, enc(pk, 1, 1)), DomainError);
}

TEST_CASE("paillier: serialization") {
  SeededRng rng(4);
  const auto kp = keygen(256, 0, 0, rng);
  const Bytes pkb = kp.pk.serialize();
  // len(N) || N, big-endian, minimal.
  const Bytes nb = to_bytes(kp.pk.N);
  REQUIRE(pkb.size() == 4 + nb.size());
  CHECK(pkb[3] == nb.size());
  CHECK(Bytes(pkb.begin() + 4, pkb.end()) == nb);
  CHECK(PublicKey::deserialize(pkb) == kp.pk);

  const auto sk2 = SecretKey::deserialize(kp.sk.serialize());
  CHECK(sk2.p == kp.sk.p);
  CHECK(sk2.beta == kp.sk.beta);
  CHECK(sk2.mu == kp.sk.mu);

  const auto c = enc(kp.pk, 12345, rng);
  CHECK(Ciphertext::deserialize(c.serialize()) == c);
  CHECK(c.serialize() == Ciphertext{c.value}.serialize());
  Bytes bad = c.serialize();
  bad.push_back(0);
  CHECK_THROWS_AS(Ciphertext::deserialize(bad), MalformedError);
}
