#pragma once

#include <cstdint>
#include <vector>

#include "condenc/authenc.hpp"
#include "condenc/gf2.hpp"
#include "condenc/scheme.hpp"
#include "condenc/secretshare.hpp"

namespace condenc {

// Counters filled in by HammingScheme::dec for flag-1 input.
struct HammingStats {
  std::uint64_t subsets = 0;                 // recovery sets actually tried
  std::uint64_t small_field_recoveries = 0;  // GF(2^32) zero-secret checks
  std::uint64_t large_field_recoveries = 0;  // GF(2^128) key recoveries
  std::uint64_t ae_attempts = 0;
};

// What CEnc sampled internally; exposed so tests can check share congruence.
struct HammingTrace {
  AeKey key{};
  std::vector<Share<gf2::Gf128>> key_shares;
  std::vector<Share<gf2::Gf32>> zero_shares;  // empty without dual-field shares
};

// Padded Hamming distance <= ell. One Paillier slot per padded character;
// CEnc hides a Shamir sharing (threshold n - ell) of a fresh AE key in the
// slots, so only positions where m1 and m2 agree yield valid shares.
class HammingScheme final : public Scheme {
 public:
  explicit HammingScheme(SchemeParams params);

  SchemeId id() const override { return SchemeId::hamming; }
  std::size_t ell() const { return params_.predicate.ell; }
  std::size_t threshold() const { return params_.n - ell(); }
  // REnc payload width: lambda, plus 32 with dual-field shares.
  unsigned payload_bits() const;

  mpz_class min_prime_bound() const override;
  mpz_class min_modulus() const override;
  bool predicate(std::string_view m1, std::string_view m2) const override;
  std::size_t enc_slots() const override { return params_.n; }
  std::size_t cenc_slots() const override { return params_.n; }
  std::size_t ae_size() const override { return AeCiphertext::kOverhead + params_.n + 1; }

  using Scheme::dec;
  std::optional<std::string> dec(const paillier::SecretKey& sk, const paillier::PublicKey& pk,
                                 const CondCiphertext& c, HammingStats& stats) const;

  std::optional<CondCiphertext> cenc_traced(const paillier::PublicKey& pk,
                                            const CondCiphertext& c, std::string_view m2,
                                            std::string_view m3, Rng& rng,
                                            HammingTrace& trace) const;

  struct Recovered {
    std::vector<gf2::Gf128::elem> key_shares;
    std::vector<gf2::Gf32::elem> zero_shares;
  };
  Recovered recover_shares(const paillier::SecretKey& sk, const paillier::PublicKey& pk,
                           std::span<const mpz_class> c) const;

 protected:
  std::vector<mpz_class> enc_values(const paillier::PublicKey& pk, std::string_view m,
                                    Rng& rng) const override;
  std::optional<Body> cenc_body(const paillier::PublicKey& pk, std::span<const mpz_class> c,
                                std::string_view m2, std::string_view m3,
                                Rng& rng) const override;
  std::optional<std::string> dec_flag0(const paillier::SecretKey& sk,
                                       const paillier::PublicKey& pk,
                                       std::span<const mpz_class> c) const override;
  std::optional<std::string> dec_flag1(const paillier::SecretKey& sk,
                                       const paillier::PublicKey& pk,
                                       std::span<const mpz_class> c,
                                       const std::optional<Bytes>& ae) const override;

 private:
  std::optional<Body> cenc_impl(const paillier::PublicKey& pk, std::span<const mpz_class> c,
                                std::string_view m2, std::string_view m3, Rng& rng,
                                HammingTrace* trace) const;
  std::optional<std::string> dec_impl(const paillier::SecretKey& sk,
                                      const paillier::PublicKey& pk,
                                      std::span<const mpz_class> c, const Bytes& ae,
                                      HammingStats& stats) const;
  std::optional<std::string> search(const Recovered& shares, const AeCiphertext& ae,
                                    HammingStats& stats) const;
};

}  // namespace condenc
