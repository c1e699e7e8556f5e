#pragma once

#include <memory>
#include <vector>

#include "condenc/scheme.hpp"

namespace condenc {

// OR composition over members that share one Paillier key. Payloads are
// the members' payloads concatenated in member order; Dec returns the
// answer of the highest-index member that does not reject.
class OrScheme final : public Scheme {
 public:
  OrScheme(SchemeParams params, std::vector<std::unique_ptr<Scheme>> members);

  // Members [CAPSLOCK, Hamming(2, n), ED1].
  static std::unique_ptr<OrScheme> typo(const SchemeParams& params);

  SchemeId id() const override { return SchemeId::typo; }
  mpz_class min_prime_bound() const override;
  mpz_class min_modulus() const override;
  bool predicate(std::string_view m1, std::string_view m2) const override;
  std::size_t enc_slots() const override;
  std::size_t cenc_slots() const override;
  std::size_t ae_size() const override;
  std::size_t member_count() const override { return members_.size(); }

  const Scheme& member(std::size_t i) const { return *members_.at(i); }

  // Per-member Dec results in member order, for inspection.
  std::vector<std::optional<std::string>> dec_members(const paillier::SecretKey& sk,
                                                      const paillier::PublicKey& pk,
                                                      const CondCiphertext& c) const;

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
  Body sim_body(const paillier::PublicKey& pk, Rng& rng) const override;

 private:
  std::vector<std::optional<std::string>> run_members(const paillier::SecretKey& sk,
                                                      const paillier::PublicKey& pk,
                                                      std::uint8_t flag,
                                                      std::span<const mpz_class> c,
                                                      const std::optional<Bytes>& ae) const;

  std::vector<std::unique_ptr<Scheme>> members_;
};

}  // namespace condenc
