#pragma once

#include "condenc/scheme.hpp"

namespace condenc {

// Edit distance one (single insertion or deletion). Enc stores to_int of m
// and of every single-deletion m_{-i}; CEnc runs the equality test 2n+1
// times so that a match on either side of the deletion is caught.
class EditDistanceScheme final : public Scheme {
 public:
  explicit EditDistanceScheme(SchemeParams params);

  SchemeId id() const override { return SchemeId::edit_dist_1; }
  mpz_class min_prime_bound() const override;
  bool predicate(std::string_view m1, std::string_view m2) const override;
  std::size_t enc_slots() const override { return params_.n + 1; }
  std::size_t cenc_slots() const override { return 2 * params_.n + 1; }

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
};

}  // namespace condenc
