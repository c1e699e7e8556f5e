#pragma once

#include "condenc/scheme.hpp"

namespace condenc {

// Equality scheme; with `capslock` set, CEnc tests m1 against InvertCase(m2)
// and everything else is shared.
class EqualityScheme final : public Scheme {
 public:
  EqualityScheme(SchemeParams params, bool capslock);

  SchemeId id() const override { return capslock_ ? SchemeId::capslock : SchemeId::equality; }
  mpz_class min_prime_bound() const override;
  bool predicate(std::string_view m1, std::string_view m2) const override;
  std::size_t enc_slots() const override { return 1; }
  std::size_t cenc_slots() const override { return 1; }

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
  bool capslock_;
};

// Bound for schemes that place a whole to_int value in one slot:
// max(|Sigma|^(n+1), (|Sigma|+1)^n).
mpz_class string_slot_prime_bound(const SchemeParams& params);

}  // namespace condenc
