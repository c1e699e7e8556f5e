#include "condenc/equality.hpp"

#include "condenc/encoding.hpp"

namespace condenc {

mpz_class string_slot_prime_bound(const SchemeParams& params) {
  const mpz_class a = params.alphabet.power_bound(params.n);
  const mpz_class b = params.alphabet.codomain_bound(params.n);
  return a > b ? a : b;
}

EqualityScheme::EqualityScheme(SchemeParams params, bool capslock)
    : Scheme(std::move(params)), capslock_(capslock) {}

mpz_class EqualityScheme::min_prime_bound() const { return string_slot_prime_bound(params_); }

bool EqualityScheme::predicate(std::string_view m1, std::string_view m2) const {
  return capslock_ ? p_capslock(m1, m2) : p_eq(m1, m2);
}

std::vector<mpz_class> EqualityScheme::enc_values(const paillier::PublicKey& pk,
                                                  std::string_view m, Rng& rng) const {
  return {paillier::enc(pk, to_int(m, params_.alphabet), rng).value};
}

std::optional<Scheme::Body> EqualityScheme::cenc_body(const paillier::PublicKey& pk,
                                                      std::span<const mpz_class> c,
                                                      std::string_view m2, std::string_view m3,
                                                      Rng& rng) const {
  const std::string control = capslock_ ? invert_case(m2) : std::string(m2);
  auto v = cond_slot(pk, c[0], to_int(control, params_.alphabet), to_int(m3, params_.alphabet),
                     rng);
  if (!v) return std::nullopt;
  return Body{{std::move(*v)}, std::nullopt};
}

std::optional<std::string> EqualityScheme::dec_flag0(const paillier::SecretKey& sk,
                                                     const paillier::PublicKey& pk,
                                                     std::span<const mpz_class> c) const {
  return from_int_string(paillier::dec(sk, pk, {c[0]}), params_.alphabet, params_.n);
}

std::optional<std::string> EqualityScheme::dec_flag1(const paillier::SecretKey& sk,
                                                     const paillier::PublicKey& pk,
                                                     std::span<const mpz_class> c,
                                                     const std::optional<Bytes>&) const {
  return from_int_string(paillier::dec(sk, pk, {c[0]}), params_.alphabet, params_.n);
}

}  // namespace condenc
