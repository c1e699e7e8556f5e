#include "condenc/edit_distance.hpp"

#include "condenc/encoding.hpp"
#include "condenc/equality.hpp"

namespace condenc {

EditDistanceScheme::EditDistanceScheme(SchemeParams params) : Scheme(std::move(params)) {}

mpz_class EditDistanceScheme::min_prime_bound() const { return string_slot_prime_bound(params_); }

bool EditDistanceScheme::predicate(std::string_view m1, std::string_view m2) const {
  return p_ed1(m1, m2);
}

std::vector<mpz_class> EditDistanceScheme::enc_values(const paillier::PublicKey& pk,
                                                      std::string_view m, Rng& rng) const {
  std::vector<mpz_class> out;
  out.reserve(enc_slots());
  for (std::size_t i = 0; i <= params_.n; ++i)
    out.push_back(paillier::enc(pk, to_int(delete_at(m, i), params_.alphabet), rng).value);
  return out;
}

std::optional<Scheme::Body> EditDistanceScheme::cenc_body(const paillier::PublicKey& pk,
                                                          std::span<const mpz_class> c,
                                                          std::string_view m2,
                                                          std::string_view m3,
                                                          Rng& rng) const {
  const auto& a = params_.alphabet;
  const mpz_class payload = to_int(m3, a);
  const mpz_class control = to_int(m2, a);
  Body b;
  b.values.reserve(cenc_slots());
  // Slots 0..n: m1_{-i} against m2 (m2 equals m1, or is m1 minus one character).
  for (std::size_t i = 0; i <= params_.n; ++i) {
    auto v = cond_slot(pk, c[i], control, payload, rng);
    if (!v) return std::nullopt;
    b.values.push_back(std::move(*v));
  }
  // Slots n+1..2n: m1 against m2_{-i} (m2 is m1 plus one character).
  for (std::size_t i = 1; i <= params_.n; ++i) {
    auto v = cond_slot(pk, c[0], to_int(delete_at(m2, i), a), payload, rng);
    if (!v) return std::nullopt;
    b.values.push_back(std::move(*v));
  }
  return b;
}

std::optional<std::string> EditDistanceScheme::dec_flag0(const paillier::SecretKey& sk,
                                                         const paillier::PublicKey& pk,
                                                         std::span<const mpz_class> c) const {
  return from_int_string(paillier::dec(sk, pk, {c[0]}), params_.alphabet, params_.n);
}

std::optional<std::string> EditDistanceScheme::dec_flag1(const paillier::SecretKey& sk,
                                                         const paillier::PublicKey& pk,
                                                         std::span<const mpz_class> c,
                                                         const std::optional<Bytes>&) const {
  mpz_class best = paillier::dec(sk, pk, {c[0]});
  for (std::size_t i = 1; i < c.size(); ++i) {
    mpz_class v = paillier::dec(sk, pk, {c[i]});
    if (v < best) best = std::move(v);
  }
  if (best >= params_.alphabet.codomain_bound(params_.n)) return std::nullopt;
  return from_int_string(best, params_.alphabet, params_.n);
}

}  // namespace condenc
