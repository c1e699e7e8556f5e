#include "condenc/scheme.hpp"

#include "condenc/bigint.hpp"
#include "condenc/edit_distance.hpp"
#include "condenc/equality.hpp"
#include "condenc/errors.hpp"
#include "condenc/hamming.hpp"
#include "condenc/or_scheme.hpp"

namespace condenc {

std::string scheme_name(SchemeId id) {
  switch (id) {
    case SchemeId::equality: return "equality";
    case SchemeId::capslock: return "capslock";
    case SchemeId::hamming: return "hamming";
    case SchemeId::edit_dist_1: return "ed1";
    case SchemeId::typo: return "typo";
  }
  return "unknown";
}

SchemeParams SchemeParams::for_predicate(const PredicateSpec& p, std::size_t n, unsigned bits) {
  SchemeParams s;
  s.predicate = p;
  s.n = (p.kind == PredicateSpec::Kind::hamming || p.kind == PredicateSpec::Kind::typo) ? p.n : n;
  s.modulus_bits = bits;
  return s;
}

void SchemeParams::set_unoptimized() {
  dual_field_shares = false;
  short_password_order = false;
  pair_blocks = false;
}

Scheme::Scheme(SchemeParams params) : params_(std::move(params)) {
  if (params_.n < 1) throw ParameterError("n must be at least 1");
  if (params_.alphabet.size < 2 || params_.alphabet.size > 256)
    throw ParameterError("alphabet size must be in [2, 256]");
  if (params_.lambda != 128) throw ParameterError("lambda must be 128 (AES-128 keys)");
}

paillier::KeyPair Scheme::keygen(Rng& rng) const {
  if (params_.modulus_bits < 1024 && !params_.insecure)
    throw ParameterError("moduli below 1024 bits need the insecure flag");
  return paillier::keygen(params_.modulus_bits, min_prime_bound(), min_modulus(), rng);
}

void Scheme::check_message(std::string_view m) const {
  if (m.size() > params_.n) throw LengthError("message longer than n");
  for (unsigned char ch : m)
    if (ch >= params_.alphabet.size) throw DomainError("character outside the alphabet");
}

CondCiphertext Scheme::enc(const paillier::PublicKey& pk, std::string_view m, Rng& rng) const {
  check_message(m);
  return CondCiphertext{id(), 0, enc_values(pk, m, rng), std::nullopt};
}

bool Scheme::well_formed(const paillier::PublicKey& pk, const CondCiphertext& c) const {
  if (c.scheme != id() || c.flag > 1) return false;
  const std::size_t want = c.flag == 0 ? enc_slots() : cenc_slots();
  if (c.values.size() != want) return false;
  const bool want_ae = c.flag == 1 && ae_size() > 0;
  if (c.ae.has_value() != want_ae) return false;
  if (want_ae && c.ae->size() != ae_size()) return false;
  for (const auto& v : c.values)
    if (v <= 0 || v >= pk.n_squared) return false;
  return true;
}

std::optional<CondCiphertext> Scheme::cenc(const paillier::PublicKey& pk, const CondCiphertext& c,
                                           std::string_view m2, std::string_view m3,
                                           Rng& rng) const {
  check_message(m2);
  check_message(m3);
  if (c.flag != 0 || !well_formed(pk, c)) return std::nullopt;
  auto body = cenc_body(pk, c.values, m2, m3, rng);
  if (!body) return std::nullopt;
  return CondCiphertext{id(), 1, std::move(body->values), std::move(body->ae)};
}

std::optional<std::string> Scheme::dec(const paillier::SecretKey& sk,
                                       const paillier::PublicKey& pk,
                                       const CondCiphertext& c) const {
  if (!well_formed(pk, c)) return std::nullopt;
  if (c.flag == 0) return dec_flag0(sk, pk, c.values);
  return dec_flag1(sk, pk, c.values, c.ae);
}

CondCiphertext Scheme::sim(const paillier::PublicKey& pk, Rng& rng) const {
  Body b = sim_body(pk, rng);
  return CondCiphertext{id(), 1, std::move(b.values), std::move(b.ae)};
}

Scheme::Body Scheme::sim_body(const paillier::PublicKey& pk, Rng& rng) const {
  Body b;
  b.values.reserve(cenc_slots());
  for (std::size_t i = 0; i < cenc_slots(); ++i)
    b.values.push_back(paillier::enc(pk, rng.uniform_below(pk.N), rng).value);
  if (ae_size() > 0) b.ae = rng.bytes(ae_size());
  return b;
}

std::size_t Scheme::payload_size(const paillier::PublicKey& pk, std::uint8_t flag) const {
  const std::size_t slots = flag == 0 ? enc_slots() : cenc_slots();
  return member_count() + slots * pk.ciphertext_width() + (flag == 0 ? 0 : ae_size());
}

std::size_t payload_size(const Scheme& scheme, const paillier::PublicKey& pk,
                         const CondCiphertext& c) {
  return scheme.member_count() + c.values.size() * pk.ciphertext_width() +
         (c.ae ? c.ae->size() : 0);
}

std::optional<mpz_class> cond_slot(const paillier::PublicKey& pk, const mpz_class& c,
                                   const mpz_class& m2, const mpz_class& x, Rng& rng) {
  if (c <= 0 || c >= pk.n_squared) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), pk.N.get_mpz_t());
  if (g != 1) return std::nullopt;
  const mpz_class R = rng.uniform_below(pk.N);
  const mpz_class r = paillier::sample_nonce(pk, rng);
  mpz_class v = powm(c, R, pk.n_squared);
  v = (v * paillier::g_pow(pk, x - R * m2)) % pk.n_squared;
  v = (v * powm(r, pk.N, pk.n_squared)) % pk.n_squared;
  return v;
}

std::unique_ptr<Scheme> make_scheme(const SchemeParams& params) {
  using K = PredicateSpec::Kind;
  switch (params.predicate.kind) {
    case K::equality: return std::make_unique<EqualityScheme>(params, false);
    case K::capslock: return std::make_unique<EqualityScheme>(params, true);
    case K::hamming: return std::make_unique<HammingScheme>(params);
    case K::edit_dist_1: return std::make_unique<EditDistanceScheme>(params);
    case K::typo: return OrScheme::typo(params);
  }
  throw ParameterError("unknown predicate kind");
}

}  // namespace condenc
