#include "condenc/or_scheme.hpp"

#include "condenc/edit_distance.hpp"
#include "condenc/equality.hpp"
#include "condenc/errors.hpp"
#include "condenc/hamming.hpp"

namespace condenc {

OrScheme::OrScheme(SchemeParams params, std::vector<std::unique_ptr<Scheme>> members)
    : Scheme(std::move(params)), members_(std::move(members)) {
  if (members_.empty()) throw ParameterError("OR composition needs members");
  for (const auto& m : members_)
    if (m->params().n != params_.n) throw ParameterError("OR members must share n");
}

std::unique_ptr<OrScheme> OrScheme::typo(const SchemeParams& params) {
  auto member_params = [&](PredicateSpec p) {
    SchemeParams s = params;
    s.predicate = p;
    return s;
  };
  std::vector<std::unique_ptr<Scheme>> members;
  members.push_back(
      std::make_unique<EqualityScheme>(member_params(PredicateSpec::capslock()), true));
  members.push_back(
      std::make_unique<HammingScheme>(member_params(PredicateSpec::hamming(2, params.n))));
  members.push_back(
      std::make_unique<EditDistanceScheme>(member_params(PredicateSpec::edit_dist_1())));
  SchemeParams own = params;
  own.predicate = PredicateSpec::typo(params.n);
  return std::make_unique<OrScheme>(own, std::move(members));
}

mpz_class OrScheme::min_prime_bound() const {
  mpz_class b = 0;
  for (const auto& m : members_) b = std::max(b, m->min_prime_bound());
  return b;
}

mpz_class OrScheme::min_modulus() const {
  mpz_class b = 0;
  for (const auto& m : members_) b = std::max(b, m->min_modulus());
  return b;
}

bool OrScheme::predicate(std::string_view m1, std::string_view m2) const {
  for (const auto& m : members_)
    if (m->predicate(m1, m2)) return true;
  return false;
}

std::size_t OrScheme::enc_slots() const {
  std::size_t s = 0;
  for (const auto& m : members_) s += m->enc_slots();
  return s;
}

std::size_t OrScheme::cenc_slots() const {
  std::size_t s = 0;
  for (const auto& m : members_) s += m->cenc_slots();
  return s;
}

std::size_t OrScheme::ae_size() const {
  std::size_t s = 0;
  for (const auto& m : members_) s += m->ae_size();
  return s;
}

std::vector<mpz_class> OrScheme::enc_values(const paillier::PublicKey& pk, std::string_view m,
                                            Rng& rng) const {
  std::vector<mpz_class> out;
  out.reserve(enc_slots());
  for (const auto& mem : members_) {
    auto v = mem->enc_values(pk, m, rng);
    std::move(v.begin(), v.end(), std::back_inserter(out));
  }
  return out;
}

std::optional<Scheme::Body> OrScheme::cenc_body(const paillier::PublicKey& pk,
                                                std::span<const mpz_class> c,
                                                std::string_view m2, std::string_view m3,
                                                Rng& rng) const {
  Body out;
  out.values.reserve(cenc_slots());
  std::size_t off = 0;
  for (const auto& mem : members_) {
    auto b = mem->cenc_body(pk, c.subspan(off, mem->enc_slots()), m2, m3, rng);
    if (!b) return std::nullopt;
    off += mem->enc_slots();
    std::move(b->values.begin(), b->values.end(), std::back_inserter(out.values));
    if (b->ae) {
      if (!out.ae) out.ae.emplace();
      out.ae->insert(out.ae->end(), b->ae->begin(), b->ae->end());
    }
  }
  return out;
}

std::vector<std::optional<std::string>> OrScheme::run_members(
    const paillier::SecretKey& sk, const paillier::PublicKey& pk, std::uint8_t flag,
    std::span<const mpz_class> c, const std::optional<Bytes>& ae) const {
  std::vector<std::optional<std::string>> out;
  std::size_t off = 0, ae_off = 0;
  for (const auto& mem : members_) {
    const std::size_t slots = flag == 0 ? mem->enc_slots() : mem->cenc_slots();
    auto part = c.subspan(off, slots);
    off += slots;
    if (flag == 0) {
      try {
        out.push_back(mem->dec_flag0(sk, pk, part));
      } catch (const MalformedError&) {
        out.push_back(std::nullopt);
      }
      continue;
    }
    std::optional<Bytes> member_ae;
    if (mem->ae_size() > 0) {
      member_ae = Bytes(ae->begin() + static_cast<std::ptrdiff_t>(ae_off),
                        ae->begin() + static_cast<std::ptrdiff_t>(ae_off + mem->ae_size()));
      ae_off += mem->ae_size();
    }
    out.push_back(mem->dec_flag1(sk, pk, part, member_ae));
  }
  return out;
}

std::vector<std::optional<std::string>> OrScheme::dec_members(const paillier::SecretKey& sk,
                                                              const paillier::PublicKey& pk,
                                                              const CondCiphertext& c) const {
  if (!well_formed(pk, c)) return std::vector<std::optional<std::string>>(members_.size());
  return run_members(sk, pk, c.flag, c.values, c.ae);
}

namespace {

std::optional<std::string> last_accepting(const std::vector<std::optional<std::string>>& r) {
  for (auto it = r.rbegin(); it != r.rend(); ++it)
    if (*it) return *it;
  return std::nullopt;
}

}  // namespace

std::optional<std::string> OrScheme::dec_flag0(const paillier::SecretKey& sk,
                                               const paillier::PublicKey& pk,
                                               std::span<const mpz_class> c) const {
  return last_accepting(run_members(sk, pk, 0, c, std::nullopt));
}

std::optional<std::string> OrScheme::dec_flag1(const paillier::SecretKey& sk,
                                               const paillier::PublicKey& pk,
                                               std::span<const mpz_class> c,
                                               const std::optional<Bytes>& ae) const {
  return last_accepting(run_members(sk, pk, 1, c, ae));
}

Scheme::Body OrScheme::sim_body(const paillier::PublicKey& pk, Rng& rng) const {
  Body out;
  for (const auto& mem : members_) {
    Body b = mem->sim_body(pk, rng);
    std::move(b.values.begin(), b.values.end(), std::back_inserter(out.values));
    if (b.ae) {
      if (!out.ae) out.ae.emplace();
      out.ae->insert(out.ae->end(), b.ae->begin(), b.ae->end());
    }
  }
  return out;
}

}  // namespace condenc
