#include "condenc/hamming.hpp"

#include <algorithm>
#include <array>

#include "condenc/bigint.hpp"
#include "condenc/encoding.hpp"
#include "condenc/errors.hpp"

namespace condenc {

namespace {

using gf2::Gf128;
using gf2::Gf32;

constexpr std::size_t kMaxN = 255;

mpz_class u128_to_mpz(Gf128::elem v) { return from_bytes(gf2::elem_to_bytes<Gf128>(v)); }

Gf128::elem mpz_low128(const mpz_class& v) {
  mpz_class low;
  mpz_fdiv_r_2exp(low.get_mpz_t(), v.get_mpz_t(), 128);
  return gf2::elem_from_bytes<Gf128>(to_bytes_fixed(low, 16));
}

// Fixed-length AE plaintext: length byte, then m3 zero-padded to n bytes.
Bytes encode_payload(std::string_view m3, std::size_t n) {
  Bytes out(n + 1, 0);
  out[0] = static_cast<std::uint8_t>(m3.size());
  std::copy(m3.begin(), m3.end(), out.begin() + 1);
  return out;
}

std::optional<std::string> decode_payload(const Bytes& pt, std::size_t n, std::uint32_t alpha) {
  if (pt.size() != n + 1 || pt[0] > n) return std::nullopt;
  std::string out(pt.begin() + 1, pt.begin() + 1 + pt[0]);
  for (unsigned char ch : out)
    if (ch >= alpha) return std::nullopt;
  return out;
}

using Mask = std::array<std::uint64_t, 4>;

// Visits every k-subset of [lo, hi] in lexicographic order; stops when
// visit returns true. Returns whether it was stopped.
template <class Visit>
bool for_each_combination(std::size_t k, std::uint16_t lo, std::uint16_t hi, Visit&& visit) {
  if (k == 0) return visit(static_cast<const std::uint16_t*>(nullptr), std::size_t{0});
  if (hi < lo || static_cast<std::size_t>(hi - lo + 1) < k) return false;
  std::array<std::uint16_t, kMaxN> c;
  for (std::size_t i = 0; i < k; ++i) c[i] = static_cast<std::uint16_t>(lo + i);
  for (;;) {
    if (visit(static_cast<const std::uint16_t*>(c.data()), k)) return true;
    std::size_t i = k;
    while (i > 0 && c[i - 1] == hi - (k - i)) --i;
    if (i == 0) return false;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = static_cast<std::uint16_t>(c[j - 1] + 1);
  }
}

}  // namespace

HammingScheme::HammingScheme(SchemeParams params) : Scheme(std::move(params)) {
  if (params_.predicate.kind != PredicateSpec::Kind::hamming)
    throw ParameterError("HammingScheme needs a hamming predicate");
  if (params_.predicate.n != params_.n) throw ParameterError("predicate n differs from params n");
  if (params_.n > kMaxN) throw ParameterError("hamming scheme supports n <= 255");
  if (ell() >= params_.n) throw ParameterError("hamming scheme needs ell < n");
}

unsigned HammingScheme::payload_bits() const {
  return params_.lambda + (params_.dual_field_shares ? 32 : 0);
}

mpz_class HammingScheme::min_prime_bound() const { return params_.alphabet.extended_size(); }

mpz_class HammingScheme::min_modulus() const {
  return mpz_class(2 * params_.n) * pow2(2 * payload_bits());
}

bool HammingScheme::predicate(std::string_view m1, std::string_view m2) const {
  return p_ham(m1, m2, ell(), params_.n);
}

std::vector<mpz_class> HammingScheme::enc_values(const paillier::PublicKey& pk,
                                                 std::string_view m, Rng& rng) const {
  const Symbols padded = pad(to_symbols(m), params_.n, params_.alphabet);
  std::vector<mpz_class> out;
  out.reserve(padded.size());
  for (auto code : padded) out.push_back(paillier::enc(pk, code, rng).value);
  return out;
}

std::optional<Scheme::Body> HammingScheme::cenc_body(const paillier::PublicKey& pk,
                                                     std::span<const mpz_class> c,
                                                     std::string_view m2, std::string_view m3,
                                                     Rng& rng) const {
  return cenc_impl(pk, c, m2, m3, rng, nullptr);
}

std::optional<CondCiphertext> HammingScheme::cenc_traced(const paillier::PublicKey& pk,
                                                         const CondCiphertext& c,
                                                         std::string_view m2,
                                                         std::string_view m3, Rng& rng,
                                                         HammingTrace& trace) const {
  check_message(m2);
  check_message(m3);
  if (c.flag != 0 || !well_formed(pk, c)) return std::nullopt;
  auto body = cenc_impl(pk, c.values, m2, m3, rng, &trace);
  if (!body) return std::nullopt;
  return CondCiphertext{id(), 1, std::move(body->values), std::move(body->ae)};
}

std::optional<Scheme::Body> HammingScheme::cenc_impl(const paillier::PublicKey& pk,
                                                     std::span<const mpz_class> c,
                                                     std::string_view m2, std::string_view m3,
                                                     Rng& rng, HammingTrace* trace) const {
  const std::size_t n = params_.n;
  const AeKey key = random_ae_key(rng);
  const auto key_shares =
      share_gen<Gf128>(n, threshold(), gf2::elem_from_bytes<Gf128>(key), rng);
  std::vector<Share<Gf32>> zero_shares;
  if (params_.dual_field_shares) zero_shares = share_gen<Gf32>(n, threshold(), 0, rng);

  const Symbols control = pad(to_symbols(m2), n, params_.alphabet);
  const unsigned w = payload_bits();
  Body b;
  b.values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class payload = u128_to_mpz(key_shares[i].value);
    if (params_.dual_field_shares) payload += mpz_class(zero_shares[i].value) << 128;
    auto v = cond_slot(pk, c[i], control[i], renc(payload, w, pk.N, rng), rng);
    if (!v) return std::nullopt;
    b.values.push_back(std::move(*v));
  }
  b.ae = auth_enc(key, encode_payload(m3, n), rng).serialize();
  if (trace) {
    trace->key = key;
    trace->key_shares = key_shares;
    trace->zero_shares = zero_shares;
  }
  return b;
}

std::optional<std::string> HammingScheme::dec_flag0(const paillier::SecretKey& sk,
                                                    const paillier::PublicKey& pk,
                                                    std::span<const mpz_class> c) const {
  Symbols padded;
  padded.reserve(c.size());
  for (const auto& v : c) {
    mpz_class code = paillier::dec(sk, pk, {v});
    if (code > params_.alphabet.pad_code()) throw MalformedError("slot is not a padded symbol");
    padded.push_back(static_cast<std::uint32_t>(code.get_ui()));
  }
  return to_string(unpad(padded, params_.alphabet));
}

HammingScheme::Recovered HammingScheme::recover_shares(const paillier::SecretKey& sk,
                                                       const paillier::PublicKey& pk,
                                                       std::span<const mpz_class> c) const {
  Recovered r;
  r.key_shares.reserve(c.size());
  for (const auto& v : c) {
    const mpz_class payload = rdec(paillier::dec(sk, pk, {v}), payload_bits());
    r.key_shares.push_back(mpz_low128(payload));
    if (params_.dual_field_shares) {
      mpz_class z = payload >> 128;
      r.zero_shares.push_back(z.get_ui() & 0xFFFFFFFFu);
    }
  }
  return r;
}

std::optional<std::string> HammingScheme::dec_flag1(const paillier::SecretKey& sk,
                                                    const paillier::PublicKey& pk,
                                                    std::span<const mpz_class> c,
                                                    const std::optional<Bytes>& ae) const {
  HammingStats stats;
  return dec_impl(sk, pk, c, *ae, stats);
}

std::optional<std::string> HammingScheme::dec(const paillier::SecretKey& sk,
                                              const paillier::PublicKey& pk,
                                              const CondCiphertext& c,
                                              HammingStats& stats) const {
  if (!well_formed(pk, c)) return std::nullopt;
  if (c.flag == 0) return dec_flag0(sk, pk, c.values);
  return dec_impl(sk, pk, c.values, *c.ae, stats);
}

std::optional<std::string> HammingScheme::dec_impl(const paillier::SecretKey& sk,
                                                   const paillier::PublicKey& pk,
                                                   std::span<const mpz_class> c,
                                                   const Bytes& ae, HammingStats& stats) const {
  auto parsed = AeCiphertext::parse(ae);
  if (!parsed) return std::nullopt;
  return search(recover_shares(sk, pk, c), *parsed, stats);
}

// Candidate recovery sets are described by the corrupted index set C; the
// recovery uses the first t indices of [n] \ C. Stages, in order:
//   1. pair blocks C = {2i-1, 2i} (one wrong character costs <= n/2 tries)
//   2. short-password order: k = ell..n, C = C' + {k}, C' a subset of [k-1]
//   3. plain lexicographic enumeration, only when stage 2 is off
std::optional<std::string> HammingScheme::search(const Recovered& shares, const AeCiphertext& ae,
                                                 HammingStats& stats) const {
  const std::size_t n = params_.n;
  const std::size_t l = ell();
  const std::size_t t = threshold();
  const bool dual = params_.dual_field_shares;

  std::array<std::uint16_t, kMaxN> idx;
  std::array<Gf128::elem, kMaxN> ys;
  std::array<Gf32::elem, kMaxN> zs;
  std::vector<Mask> tried;  // recovery sets from stage 1
  bool recording = false;
  std::optional<std::string> found;

  auto attempt = [&](const std::uint16_t* corrupted, std::size_t k) -> bool {
    std::size_t got = 0, ci = 0;
    Mask mask{};
    for (std::uint16_t i = 1; i <= n && got < t; ++i) {
      if (ci < k && corrupted[ci] == i) {
        ++ci;
        continue;
      }
      idx[got] = i;
      ys[got] = shares.key_shares[i - 1];
      if (dual) zs[got] = shares.zero_shares[i - 1];
      mask[i >> 6] |= 1ULL << (i & 63);
      ++got;
    }
    if (recording) {
      tried.push_back(mask);
    } else if (!tried.empty() &&
               std::find(tried.begin(), tried.end(), mask) != tried.end()) {
      return false;
    }
    ++stats.subsets;
    if (dual) {
      ++stats.small_field_recoveries;
      if (lagrange_at_zero<Gf32>(idx.data(), zs.data(), t) != 0) return false;
    }
    ++stats.large_field_recoveries;
    const auto key_elem = lagrange_at_zero<Gf128>(idx.data(), ys.data(), t);
    AeKey key;
    const Bytes kb = gf2::elem_to_bytes<Gf128>(key_elem);
    std::copy(kb.begin(), kb.end(), key.begin());
    ++stats.ae_attempts;
    auto pt = auth_dec(key, ae);
    if (!pt) return false;
    found = decode_payload(*pt, n, params_.alphabet.size);
    return found.has_value();
  };

  if (params_.pair_blocks && l >= 2) {
    recording = true;
    for (std::uint16_t i = 1; 2 * i <= n; ++i) {
      const std::uint16_t block[2] = {static_cast<std::uint16_t>(2 * i - 1),
                                      static_cast<std::uint16_t>(2 * i)};
      if (attempt(block, 2)) return found;
    }
    recording = false;
  }

  if (params_.short_password_order) {
    if (l == 0) {
      attempt(nullptr, 0);
      return found;
    }
    std::array<std::uint16_t, kMaxN> set;
    for (std::size_t k = l; k <= n; ++k) {
      const bool stop = for_each_combination(
          l - 1, 1, static_cast<std::uint16_t>(k - 1),
          [&](const std::uint16_t* prefix, std::size_t m) {
            std::copy(prefix, prefix + m, set.begin());
            set[m] = static_cast<std::uint16_t>(k);
            return attempt(set.data(), m + 1);
          });
      if (stop) return found;
    }
    return found;
  }

  for_each_combination(l, 1, static_cast<std::uint16_t>(n),
                       [&](const std::uint16_t* set, std::size_t m) { return attempt(set, m); });
  return found;
}

}  // namespace condenc
