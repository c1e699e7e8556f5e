#include "condenc/encoding.hpp"

#include "condenc/bigint.hpp"
#include "condenc/errors.hpp"

namespace condenc {

mpz_class Alphabet::power_bound(std::size_t n) const {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), size, n + 1);
  return r;
}

mpz_class Alphabet::codomain_bound(std::size_t n) const {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), size + 1, n);
  return r;
}

Symbols to_symbols(std::string_view s) {
  Symbols out;
  out.reserve(s.size());
  for (unsigned char c : s) out.push_back(c);
  return out;
}

std::string to_string(const Symbols& s) {
  std::string out;
  out.reserve(s.size());
  for (auto c : s) {
    if (c > 0xFF) throw DomainError("symbol does not fit in a byte");
    out.push_back(static_cast<char>(c));
  }
  return out;
}

mpz_class to_int(const Symbols& m, const Alphabet& a) {
  mpz_class x = 0;
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    if (*it >= a.size) throw DomainError("character code outside the alphabet");
    x = x * (a.size + 1) + (*it + 1);
  }
  return x;
}

mpz_class to_int(std::string_view m, const Alphabet& a) { return to_int(to_symbols(m), a); }

std::optional<Symbols> from_int(const mpz_class& x, const Alphabet& a, std::size_t max_len) {
  if (x < 0) return std::nullopt;
  Symbols out;
  mpz_class v = x;
  const unsigned long base = a.size + 1;
  while (v != 0) {
    if (out.size() == max_len) return std::nullopt;
    unsigned long digit = mpz_fdiv_q_ui(v.get_mpz_t(), v.get_mpz_t(), base);
    if (digit == 0) return std::nullopt;
    out.push_back(static_cast<std::uint32_t>(digit - 1));
  }
  return out;
}

std::optional<std::string> from_int_string(const mpz_class& x, const Alphabet& a,
                                           std::size_t max_len) {
  auto s = from_int(x, a, max_len);
  if (!s) return std::nullopt;
  for (auto c : *s)
    if (c > 0xFF) return std::nullopt;
  return to_string(*s);
}

Symbols pad(const Symbols& m, std::size_t n, const Alphabet& a) {
  if (m.size() > n) throw LengthError("message longer than n");
  for (auto c : m) {
    if (c == a.pad_code()) throw DomainError("message already contains the pad symbol");
    if (c > a.size) throw DomainError("character code outside the alphabet");
  }
  Symbols out = m;
  out.resize(n, a.pad_code());
  return out;
}

Symbols unpad(const Symbols& m, const Alphabet& a) {
  std::size_t end = m.size();
  while (end > 0 && m[end - 1] == a.pad_code()) --end;
  for (std::size_t i = 0; i < end; ++i) {
    if (m[i] == a.pad_code()) throw MalformedError("pad symbol before a message symbol");
    if (m[i] > a.size) throw DomainError("character code outside the extended alphabet");
  }
  return Symbols(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(end));
}

std::string invert_case(std::string_view m) {
  std::string out(m);
  for (char& c : out) {
    if (c >= 'a' && c <= 'z')
      c = static_cast<char>(c - 'a' + 'A');
    else if (c >= 'A' && c <= 'Z')
      c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string delete_at(std::string_view m, std::size_t i) {
  if (i == 0 || i > m.size()) return std::string(m);
  std::string out(m.substr(0, i - 1));
  out.append(m.substr(i));
  return out;
}

mpz_class renc(const mpz_class& payload, unsigned w, const mpz_class& N, Rng& rng) {
  const mpz_class two_w = pow2(w);
  if (payload < 0 || payload >= two_w) throw DomainError("payload wider than w bits");
  if (N <= two_w) throw ParameterError("REnc needs N > 2^w");
  mpz_class hi = (N - 1 - payload) >> w;  // a ranges over [0, hi]
  mpz_class a = rng.uniform_below(hi + 1);
  return (a << w) + payload;
}

mpz_class rdec(const mpz_class& y, unsigned w) {
  mpz_class r;
  mpz_fdiv_r_2exp(r.get_mpz_t(), y.get_mpz_t(), w);
  return r;
}

}  // namespace condenc
