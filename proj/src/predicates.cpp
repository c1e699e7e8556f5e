#include "condenc/predicates.hpp"

#include <charconv>
#include <vector>

#include "condenc/encoding.hpp"
#include "condenc/errors.hpp"

namespace condenc {

namespace {

std::size_t parse_size(std::string_view s, std::string_view whole) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw InputError("bad predicate spec: " + std::string(whole));
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

// m1 with one character removed equals m2, where |m1| = |m2| + 1.
bool one_deletion(std::string_view longer, std::string_view shorter) {
  std::size_t i = 0;
  while (i < shorter.size() && longer[i] == shorter[i]) ++i;
  return longer.substr(i + 1) == shorter.substr(i);
}

}  // namespace

std::string PredicateSpec::to_string() const {
  switch (kind) {
    case Kind::equality: return "eq";
    case Kind::capslock: return "caps";
    case Kind::hamming: return "ham:" + std::to_string(ell) + ":" + std::to_string(n);
    case Kind::edit_dist_1: return "ed1";
    case Kind::typo: return "typo:" + std::to_string(n);
  }
  return "?";
}

PredicateSpec PredicateSpec::parse(std::string_view text) {
  auto parts = split(text, ':');
  const auto& head = parts[0];
  if (head == "eq" && parts.size() == 1) return equality();
  if (head == "caps" && parts.size() == 1) return capslock();
  if (head == "ed1" && parts.size() == 1) return edit_dist_1();
  if (head == "ham" && parts.size() == 3) {
    auto spec = hamming(parse_size(parts[1], text), parse_size(parts[2], text));
    if (spec.n < 1) throw InputError("hamming predicate needs n >= 1");
    return spec;
  }
  if (head == "typo" && parts.size() == 2) {
    auto spec = typo(parse_size(parts[1], text));
    if (spec.n < 1) throw InputError("typo predicate needs n >= 1");
    return spec;
  }
  throw InputError("unknown predicate spec: " + std::string(text));
}

bool p_eq(std::string_view m1, std::string_view m2) { return m1 == m2; }

bool p_capslock(std::string_view m1, std::string_view m2) { return m1 == invert_case(m2); }

std::size_t padded_hamming(std::string_view m1, std::string_view m2) {
  const std::size_t common = std::min(m1.size(), m2.size());
  std::size_t d = m1.size() > m2.size() ? m1.size() - m2.size() : m2.size() - m1.size();
  for (std::size_t i = 0; i < common; ++i) d += m1[i] != m2[i];
  return d;
}

bool p_ham(std::string_view m1, std::string_view m2, std::size_t ell, std::size_t n) {
  if (m1.size() > n || m2.size() > n) throw DomainError("message longer than n");
  return padded_hamming(m1, m2) <= ell;
}

bool p_ed1(std::string_view m1, std::string_view m2) {
  if (m1 == m2) return true;
  if (m1.size() == m2.size() + 1) return one_deletion(m1, m2);
  if (m2.size() == m1.size() + 1) return one_deletion(m2, m1);
  return false;
}

bool p_typo(std::string_view m1, std::string_view m2, std::size_t n) {
  return p_capslock(m1, m2) || p_ham(m1, m2, 2, n) || p_ed1(m1, m2);
}

bool evaluate(const PredicateSpec& spec, std::string_view m1, std::string_view m2) {
  switch (spec.kind) {
    case PredicateSpec::Kind::equality: return p_eq(m1, m2);
    case PredicateSpec::Kind::capslock: return p_capslock(m1, m2);
    case PredicateSpec::Kind::hamming: return p_ham(m1, m2, spec.ell, spec.n);
    case PredicateSpec::Kind::edit_dist_1: return p_ed1(m1, m2);
    case PredicateSpec::Kind::typo: return p_typo(m1, m2, spec.n);
  }
  return false;
}

}  // namespace condenc
