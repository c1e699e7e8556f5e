#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "condenc/paillier.hpp"
#include "condenc/random.hpp"
#include "condenc/scheme.hpp"

namespace th {

// Every string over sigma with length <= n, shortest first.
inline std::vector<std::string> all_strings(std::string_view sigma, std::size_t n) {
  std::vector<std::string> out{""};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= n; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (char c : sigma) out.push_back(out[i] + c);
    begin = end;
  }
  return out;
}

// 64-bit arithmetic that never touches GMP, for cross-checking it.
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin; these bases are exact for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while (!(d & 1)) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s && composite; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// One cached key per (scheme params, bits) so the suite does not keep
// regenerating constrained keys.
inline const condenc::paillier::KeyPair& cached_key(const condenc::Scheme& s) {
  static std::map<std::string, condenc::paillier::KeyPair> cache;
  const auto& p = s.params();
  const std::string tag = p.predicate.to_string() + "/" + std::to_string(p.n) + "/" +
                          std::to_string(p.modulus_bits) + "/" + std::to_string(p.alphabet.size);
  auto it = cache.find(tag);
  if (it == cache.end()) {
    condenc::SeededRng rng(std::hash<std::string>{}(tag));
    it = cache.emplace(tag, s.keygen(rng)).first;
  }
  return it->second;
}

inline condenc::SchemeParams toy_params(const condenc::PredicateSpec& p, std::size_t n,
                                        unsigned bits) {
  auto sp = condenc::SchemeParams::for_predicate(p, n, bits);
  sp.insecure = true;
  return sp;
}

}  // namespace th
