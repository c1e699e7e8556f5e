#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "condenc/random.hpp"

namespace condenc {

// Base alphabet of `size` symbols with codes 0..size-1. The padding symbol
// gets the fresh code `size`, so the extended alphabet has size + 1 symbols.
struct Alphabet {
  std::uint32_t size = 256;

  std::uint32_t pad_code() const { return size; }
  std::uint32_t extended_size() const { return size + 1; }
  // |Sigma|^(n+1).
  mpz_class power_bound(std::size_t n) const;
  // (|Sigma|+1)^n: every to_int value of a length-<=n message lies below it.
  mpz_class codomain_bound(std::size_t n) const;
};

using Symbols = std::vector<std::uint32_t>;

Symbols to_symbols(std::string_view s);
// Throws DomainError if any code does not fit in a byte.
std::string to_string(const Symbols& s);

// Base-(|Sigma|+1) positional value with digit code+1, least significant
// character first. Digit 0 never occurs, so lengths cannot collide.
mpz_class to_int(const Symbols& m, const Alphabet& a);
mpz_class to_int(std::string_view m, const Alphabet& a);

// Inverse of to_int; empty when x is not the image of a message of length
// at most max_len.
std::optional<Symbols> from_int(const mpz_class& x, const Alphabet& a, std::size_t max_len);
std::optional<std::string> from_int_string(const mpz_class& x, const Alphabet& a,
                                           std::size_t max_len);

Symbols pad(const Symbols& m, std::size_t n, const Alphabet& a);
Symbols unpad(const Symbols& m, const Alphabet& a);

std::string invert_case(std::string_view m);

// m with its i-th character (1-based) removed; m itself for i = 0 or i > |m|.
std::string delete_at(std::string_view m, std::size_t i);

mpz_class renc(const mpz_class& payload, unsigned w, const mpz_class& N, Rng& rng);
mpz_class rdec(const mpz_class& y, unsigned w);

}  // namespace condenc
