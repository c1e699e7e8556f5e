#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "condenc/random.hpp"

namespace condenc {

// Minimal big-endian bytes (zero encodes as the empty string).
Bytes to_bytes(const mpz_class& v);
// Big-endian, left-padded to exactly `width` bytes; throws if it does not fit.
Bytes to_bytes_fixed(const mpz_class& v, std::size_t width);
mpz_class from_bytes(std::span<const std::uint8_t> b);

std::size_t bit_length(const mpz_class& v);
std::size_t byte_length(const mpz_class& v);

mpz_class powm(const mpz_class& base, const mpz_class& exp, const mpz_class& mod);
// Inverse modulo m; throws DomainError when none exists.
mpz_class invert(const mpz_class& a, const mpz_class& m);
mpz_class pow2(unsigned e);

// Standard padded base64; from_base64 throws MalformedError on bad input.
std::string to_base64(std::span<const std::uint8_t> b);
Bytes from_base64(std::string_view s);

// Cursor over a byte buffer for length-prefixed formats. Every read
// throws MalformedError on truncation.
class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

  std::uint8_t u8();
  std::uint16_t u16();
  std::uint32_t u32();
  std::span<const std::uint8_t> take(std::size_t n);
  // 4-byte big-endian length followed by that many bytes.
  std::span<const std::uint8_t> prefixed();
  mpz_class prefixed_int();

  std::size_t remaining() const { return data_.size() - pos_; }
  bool done() const { return remaining() == 0; }

 private:
  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

void put_u8(Bytes& out, std::uint8_t v);
void put_u16(Bytes& out, std::uint16_t v);
void put_u32(Bytes& out, std::uint32_t v);
void put_prefixed(Bytes& out, std::span<const std::uint8_t> b);
void put_prefixed_int(Bytes& out, const mpz_class& v);

}  // namespace condenc
