#include "condenc/bigint.hpp"

#include "condenc/errors.hpp"

#include <sodium.h>

namespace condenc {

Bytes to_bytes(const mpz_class& v) {
  if (v < 0) throw DomainError("negative integer cannot be serialised");
  if (v == 0) return {};
  Bytes out(byte_length(v));
  std::size_t count = 0;
  mpz_export(out.data(), &count, 1, 1, 1, 0, v.get_mpz_t());
  out.resize(count);
  return out;
}

Bytes to_bytes_fixed(const mpz_class& v, std::size_t width) {
  Bytes raw = to_bytes(v);
  if (raw.size() > width) throw DomainError("integer wider than fixed width");
  Bytes out(width - raw.size(), 0);
  out.insert(out.end(), raw.begin(), raw.end());
  return out;
}

mpz_class from_bytes(std::span<const std::uint8_t> b) {
  mpz_class v;
  if (!b.empty()) mpz_import(v.get_mpz_t(), b.size(), 1, 1, 1, 0, b.data());
  return v;
}

std::size_t bit_length(const mpz_class& v) {
  return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

std::size_t byte_length(const mpz_class& v) { return (bit_length(v) + 7) / 8; }

mpz_class powm(const mpz_class& base, const mpz_class& exp, const mpz_class& mod) {
  mpz_class r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

mpz_class invert(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw DomainError("value is not invertible");
  return r;
}

mpz_class pow2(unsigned e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

std::uint8_t ByteReader::u8() { return take(1)[0]; }

std::uint16_t ByteReader::u16() {
  auto b = take(2);
  return static_cast<std::uint16_t>((b[0] << 8) | b[1]);
}

std::uint32_t ByteReader::u32() {
  auto b = take(4);
  return (std::uint32_t{b[0]} << 24) | (std::uint32_t{b[1]} << 16) |
         (std::uint32_t{b[2]} << 8) | b[3];
}

std::span<const std::uint8_t> ByteReader::take(std::size_t n) {
  if (n > remaining()) throw MalformedError("truncated input");
  auto s = data_.subspan(pos_, n);
  pos_ += n;
  return s;
}

std::span<const std::uint8_t> ByteReader::prefixed() { return take(u32()); }

mpz_class ByteReader::prefixed_int() {
  auto b = prefixed();
  if (!b.empty() && b[0] == 0) throw MalformedError("non-minimal integer encoding");
  return from_bytes(b);
}

void put_u8(Bytes& out, std::uint8_t v) { out.push_back(v); }

void put_u16(Bytes& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

void put_u32(Bytes& out, std::uint32_t v) {
  for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<std::uint8_t>(v >> s));
}

void put_prefixed(Bytes& out, std::span<const std::uint8_t> b) {
  put_u32(out, static_cast<std::uint32_t>(b.size()));
  out.insert(out.end(), b.begin(), b.end());
}

void put_prefixed_int(Bytes& out, const mpz_class& v) { put_prefixed(out, to_bytes(v)); }

std::string to_base64(std::span<const std::uint8_t> b) {
  std::string out(sodium_base64_encoded_len(b.size(), sodium_base64_VARIANT_ORIGINAL), '\0');
  sodium_bin2base64(out.data(), out.size(), b.data(), b.size(), sodium_base64_VARIANT_ORIGINAL);
  out.pop_back();  // trailing NUL
  return out;
}

Bytes from_base64(std::string_view s) {
  Bytes out(s.size());
  std::size_t len = 0;
  if (sodium_base642bin(out.data(), out.size(), s.data(), s.size(), nullptr, &len, nullptr,
                        sodium_base64_VARIANT_ORIGINAL) != 0)
    throw MalformedError("invalid base64");
  out.resize(len);
  return out;
}

}  // namespace condenc
