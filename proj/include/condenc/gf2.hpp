#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "condenc/random.hpp"

namespace condenc::gf2 {

// Fields GF(2^W) with W <= 32, elements held in the low W bits of a
// uint64_t. `PolyLow` is the reduction polynomial with its x^W term removed.
template <unsigned W, std::uint64_t PolyLow>
struct SmallField {
  static_assert(W >= 2 && W <= 32);
  using elem = std::uint64_t;
  static constexpr unsigned w = W;
  static constexpr std::uint64_t poly_low = PolyLow;
  static constexpr std::size_t byte_width = (W + 7) / 8;
  static constexpr std::uint64_t mask = (W == 64) ? ~0ULL : ((1ULL << W) - 1);

  static elem zero() { return 0; }
  static elem one() { return 1; }
  static elem add(elem a, elem b) { return a ^ b; }

  static elem mul(elem a, elem b) {
    std::uint64_t r = 0;
    for (unsigned i = 0; i < W; ++i)
      r ^= (a << i) & (0 - ((b >> i) & 1));
    for (unsigned f = 0; f < kFolds; ++f) r = (r & mask) ^ times_poly_low(r >> W);
    return r;
  }

  // a^(2^W - 2); zero maps to zero.
  static elem inv(elem a) {
    elem result = 1, s = a;
    for (unsigned i = 1; i < W; ++i) {
      s = mul(s, s);
      result = mul(result, s);
    }
    return result;
  }

  static elem from_index(std::uint64_t i) { return i & mask; }
  static elem random(Rng& rng) { return rng.next_u64() & mask; }

 private:
  static constexpr unsigned poly_degree() {
    unsigned d = 0;
    while (d < 64 && (PolyLow >> d)) ++d;
    return d;  // PolyLow < 2^d
  }
  // Folds needed to bring a (2W-1)-bit product below 2^W; each fold lowers
  // the top bit by W - d.
  static constexpr unsigned folds() {
    unsigned top = 2 * W - 1, f = 0;
    while (top > W) {
      top = top - W + poly_degree();
      ++f;
    }
    return f;
  }
  static constexpr unsigned kFolds = folds();

  struct Taps {
    unsigned pos[64];
    unsigned count;
  };
  static constexpr Taps taps() {
    Taps t{};
    for (unsigned i = 0; i < 64; ++i)
      if ((PolyLow >> i) & 1) t.pos[t.count++] = i;
    return t;
  }
  static constexpr Taps kTaps = taps();

  static std::uint64_t times_poly_low(std::uint64_t hi) {
    std::uint64_t r = 0;
    for (unsigned i = 0; i < kTaps.count; ++i) r ^= hi << kTaps.pos[i];
    return r;
  }
};

// x^3 + x + 1
using Gf8 = SmallField<3, 0b011>;
// x^32 + x^22 + x^2 + x + 1
using Gf32 = SmallField<32, (1ULL << 22) | 0b111>;

// GF(2^128) modulo x^128 + x^7 + x^2 + x + 1, plain bit-serial multiply.
struct Gf128 {
  using elem = unsigned __int128;
  static constexpr unsigned w = 128;
  static constexpr std::uint64_t poly_low = 0x87;
  static constexpr std::size_t byte_width = 16;

  static elem zero() { return 0; }
  static elem one() { return 1; }
  static elem add(elem a, elem b) { return a ^ b; }

  static elem mul(elem a, elem b) {
    elem r = 0;
    for (int i = 127; i >= 0; --i) {
      const elem carry = 0 - (r >> 127);
      r = (r << 1) ^ (carry & elem{poly_low});
      r ^= a & (0 - ((b >> i) & 1));
    }
    return r;
  }

  static elem inv(elem a) {
    elem result = 1, s = a;
    for (unsigned i = 1; i < 128; ++i) {
      s = mul(s, s);
      result = mul(result, s);
    }
    return result;
  }

  static elem from_index(std::uint64_t i) { return i; }
  static elem random(Rng& rng) {
    const elem hi = rng.next_u64();
    return (hi << 64) | rng.next_u64();
  }
};

// Big-endian fixed-width encodings.
template <class F>
Bytes elem_to_bytes(typename F::elem v) {
  Bytes out(F::byte_width);
  for (std::size_t i = 0; i < F::byte_width; ++i)
    out[F::byte_width - 1 - i] = static_cast<std::uint8_t>(v >> (8 * i));
  return out;
}

template <class F>
typename F::elem elem_from_bytes(std::span<const std::uint8_t> b) {
  typename F::elem v = 0;
  for (auto byte : b) v = (v << 8) | byte;
  return v;
}

// Human-readable reduction polynomial, e.g. "x^32+x^22+x^2+x+1".
template <class F>
std::string poly_string() {
  std::string s = "x^" + std::to_string(F::w);
  for (int i = 63; i >= 0; --i) {
    if (!((F::poly_low >> i) & 1)) continue;
    s += i == 0 ? "+1" : i == 1 ? "+x" : "+x^" + std::to_string(i);
  }
  return s;
}

}  // namespace condenc::gf2
