#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "condenc/bigint.hpp"
#include "condenc/errors.hpp"
#include "condenc/gf2.hpp"
#include "condenc/random.hpp"

namespace condenc {

template <class F>
struct Share {
  std::uint16_t index;  // evaluation point, >= 1
  typename F::elem value;

  friend bool operator==(const Share& a, const Share& b) {
    return a.index == b.index && a.value == b.value;
  }
};

// Threshold t: the polynomial has degree t-1, so any t shares determine the
// secret and any t-1 are jointly uniform. Shares are evaluated at x_i = i.
template <class F>
std::vector<Share<F>> share_gen(std::size_t n, std::size_t t, typename F::elem secret,
                                Rng& rng) {
  using E = typename F::elem;
  if (t < 1 || t > n) throw ParameterError("share_gen needs 1 <= t <= n");
  const unsigned __int128 field_points =
      F::w >= 64 ? ~static_cast<unsigned __int128>(0)
                 : (static_cast<unsigned __int128>(1) << F::w) - 1;
  if (n > 0xFFFF || static_cast<unsigned __int128>(n) > field_points)
    throw ParameterError("share count exceeds the field's nonzero points");
  std::vector<E> coeff(t);
  coeff[0] = secret;
  for (std::size_t k = 1; k < t; ++k) coeff[k] = F::random(rng);
  std::vector<Share<F>> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const E x = F::from_index(i);
    E y = coeff[t - 1];
    for (std::size_t k = t - 1; k-- > 0;) y = F::add(F::mul(y, x), coeff[k]);
    out.push_back({static_cast<std::uint16_t>(i), y});
  }
  return out;
}

// Lagrange interpolation at zero over exactly t points with distinct
// nonzero indices. No validation; callers on the hot path pass clean input.
template <class F>
typename F::elem lagrange_at_zero(const std::uint16_t* idx, const typename F::elem* ys,
                                  std::size_t t) {
  using E = typename F::elem;
  constexpr std::size_t kMax = 256;
  std::array<E, kMax> den, prefix;
  E prod_x = F::one();
  for (std::size_t j = 0; j < t; ++j) {
    const E xj = F::from_index(idx[j]);
    prod_x = F::mul(prod_x, xj);
    E d = xj;
    for (std::size_t m = 0; m < t; ++m)
      if (m != j) d = F::mul(d, F::add(F::from_index(idx[m]), xj));
    den[j] = d;
  }
  // Batch inversion of den[0..t).
  E acc = F::one();
  for (std::size_t j = 0; j < t; ++j) {
    prefix[j] = acc;
    acc = F::mul(acc, den[j]);
  }
  E inv_acc = F::inv(acc);
  E sum = F::zero();
  for (std::size_t j = t; j-- > 0;) {
    const E inv_j = F::mul(inv_acc, prefix[j]);
    inv_acc = F::mul(inv_acc, den[j]);
    sum = F::add(sum, F::mul(ys[j], inv_j));
  }
  return F::mul(sum, prod_x);
}

// Sorts the points by index and interpolates through the first t of them.
template <class F>
typename F::elem secret_recover(std::span<const Share<F>> points, std::size_t t) {
  if (t < 1 || points.size() < t) throw InputError("need at least t points");
  if (t > 256) throw InputError("threshold too large");
  std::vector<Share<F>> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const Share<F>& a, const Share<F>& b) { return a.index < b.index; });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i].index == 0) throw InputError("share index 0 is reserved");
    if (i && sorted[i].index == sorted[i - 1].index) throw InputError("duplicate share index");
  }
  std::vector<std::uint16_t> idx(t);
  std::vector<typename F::elem> ys(t);
  for (std::size_t i = 0; i < t; ++i) {
    idx[i] = sorted[i].index;
    ys[i] = sorted[i].value;
  }
  return lagrange_at_zero<F>(idx.data(), ys.data(), t);
}

template <class F>
Bytes serialize_share(const Share<F>& s) {
  Bytes out;
  put_u16(out, s.index);
  Bytes v = gf2::elem_to_bytes<F>(s.value);
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

template <class F>
Share<F> deserialize_share(std::span<const std::uint8_t> b) {
  ByteReader r(b);
  Share<F> s;
  s.index = r.u16();
  s.value = gf2::elem_from_bytes<F>(r.take(F::byte_width));
  if (!r.done()) throw MalformedError("trailing bytes after share");
  if constexpr (F::w < 64) {
    if (s.value >> F::w) throw MalformedError("share value outside the field");
  }
  return s;
}

}  // namespace condenc
