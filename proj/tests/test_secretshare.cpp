#include <doctest.h>

#include <algorithm>
#include <map>

#include "condenc/errors.hpp"
#include "condenc/secretshare.hpp"

using namespace condenc;
using gf2::Gf128;
using gf2::Gf32;
using gf2::Gf8;

namespace {

// Evaluate the polynomial with the given coefficients (constant first) at x.
std::uint64_t eval8(const std::vector<std::uint64_t>& coeff, std::uint64_t x) {
  std::uint64_t y = 0, xp = 1;
  for (auto c : coeff) {
    y ^= Gf8::mul(c, xp);
    xp = Gf8::mul(xp, x);
  }
  return y;
}

// Every subset of {0..n-1} of size k, as index lists.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

template <class F>
std::vector<Share<F>> pick(const std::vector<Share<F>>& all, const std::vector<std::size_t>& idx) {
  std::vector<Share<F>> out;
  for (auto i : idx) out.push_back(all[i]);
  return out;
}

}  // namespace

TEST_CASE("secretshare: threshold 1 copies the secret") {
  SeededRng rng(1);
  for (const auto& s : share_gen<Gf128>(3, 1, 0xABCDEF, rng)) CHECK(s.value == 0xABCDEF);
}

TEST_CASE("secretshare: two of three recover") {
  SeededRng rng(2);
  const Gf128::elem secret = Gf128::random(rng);
  const auto shares = share_gen<Gf128>(3, 2, secret, rng);
  for (const auto& sub : subsets(3, 2))
    CHECK(secret_recover<Gf128>(pick(shares, sub), 2) == secret);
  const std::vector<Share<Gf128>> flat{{1, 77}, {2, 77}};
  CHECK(secret_recover<Gf128>(flat, 2) == 77);
}

TEST_CASE("secretshare: GF(2^3) exhaustive correctness for all n <= 7") {
  SeededRng rng(3);
  for (std::size_t n = 1; n <= 7; ++n)
    for (std::size_t t = 1; t <= n; ++t)
      for (std::uint64_t secret = 0; secret < 8; ++secret)
        for (int rep = 0; rep < 3; ++rep) {
          const auto shares = share_gen<Gf8>(n, t, secret, rng);
          for (const auto& sub : subsets(n, t))
            REQUIRE(secret_recover<Gf8>(pick(shares, sub), t) == secret);
        }
}

TEST_CASE("secretshare: a single share is uniform under (3,2) sharing over GF(2^3)") {
  for (std::uint64_t secret = 0; secret < 8; ++secret)
    for (std::uint64_t x = 1; x <= 3; ++x) {
      std::vector<int> hist(8, 0);
      for (std::uint64_t c1 = 0; c1 < 8; ++c1) ++hist[eval8({secret, c1}, x)];
      for (int h : hist) CHECK(h == 1);
    }
}

TEST_CASE("secretshare: any 2 of a (4,3) sharing over GF(2^3) hide the secret") {
  for (const auto& sub : subsets(4, 2)) {
    const std::uint64_t xa = sub[0] + 1, xb = sub[1] + 1;
    std::map<std::pair<std::uint64_t, std::uint64_t>, int> first;
    for (std::uint64_t secret = 0; secret < 8; ++secret) {
      std::map<std::pair<std::uint64_t, std::uint64_t>, int> joint;
      for (std::uint64_t c1 = 0; c1 < 8; ++c1)
        for (std::uint64_t c2 = 0; c2 < 8; ++c2)
          ++joint[{eval8({secret, c1, c2}, xa), eval8({secret, c1, c2}, xb)}];
      CHECK(joint.size() == 64);  // uniform over the 64 value pairs
      if (secret == 0)
        first = joint;
      else
        CHECK(joint == first);
    }
  }
}

TEST_CASE("secretshare: one corrupted point never yields the secret over GF(2^3)") {
  // Every (secret, polynomial, corrupted position, nonzero offset) for t=3.
  for (std::uint64_t secret = 0; secret < 8; ++secret)
    for (std::uint64_t c1 = 0; c1 < 8; ++c1)
      for (std::uint64_t c2 = 0; c2 < 8; ++c2) {
        std::vector<Share<Gf8>> pts;
        for (std::uint16_t x = 1; x <= 3; ++x) pts.push_back({x, eval8({secret, c1, c2}, x)});
        REQUIRE(secret_recover<Gf8>(pts, 3) == secret);
        for (std::size_t j = 0; j < 3; ++j)
          for (std::uint64_t delta = 1; delta < 8; ++delta) {
            auto bad = pts;
            bad[j].value ^= delta;
            REQUIRE(secret_recover<Gf8>(bad, 3) != secret);
          }
      }
}

TEST_CASE("secretshare: recovery ignores input order and uses the lowest t indices") {
  SeededRng rng(4);
  const auto secret = Gf32::random(rng);
  auto shares = share_gen<Gf32>(10, 4, secret, rng);
  const auto want = secret_recover<Gf32>(shares, 4);
  CHECK(want == secret);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(shares.begin(), shares.end(), rng);
    CHECK(secret_recover<Gf32>(shares, 4) == want);
  }
  // Garbage beyond the first t points by index does not matter.
  std::sort(shares.begin(), shares.end(), [](auto& a, auto& b) { return a.index < b.index; });
  shares[9].value ^= 1;
  CHECK(secret_recover<Gf32>(shares, 4) == secret);
}

TEST_CASE("secretshare: random large-field sharings") {
  SeededRng rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t n = 2 + rng.uniform(40), t = 1 + rng.uniform(n);
    const auto secret = Gf128::random(rng);
    auto shares = share_gen<Gf128>(n, t, secret, rng);
    std::shuffle(shares.begin(), shares.end(), rng);
    shares.resize(t);
    CHECK(secret_recover<Gf128>(shares, t) == secret);
  }
}

TEST_CASE("secretshare: parameter and input errors") {
  SeededRng rng(6);
  CHECK_THROWS_AS(share_gen<Gf8>(3, 4, 1, rng), ParameterError);
  CHECK_THROWS_AS(share_gen<Gf8>(3, 0, 1, rng), ParameterError);
  CHECK_THROWS_AS(share_gen<Gf8>(8, 2, 1, rng), ParameterError);  // only 7 nonzero points
  const std::vector<Share<Gf8>> dup{{1, 3}, {1, 4}};
  CHECK_THROWS_AS(secret_recover<Gf8>(dup, 2), InputError);
  const std::vector<Share<Gf8>> zero{{0, 3}, {1, 4}};
  CHECK_THROWS_AS(secret_recover<Gf8>(zero, 2), InputError);
  CHECK_THROWS_AS(secret_recover<Gf8>(zero, 3), InputError);
}

TEST_CASE("secretshare: share serialization") {
  const Share<Gf32> s{513, 0xDEADBEEF};
  const Bytes b = serialize_share(s);
  CHECK(b == Bytes{0x02, 0x01, 0xDE, 0xAD, 0xBE, 0xEF});
  CHECK(deserialize_share<Gf32>(b) == s);
  const Share<Gf128> l{1, 5};
  CHECK(serialize_share(l).size() == 18);
  CHECK(deserialize_share<Gf128>(serialize_share(l)) == l);
  CHECK_THROWS_AS(deserialize_share<Gf8>(Bytes{0, 1, 9}), MalformedError);
  CHECK_THROWS_AS(deserialize_share<Gf32>(Bytes{0, 1, 2}), MalformedError);
}
