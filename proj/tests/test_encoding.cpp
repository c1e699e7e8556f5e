#include <doctest.h>

#include <set>

#include "condenc/bigint.hpp"
#include "condenc/encoding.hpp"
#include "condenc/errors.hpp"
#include "helpers.hpp"

using namespace condenc;

namespace {

const Alphabet kBytes{};
const Alphabet kBinary{2};

Symbols sym(std::initializer_list<std::uint32_t> v) { return Symbols(v); }

// All symbol strings over {0, .., k-1} with length <= n.
std::vector<Symbols> all_symbol_strings(std::uint32_t k, std::size_t n) {
  std::vector<Symbols> out{{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= n; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (std::uint32_t c = 0; c < k; ++c) {
        Symbols s = out[i];
        s.push_back(c);
        out.push_back(s);
      }
    begin = end;
  }
  return out;
}

mpq_class frac(unsigned long num, unsigned long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("encoding: to_int small values") {
  CHECK(to_int("", kBytes) == 0);
  CHECK(to_int("A", kBytes) == 66);
  // Least-significant character first, digits code+1, base 257.
  CHECK(to_int("AB", kBytes) == 66 + 67 * 257);
  CHECK(from_int_string(66, kBytes, 4) == std::optional<std::string>("A"));
  CHECK(from_int_string(0, kBytes, 4) == std::optional<std::string>(""));
  CHECK(from_int_string(to_int("ab", kBytes), kBytes, 2) == std::optional<std::string>("ab"));
}

TEST_CASE("encoding: to_int is injective and bounded over binary strings, n <= 4") {
  std::set<mpz_class> seen;
  const auto all = all_symbol_strings(2, 4);
  for (const auto& m : all) {
    const mpz_class x = to_int(m, kBinary);
    CHECK(x < kBinary.codomain_bound(4));
    seen.insert(x);
    CHECK(from_int(x, kBinary, 4) == std::optional<Symbols>(m));
  }
  CHECK(seen.size() == all.size());
}

TEST_CASE("encoding: byte-alphabet images stay below 256^(n+1)") {
  SeededRng rng(7);
  for (std::size_t n : {1, 2, 8, 32}) {
    for (int i = 0; i < 50; ++i) {
      std::string m(n, '\0');
      for (auto& ch : m) ch = static_cast<char>(rng.uniform(256));
      CHECK(to_int(m, kBytes) < kBytes.power_bound(n));
    }
    CHECK(to_int(std::string(n, '\xFF'), kBytes) + 1 == kBytes.codomain_bound(n));
  }
}

TEST_CASE("encoding: from_int rejects values without a preimage") {
  // Digit 0 never occurs in an encoding.
  CHECK_FALSE(from_int(3, kBinary, 4).has_value());  // base 3: "10"
  CHECK_FALSE(from_int(-1, kBinary, 4).has_value());
  // At and above the range bound, the preimage would be longer than n.
  for (std::size_t n : {1, 4, 32}) {
    CHECK_FALSE(from_int(kBytes.power_bound(n), kBytes, n).has_value());
    CHECK_FALSE(from_int(kBytes.power_bound(n) + 12345, kBytes, n).has_value());
    CHECK_FALSE(from_int(kBytes.codomain_bound(n), kBytes, n).has_value());
  }
  // For the byte alphabet the codomain bound sits below |S|^(n+1).
  CHECK(kBytes.codomain_bound(32) < kBytes.power_bound(32));
  // For two letters it does not, which is why scheme bounds take the max.
  CHECK(kBinary.codomain_bound(4) > kBinary.power_bound(4));
}

TEST_CASE("encoding: to_int rejects out-of-alphabet codes") {
  CHECK_THROWS_AS(to_int(sym({0, 2}), kBinary), DomainError);
}

TEST_CASE("encoding: pad and unpad") {
  const auto y = kBinary.pad_code();
  CHECK(pad({}, 4, kBinary) == sym({y, y, y, y}));
  CHECK(pad(sym({0, 1}), 4, kBinary) == sym({0, 1, y, y}));
  CHECK(unpad(sym({0, 1, y, y}), kBinary) == sym({0, 1}));
  CHECK(unpad(sym({y, y, y, y}), kBinary) == Symbols{});
  CHECK_THROWS_AS(pad(sym({0, 1, 0}), 2, kBinary), LengthError);
  CHECK_THROWS_AS(pad(sym({0, y}), 4, kBinary), DomainError);
  CHECK_THROWS_AS(unpad(sym({0, y, 1, y}), kBinary), MalformedError);

  std::set<Symbols> images;
  const auto all = all_symbol_strings(2, 4);
  for (const auto& m : all) {
    const Symbols p = pad(m, 4, kBinary);
    CHECK(p.size() == 4);
    CHECK(unpad(p, kBinary) == m);
    images.insert(p);
  }
  CHECK(images.size() == all.size());

  SeededRng rng(5);
  for (int i = 0; i < 200; ++i) {
    Symbols m(rng.uniform(33));
    for (auto& c : m) c = static_cast<std::uint32_t>(rng.uniform(256));
    CHECK(unpad(pad(m, 32, kBytes), kBytes) == m);
  }
}

TEST_CASE("encoding: invert_case") {
  CHECK(invert_case("Pass1!") == "pASS1!");
  CHECK(invert_case("\xDF") == "\xDF");
  for (const auto& s : th::all_strings("aZ3", 3)) CHECK(invert_case(invert_case(s)) == s);
}

TEST_CASE("encoding: delete_at") {
  CHECK(delete_at("bead", 2) == "bad");
  CHECK(delete_at("bead", 1) == "ead");
  CHECK(delete_at("bead", 4) == "bea");
  CHECK(delete_at("bead", 0) == "bead");
  CHECK(delete_at("bead", 5) == "bead");
}

TEST_CASE("encoding: renc and rdec") {
  SeededRng rng(6);
  CHECK(rdec(pow2(8), 8) == 0);
  CHECK(rdec(5, 8) == 5);

  SUBCASE("roundtrip and congruence") {
    const unsigned w = 128;
    const mpz_class N = rng.random_bits(400) | pow2(399);
    for (int i = 0; i < 10000; ++i) {
      const mpz_class x = rng.random_bits(w);
      const mpz_class y = renc(x, w, N, rng);
      REQUIRE(y < N);
      REQUIRE(rdec(y, w) == x);
    }
  }
  SUBCASE("N = 2^w + 1, payload 0 gives 0 or 2^w") {
    const unsigned w = 4;
    std::set<mpz_class> seen;
    for (int i = 0; i < 200; ++i) seen.insert(renc(0, w, pow2(w) + 1, rng));
    CHECK(seen == std::set<mpz_class>{0, pow2(w)});
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(renc(16, 4, 100, rng), DomainError);
    CHECK_THROWS_AS(renc(1, 4, 16, rng), ParameterError);
  }
}

TEST_CASE("encoding: exact statistical distance of renc over a uniform payload") {
  // Enumerate Pr[renc(x) = y] for x uniform in [0, 2^w) with exact rationals
  // and compare against uniform Z_N.
  for (auto [w, N] : {std::pair{3u, 100u}, {3u, 101u}, {2u, 9u}, {4u, 160u}, {5u, 1000u}}) {
    const unsigned a = 1u << w;
    std::vector<mpq_class> prob(N, 0);
    for (unsigned x = 0; x < a; ++x) {
      const unsigned hi = (N - 1 - x) / a;
      for (unsigned k = 0; k <= hi; ++k) prob[k * a + x] += frac(1, a * (hi + 1));
    }
    mpq_class total = 0, sd = 0;
    for (unsigned y = 0; y < N; ++y) {
      total += prob[y];
      sd += abs(prob[y] - frac(1, N));
    }
    sd /= 2;
    CHECK(total == 1);
    const unsigned r = N % a;
    CAPTURE(w);
    CAPTURE(N);
    // Closed form: residues below r carry one extra multiple of 2^w.
    CHECK(sd == frac(r * (a - r), a * N));
    CHECK(sd <= frac(a, N - a));
  }
}
