#include <doctest.h>

#include "condenc/edit_distance.hpp"
#include "condenc/encoding.hpp"
#include "condenc/errors.hpp"
#include "condenc/predicates.hpp"
#include "helpers.hpp"

using namespace condenc;

namespace {

struct Fixture {
  explicit Fixture(std::size_t n = 3, unsigned bits = 128)
      : scheme(th::toy_params(PredicateSpec::edit_dist_1(), n, bits)),
        kp(th::cached_key(scheme)) {}
  EditDistanceScheme scheme;
  const paillier::KeyPair& kp;
  SeededRng rng{31};

  mpz_class slot(const CondCiphertext& c, std::size_t i) const {
    return paillier::dec(kp.sk, kp.pk, paillier::Ciphertext{c.values.at(i)});
  }
  std::optional<std::string> run(std::string_view m1, std::string_view m2, std::string_view m3) {
    const auto cc = scheme.cenc(kp.pk, scheme.enc(kp.pk, m1, rng), m2, m3, rng);
    REQUIRE(cc.has_value());
    return scheme.dec(kp.sk, kp.pk, *cc);
  }
};

}  // namespace

TEST_CASE("ed1: regular encryption holds every single deletion") {
  Fixture f(6, 192);
  const Alphabet a{};
  const auto c = f.scheme.enc(f.kp.pk, "bead", f.rng);
  REQUIRE(c.values.size() == 7);
  CHECK(f.slot(c, 0) == to_int("bead", a));
  CHECK(f.slot(c, 2) == to_int("bad", a));
  CHECK(f.slot(c, 1) == to_int("ead", a));
  CHECK(f.slot(c, 4) == to_int("bea", a));
  CHECK(f.slot(c, 5) == to_int("bead", a));  // past the end: m itself
  CHECK(f.slot(c, 6) == to_int("bead", a));
  CHECK(f.scheme.dec(f.kp.sk, f.kp.pk, c) == std::optional<std::string>("bead"));
}

TEST_CASE("ed1: examples") {
  Fixture f(6, 192);
  CHECK(f.run("bead", "bad", "ok") == std::optional<std::string>("ok"));
  CHECK(f.run("bad", "bead", "ok") == std::optional<std::string>("ok"));
  CHECK_FALSE(f.run("abc", "abd", "ok").has_value());
  // m = m' goes through slot 0.
  const auto cc = f.scheme.cenc(f.kp.pk, f.scheme.enc(f.kp.pk, "same", f.rng), "same", "ok", f.rng);
  REQUIRE(cc.has_value());
  CHECK(f.slot(*cc, 0) == to_int("ok", Alphabet{}));
  CHECK(f.scheme.dec(f.kp.sk, f.kp.pk, *cc) == std::optional<std::string>("ok"));
}

TEST_CASE("ed1: predicate oracle over {a,b}^<=3") {
  Fixture f;
  const auto all = th::all_strings("ab", 3);
  for (const auto& m1 : all)
    for (const auto& m2 : all) {
      const auto got = f.run(m1, m2, "m3");
      REQUIRE(got == (p_ed1(m1, m2) ? std::optional<std::string>("m3") : std::nullopt));
    }
}

TEST_CASE("ed1: shapes, flag discipline and sim") {
  Fixture f;
  const auto c = f.scheme.enc(f.kp.pk, "ab", f.rng);
  CHECK(c.values.size() == 4);
  const auto cc = f.scheme.cenc(f.kp.pk, c, "a", "z", f.rng);
  REQUIRE(cc.has_value());
  CHECK(cc->values.size() == 7);
  CHECK_FALSE(f.scheme.cenc(f.kp.pk, *cc, "a", "z", f.rng).has_value());
  auto bad = c;
  bad.values[2] = f.kp.pk.N;
  CHECK_FALSE(f.scheme.cenc(f.kp.pk, bad, "a", "z", f.rng).has_value());
  for (int i = 0; i < 20; ++i) {
    const auto s = f.scheme.sim(f.kp.pk, f.rng);
    CHECK(s.values.size() == 7);
    CHECK_FALSE(f.scheme.dec(f.kp.sk, f.kp.pk, s).has_value());
  }
}

TEST_CASE("ed1: sizes and key limits at 1024 bits") {
  SeededRng rng(5);
  EditDistanceScheme s(SchemeParams::for_predicate(PredicateSpec::edit_dist_1(), 32, 1024));
  const auto kp = s.keygen(rng);
  CHECK(s.payload_size(kp.pk, 0) == 1 + 33 * 256);
  CHECK(s.payload_size(kp.pk, 1) == 1 + 65 * 256);
  EditDistanceScheme big(SchemeParams::for_predicate(PredicateSpec::edit_dist_1(), 64, 1024));
  CHECK_THROWS_AS(big.keygen(rng), ParameterError);
}
