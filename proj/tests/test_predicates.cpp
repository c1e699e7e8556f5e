#include <doctest.h>

#include <algorithm>

#include "condenc/errors.hpp"
#include "condenc/predicates.hpp"
#include "helpers.hpp"

using namespace condenc;

namespace {

// Insert/delete-only edit distance: |a| + |b| - 2 * LCS(a, b).
std::size_t indel_distance(std::string_view a, std::string_view b) {
  std::vector<std::vector<std::size_t>> lcs(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 1; i <= a.size(); ++i)
    for (std::size_t j = 1; j <= b.size(); ++j)
      lcs[i][j] = a[i - 1] == b[j - 1] ? lcs[i - 1][j - 1] + 1
                                       : std::max(lcs[i - 1][j], lcs[i][j - 1]);
  return a.size() + b.size() - 2 * lcs[a.size()][b.size()];
}

}  // namespace

TEST_CASE("predicates: equality") {
  CHECK(p_eq("a", "a"));
  CHECK_FALSE(p_eq("a", "b"));
  CHECK(p_eq("", ""));
}

TEST_CASE("predicates: capslock") {
  CHECK(p_capslock("abc", "ABC"));
  CHECK_FALSE(p_capslock("abc", "abc"));
  CHECK(p_capslock("123", "123"));
  CHECK(p_capslock("PASSword", "passWORD"));
}

TEST_CASE("predicates: padded hamming") {
  CHECK(p_ham("abcd", "abcd", 0, 8));
  CHECK(p_ham("abcd", "abce", 1, 8));
  CHECK_FALSE(p_ham("abcd", "ab", 1, 8));
  CHECK(padded_hamming("abcd", "ab") == 2);
  CHECK(padded_hamming("", "abc") == 3);
  CHECK_THROWS_AS(p_ham("abcdefghi", "a", 2, 8), DomainError);
}

TEST_CASE("predicates: edit distance one") {
  CHECK(p_ed1("bead", "bad"));
  CHECK(p_ed1("bad", "bead"));
  CHECK(p_ed1("a", "a"));
  CHECK(p_ed1("a", ""));
  CHECK_FALSE(p_ed1("abc", "abd"));
  CHECK_FALSE(p_ed1("abc", "a"));
}

TEST_CASE("predicates: ed1 agrees with an indel-distance oracle, length <= 5 over 3 letters") {
  const auto all = th::all_strings("abc", 5);
  std::size_t positives = 0;
  for (const auto& a : all)
    for (const auto& b : all) {
      const bool want = indel_distance(a, b) <= 1;
      REQUIRE(p_ed1(a, b) == want);
      positives += want;
    }
  CHECK(positives > all.size());
}

TEST_CASE("predicates: typo") {
  CHECK(p_typo("password", "PASSWORD", 32));
  CHECK(p_typo("password", "passw0rd", 32));
  CHECK(p_typo("password", "passwrd", 32));
  CHECK(p_typo("password", "password1", 32));
  CHECK_FALSE(p_typo("abcdef", "uvwxyz", 32));
  CHECK_FALSE(p_capslock("abcdef", "uvwxyz"));
  CHECK_FALSE(p_ham("abcdef", "uvwxyz", 2, 32));
  CHECK_FALSE(p_ed1("abcdef", "uvwxyz"));
}

TEST_CASE("predicates: symmetry and reflexivity") {
  const auto all = th::all_strings("aB1", 3);
  for (const auto& a : all) {
    CHECK(p_ed1(a, a));
    CHECK(p_ham(a, a, 0, 3));
    for (const auto& b : all) {
      REQUIRE(p_eq(a, b) == p_eq(b, a));
      REQUIRE(p_ham(a, b, 1, 3) == p_ham(b, a, 1, 3));
      REQUIRE(p_typo(a, b, 3) == p_typo(b, a, 3));
      REQUIRE(p_capslock(a, b) == p_capslock(b, a));
      REQUIRE(p_ed1(a, b) == p_ed1(b, a));
    }
  }
}

TEST_CASE("predicates: spec text form") {
  for (const char* s : {"eq", "caps", "ham:2:32", "ed1", "typo:32"}) {
    const auto p = PredicateSpec::parse(s);
    CHECK(p.to_string() == s);
  }
  CHECK(PredicateSpec::parse("ham:4:16") == PredicateSpec::hamming(4, 16));
  for (const char* bad : {"", "ham", "ham:2", "ham:x:3", "ham:1:0", "typo:", "neq", "typo:3:4"})
    CHECK_THROWS_AS(PredicateSpec::parse(bad), InputError);
  CHECK(evaluate(PredicateSpec::typo(8), "abc", "ABC"));
  CHECK_FALSE(evaluate(PredicateSpec::equality(), "abc", "ABC"));
}
