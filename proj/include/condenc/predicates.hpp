#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace condenc {

struct PredicateSpec {
  enum class Kind { equality, capslock, hamming, edit_dist_1, typo };

  Kind kind = Kind::equality;
  std::size_t ell = 0;  // hamming only
  std::size_t n = 0;    // hamming and typo

  static PredicateSpec equality() { return {Kind::equality, 0, 0}; }
  static PredicateSpec capslock() { return {Kind::capslock, 0, 0}; }
  static PredicateSpec hamming(std::size_t ell, std::size_t n) { return {Kind::hamming, ell, n}; }
  static PredicateSpec edit_dist_1() { return {Kind::edit_dist_1, 0, 0}; }
  static PredicateSpec typo(std::size_t n) { return {Kind::typo, 0, n}; }

  // Text forms: eq, caps, ham:<l>:<n>, ed1, typo:<n>.
  std::string to_string() const;
  static PredicateSpec parse(std::string_view text);

  friend bool operator==(const PredicateSpec&, const PredicateSpec&) = default;
};

bool p_eq(std::string_view m1, std::string_view m2);
bool p_capslock(std::string_view m1, std::string_view m2);
// Hamming distance of the padded strings; the pad symbol differs from every
// byte, so each position past the shorter string counts once.
std::size_t padded_hamming(std::string_view m1, std::string_view m2);
bool p_ham(std::string_view m1, std::string_view m2, std::size_t ell, std::size_t n);
// Equal, or one is the other with a single character deleted.
bool p_ed1(std::string_view m1, std::string_view m2);
bool p_typo(std::string_view m1, std::string_view m2, std::size_t n);

bool evaluate(const PredicateSpec& spec, std::string_view m1, std::string_view m2);

}  // namespace condenc
