#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "condenc/encoding.hpp"
#include "condenc/paillier.hpp"
#include "condenc/predicates.hpp"
#include "condenc/random.hpp"

namespace condenc {

enum class SchemeId : std::uint8_t {
  equality = 1,
  capslock = 2,
  hamming = 3,
  edit_dist_1 = 4,
  typo = 5,
};

std::string scheme_name(SchemeId id);

struct SchemeParams {
  PredicateSpec predicate;
  std::size_t n = 32;        // max message length
  unsigned lambda = 128;     // AE key bits; also the share width
  unsigned modulus_bits = 1024;
  Alphabet alphabet{};
  // Hamming decryption options. All three on is the optimized decryptor;
  // all three off is the plain exhaustive search over one large field.
  bool dual_field_shares = true;
  bool short_password_order = true;
  bool pair_blocks = true;
  // Permits moduli below 1024 bits.
  bool insecure = false;

  // Params for a predicate; takes n from the predicate when it carries one.
  static SchemeParams for_predicate(const PredicateSpec& p, std::size_t n, unsigned bits);
  void set_unoptimized();
};

struct CondCiphertext {
  SchemeId scheme = SchemeId::equality;
  std::uint8_t flag = 0;  // 0: Enc output, 1: CEnc output
  std::vector<mpz_class> values;
  std::optional<Bytes> ae;  // serialized AE ciphertext, Hamming CEnc only

  friend bool operator==(const CondCiphertext&, const CondCiphertext&) = default;
};

class OrScheme;

class Scheme {
 public:
  explicit Scheme(SchemeParams params);
  virtual ~Scheme() = default;

  virtual SchemeId id() const = 0;
  const SchemeParams& params() const { return params_; }

  // Key constraints: min(p, q) > min_prime_bound() and N >= min_modulus().
  virtual mpz_class min_prime_bound() const = 0;
  virtual mpz_class min_modulus() const { return 0; }
  paillier::KeyPair keygen(Rng& rng) const;

  CondCiphertext enc(const paillier::PublicKey& pk, std::string_view m, Rng& rng) const;
  // Empty for flag-1 or malformed input, per the scheme contract.
  std::optional<CondCiphertext> cenc(const paillier::PublicKey& pk, const CondCiphertext& c,
                                     std::string_view m2, std::string_view m3,
                                     Rng& rng) const;
  std::optional<CondCiphertext> cenc(const paillier::PublicKey& pk, const CondCiphertext& c,
                                     std::string_view m2, Rng& rng) const {
    return cenc(pk, c, m2, m2, rng);
  }
  std::optional<std::string> dec(const paillier::SecretKey& sk, const paillier::PublicKey& pk,
                                 const CondCiphertext& c) const;
  CondCiphertext sim(const paillier::PublicKey& pk, Rng& rng) const;

  // The plaintext predicate this scheme realises.
  virtual bool predicate(std::string_view m1, std::string_view m2) const = 0;

  virtual std::size_t enc_slots() const = 0;
  virtual std::size_t cenc_slots() const = 0;
  virtual std::size_t ae_size() const { return 0; }
  virtual std::size_t member_count() const { return 1; }

  // Flag byte per member + fixed-width Paillier values + AE bytes.
  std::size_t payload_size(const paillier::PublicKey& pk, std::uint8_t flag) const;

  // Throws LengthError / DomainError for messages outside Sigma^{<=n}.
  void check_message(std::string_view m) const;

 protected:
  struct Body {
    std::vector<mpz_class> values;
    std::optional<Bytes> ae;
  };

  virtual std::vector<mpz_class> enc_values(const paillier::PublicKey& pk, std::string_view m,
                                            Rng& rng) const = 0;
  virtual std::optional<Body> cenc_body(const paillier::PublicKey& pk,
                                        std::span<const mpz_class> c, std::string_view m2,
                                        std::string_view m3, Rng& rng) const = 0;
  virtual std::optional<std::string> dec_flag0(const paillier::SecretKey& sk,
                                               const paillier::PublicKey& pk,
                                               std::span<const mpz_class> c) const = 0;
  virtual std::optional<std::string> dec_flag1(const paillier::SecretKey& sk,
                                               const paillier::PublicKey& pk,
                                               std::span<const mpz_class> c,
                                               const std::optional<Bytes>& ae) const = 0;
  virtual Body sim_body(const paillier::PublicKey& pk, Rng& rng) const;

  // Shape check shared by cenc and dec.
  bool well_formed(const paillier::PublicKey& pk, const CondCiphertext& c) const;

  SchemeParams params_;

  friend class OrScheme;
};

std::unique_ptr<Scheme> make_scheme(const SchemeParams& params);

// Payload size of a concrete ciphertext under the scheme's framing rule.
std::size_t payload_size(const Scheme& scheme, const paillier::PublicKey& pk,
                         const CondCiphertext& c);

// c^R * (N+1)^(-R*m2 + x) * r^N mod N^2 for fresh R in Z_N and r in Z*_N.
// Empty when c is not a unit modulo N^2.
std::optional<mpz_class> cond_slot(const paillier::PublicKey& pk, const mpz_class& c,
                                   const mpz_class& m2, const mpz_class& x, Rng& rng);

}  // namespace condenc
