#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "condenc/kdf.hpp"
#include "condenc/random.hpp"

namespace condenc::typtop {

// cond: waitlist holds conditional encryptions under the typo scheme.
// legacy: waitlist holds ordinary public-key encryptions of every failure.
enum class Backend { cond, legacy };
enum class Decision { acpt, rjct };
std::string to_string(Decision d);

std::string to_string(Backend b);
Backend parse_backend(std::string_view s);

struct VaultParams {
  Backend backend = Backend::cond;
  std::size_t n = 32;  // password length policy
  unsigned modulus_bits = 1024;
  bool insecure = false;
  std::size_t waitlist_size = 10;
  std::size_t cache_size = 10;
  KdfProfile kdf = KdfProfile::fast;

  friend bool operator==(const VaultParams&, const VaultParams&) = default;
};

struct UserRecord {
  Bytes salt;
  Bytes pk;
  Bytes c_pwd;
  std::vector<Bytes> waitlist;
  std::vector<Bytes> cache;  // cache[0] opens with the registered password
  std::uint64_t counter = 0;
  KdfProfile kdf_profile = KdfProfile::fast;

  friend bool operator==(const UserRecord&, const UserRecord&) = default;
};

struct VaultState {
  static constexpr int kVersion = 1;
  VaultParams params;
  std::map<std::string, UserRecord> users;

  friend bool operator==(const VaultState&, const VaultState&) = default;
};

VaultState initialization(const VaultParams& params);
bool is_registered(const VaultState& st, const std::string& id);

// Both dispatch on st.params.backend. Over-length passwords at registration
// raise PolicyError; corrupt records raise IntegrityError and leave the
// input state untouched.
std::pair<VaultState, Decision> register_new_user(const VaultState& st, const std::string& id,
                                                  std::string_view pwd, Rng& rng);
std::pair<VaultState, Decision> login(const VaultState& st, const std::string& id,
                                      std::string_view pwd, Rng& rng);

// The same operations, refusing a state that is not on the legacy backend.
std::pair<VaultState, Decision> legacy_register(const VaultState& st, const std::string& id,
                                                std::string_view pwd, Rng& rng);
std::pair<VaultState, Decision> legacy_login(const VaultState& st, const std::string& id,
                                             std::string_view pwd, Rng& rng);

// Bytes of all per-user binary fields plus 8 for the counter.
std::size_t storage_bytes(const UserRecord& r);

// Writes the failed attempt at counter mod |W|, then shuffles W.
void place_failed_attempt(std::vector<Bytes>& waitlist, std::uint64_t counter, Bytes entry,
                          Rng& rng);

// Unlocks the record with a password the caller knows and decrypts every
// waitlist entry. Empty when the password opens no cache entry.
std::optional<std::vector<std::optional<std::string>>> open_waitlist(const VaultState& st,
                                                                     const std::string& id,
                                                                     std::string_view pwd);

enum class AttackResult { zero, one, inconclusive };

// Typo-privacy attack by someone who learned the registered password:
// unlock the secret key, decrypt the waitlist, and report which candidate
// is in it.
AttackResult legacy_attack(const VaultState& snapshot, const std::string& id,
                           std::string_view registered_pwd, std::string_view pwd0,
                           std::string_view pwd1);

struct AttackTally {
  std::size_t trials = 0, correct = 0, wrong = 0, inconclusive = 0;
};

// Per trial: a fresh vault registers a random password, one login fails
// with pwd_b for a uniform bit b, and legacy_attack runs on the snapshot.
AttackTally attack_game(const VaultParams& params, std::size_t trials, Rng& rng);

nlohmann::json to_json(const VaultState& st);
VaultState from_json(const nlohmann::json& j);  // IntegrityError on bad input
void save_state(const VaultState& st, const std::string& path);  // temp file + rename
VaultState load_state(const std::string& path);

}  // namespace condenc::typtop
