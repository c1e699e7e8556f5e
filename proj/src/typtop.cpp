#include "condenc/typtop.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include "condenc/authenc.hpp"
#include "condenc/bigint.hpp"
#include "condenc/errors.hpp"
#include "condenc/legacy_pke.hpp"
#include "condenc/or_scheme.hpp"
#include "condenc/paillier.hpp"
#include "condenc/predicates.hpp"
#include "condenc/wire.hpp"

namespace condenc::typtop {

namespace {

// Fixed-length password block for the legacy PKE: length byte, then the
// password zero-padded to n bytes. A length byte above n marks garbage.
Bytes encode_pw(std::string_view pwd, std::size_t n) {
  Bytes out(n + 1, 0);
  out[0] = static_cast<std::uint8_t>(pwd.size());
  std::copy(pwd.begin(), pwd.end(), out.begin() + 1);
  return out;
}

std::optional<std::string> decode_pw(const Bytes& b, std::size_t n) {
  if (b.size() != n + 1 || b[0] > n) return std::nullopt;
  return std::string(b.begin() + 1, b.begin() + 1 + b[0]);
}

class Ops {
 public:
  explicit Ops(const VaultParams& p) : p_(p) {}
  virtual ~Ops() = default;

  // Fills pk and c_pwd; returns the serialized secret key.
  virtual Bytes setup(UserRecord& r, std::string_view pwd, Rng& rng) const = 0;
  virtual Bytes dummy(const UserRecord& r, Rng& rng) const = 0;
  virtual Bytes failed(const UserRecord& r, std::string_view pwd, Rng& rng) const = 0;
  virtual std::optional<std::string> open(const UserRecord& r, const Bytes& sk,
                                          const Bytes& entry) const = 0;
  virtual std::string registered(const UserRecord& r, const Bytes& sk) const = 0;
  virtual bool sk_matches(const UserRecord& r, const Bytes& sk) const = 0;

 protected:
  bool fits(std::string_view pwd) const { return pwd.size() <= p_.n; }
  const VaultParams& p_;
};

class CondOps final : public Ops {
 public:
  explicit CondOps(const VaultParams& p) : Ops(p) {
    SchemeParams sp = SchemeParams::for_predicate(PredicateSpec::typo(p.n), p.n, p.modulus_bits);
    sp.insecure = p.insecure;
    scheme_ = OrScheme::typo(sp);
  }

  Bytes setup(UserRecord& r, std::string_view pwd, Rng& rng) const override {
    auto kp = scheme_->keygen(rng);
    r.pk = kp.pk.serialize();
    r.c_pwd = serialize(scheme_->enc(kp.pk, pwd, rng));
    return kp.sk.serialize();
  }

  Bytes dummy(const UserRecord& r, Rng& rng) const override {
    return serialize(scheme_->sim(pk(r), rng));
  }

  Bytes failed(const UserRecord& r, std::string_view pwd, Rng& rng) const override {
    // Outside the message space nothing can be a typo; store a dummy.
    if (!fits(pwd)) return dummy(r, rng);
    auto c = scheme_->cenc(pk(r), stored(r.c_pwd), pwd, pwd, rng);
    if (!c) throw IntegrityError("stored password ciphertext rejected by CEnc");
    return serialize(*c);
  }

  std::optional<std::string> open(const UserRecord& r, const Bytes& sk,
                                  const Bytes& entry) const override {
    return scheme_->dec(secret(sk), pk(r), stored(entry));
  }

  std::string registered(const UserRecord& r, const Bytes& sk) const override {
    auto m = scheme_->dec(secret(sk), pk(r), stored(r.c_pwd));
    if (!m) throw IntegrityError("stored password ciphertext does not decrypt");
    return *m;
  }

  bool sk_matches(const UserRecord& r, const Bytes& sk) const override {
    return secret(sk).p * secret(sk).q == pk(r).N;
  }

 private:
  static paillier::PublicKey pk(const UserRecord& r) {
    try {
      return paillier::PublicKey::deserialize(r.pk);
    } catch (const Error& e) {
      throw IntegrityError(std::string("public key: ") + e.what());
    }
  }
  static paillier::SecretKey secret(const Bytes& b) {
    try {
      return paillier::SecretKey::deserialize(b);
    } catch (const Error& e) {
      throw IntegrityError(std::string("secret key: ") + e.what());
    }
  }
  static CondCiphertext stored(const Bytes& b) {
    try {
      return deserialize_ciphertext(b);
    } catch (const Error& e) {
      throw IntegrityError(std::string("ciphertext: ") + e.what());
    }
  }

  std::unique_ptr<OrScheme> scheme_;
};

class LegacyOps final : public Ops {
 public:
  using Ops::Ops;

  Bytes setup(UserRecord& r, std::string_view pwd, Rng& rng) const override {
    auto kp = legacy::keygen(rng);
    r.pk = kp.pk;
    r.c_pwd = legacy::encrypt(r.pk, encode_pw(pwd, p_.n), rng);
    return kp.sk;
  }

  Bytes dummy(const UserRecord& r, Rng& rng) const override {
    Bytes garbage = rng.bytes(p_.n + 1);
    garbage[0] = 0xFF;
    return legacy::encrypt(r.pk, garbage, rng);
  }

  Bytes failed(const UserRecord& r, std::string_view pwd, Rng& rng) const override {
    if (!fits(pwd)) return dummy(r, rng);
    return legacy::encrypt(r.pk, encode_pw(pwd, p_.n), rng);
  }

  std::optional<std::string> open(const UserRecord&, const Bytes& sk,
                                  const Bytes& entry) const override {
    auto pt = legacy::decrypt(sk, entry);
    if (!pt) return std::nullopt;
    return decode_pw(*pt, p_.n);
  }

  std::string registered(const UserRecord& r, const Bytes& sk) const override {
    auto m = open(r, sk, r.c_pwd);
    if (!m) throw IntegrityError("stored password ciphertext does not decrypt");
    return *m;
  }

  bool sk_matches(const UserRecord& r, const Bytes& sk) const override {
    try {
      return legacy::matches(sk, r.pk);
    } catch (const Error&) {
      return false;
    }
  }
};

std::unique_ptr<Ops> make_ops(const VaultParams& p) {
  if (p.backend == Backend::cond) return std::make_unique<CondOps>(p);
  return std::make_unique<LegacyOps>(p);
}

void validate(const VaultParams& p, const UserRecord& r) {
  if (r.salt.size() != kSaltLen) throw IntegrityError("salt must be 16 bytes");
  if (r.waitlist.size() != p.waitlist_size) throw IntegrityError("waitlist has the wrong size");
  if (r.cache.empty() || r.cache.size() > p.cache_size)
    throw IntegrityError("cache size out of range");
  if (r.pk.empty() || r.c_pwd.empty()) throw IntegrityError("missing key material");
}

std::optional<Bytes> unlock(const UserRecord& r, std::string_view pwd) {
  const AeKey k = pkdf(pwd, r.salt, r.kdf_profile);
  for (const auto& entry : r.cache)
    if (auto sk = auth_dec(k, entry)) return sk;
  return std::nullopt;
}

}  // namespace

std::string to_string(Backend b) { return b == Backend::cond ? "cond" : "legacy"; }

std::string to_string(Decision d) { return d == Decision::acpt ? "acpt" : "rjct"; }

Backend parse_backend(std::string_view s) {
  if (s == "cond") return Backend::cond;
  if (s == "legacy") return Backend::legacy;
  throw InputError("unknown backend: " + std::string(s));
}

VaultState initialization(const VaultParams& params) {
  if (params.waitlist_size < 1 || params.cache_size < 1)
    throw ParameterError("waitlist and cache need capacity");
  if (params.n < 1 || params.n > 255) throw ParameterError("password policy n must be 1..255");
  return VaultState{params, {}};
}

bool is_registered(const VaultState& st, const std::string& id) {
  return st.users.count(id) != 0;
}

std::pair<VaultState, Decision> register_new_user(const VaultState& st, const std::string& id,
                                                  std::string_view pwd, Rng& rng) {
  if (is_registered(st, id)) return {st, Decision::rjct};
  if (pwd.size() > st.params.n)
    throw PolicyError("password longer than " + std::to_string(st.params.n) + " characters");
  auto ops = make_ops(st.params);
  UserRecord r;
  r.salt = rng.bytes(kSaltLen);
  r.kdf_profile = st.params.kdf;
  const Bytes sk = ops->setup(r, pwd, rng);
  r.cache.push_back(auth_enc(pkdf(pwd, r.salt, r.kdf_profile), sk, rng).serialize());
  for (std::size_t i = 0; i < st.params.waitlist_size; ++i) r.waitlist.push_back(ops->dummy(r, rng));
  VaultState next = st;
  next.users.emplace(id, std::move(r));
  return {std::move(next), Decision::acpt};
}

void place_failed_attempt(std::vector<Bytes>& waitlist, std::uint64_t counter, Bytes entry,
                          Rng& rng) {
  waitlist.at(counter % waitlist.size()) = std::move(entry);
  std::shuffle(waitlist.begin(), waitlist.end(), rng);
}

std::pair<VaultState, Decision> login(const VaultState& st, const std::string& id,
                                      std::string_view pwd, Rng& rng) {
  auto it = st.users.find(id);
  if (it == st.users.end()) return {st, Decision::rjct};
  const UserRecord& rec = it->second;
  validate(st.params, rec);
  auto ops = make_ops(st.params);

  VaultState next = st;
  UserRecord& out = next.users.at(id);
  const auto sk = unlock(rec, pwd);
  if (!sk) {
    place_failed_attempt(out.waitlist, out.counter, ops->failed(rec, pwd, rng), rng);
    ++out.counter;
    return {std::move(next), Decision::rjct};
  }
  if (!ops->sk_matches(rec, *sk)) throw IntegrityError("cached key does not match public key");

  const std::string reg = ops->registered(rec, *sk);
  std::map<std::string, std::size_t> weight;
  for (const auto& entry : rec.waitlist) {
    auto m = ops->open(rec, *sk, entry);
    if (m && *m != reg && p_typo(reg, *m, st.params.n)) ++weight[*m];
  }
  for (auto w = weight.begin(); w != weight.end();) {
    if (unlock(rec, w->first))
      w = weight.erase(w);
    else
      ++w;
  }
  // Weighted sampling without replacement until the cache is full.
  while (out.cache.size() < st.params.cache_size && !weight.empty()) {
    std::size_t total = 0;
    for (const auto& [m, c] : weight) total += c;
    std::size_t pick = rng.uniform(total);
    auto w = weight.begin();
    while (pick >= w->second) pick -= (w++)->second;
    out.cache.push_back(auth_enc(pkdf(w->first, rec.salt, rec.kdf_profile), *sk, rng).serialize());
    weight.erase(w);
  }
  std::shuffle(out.cache.begin() + 1, out.cache.end(), rng);
  for (auto& entry : out.waitlist) entry = ops->dummy(rec, rng);
  ++out.counter;
  return {std::move(next), Decision::acpt};
}

std::pair<VaultState, Decision> legacy_register(const VaultState& st, const std::string& id,
                                                std::string_view pwd, Rng& rng) {
  if (st.params.backend != Backend::legacy) throw InputError("state is not on the legacy backend");
  return register_new_user(st, id, pwd, rng);
}

std::pair<VaultState, Decision> legacy_login(const VaultState& st, const std::string& id,
                                             std::string_view pwd, Rng& rng) {
  if (st.params.backend != Backend::legacy) throw InputError("state is not on the legacy backend");
  return login(st, id, pwd, rng);
}

std::size_t storage_bytes(const UserRecord& r) {
  std::size_t s = r.salt.size() + r.pk.size() + r.c_pwd.size() + sizeof(r.counter);
  for (const auto& e : r.waitlist) s += e.size();
  for (const auto& e : r.cache) s += e.size();
  return s;
}

std::optional<std::vector<std::optional<std::string>>> open_waitlist(const VaultState& st,
                                                                     const std::string& id,
                                                                     std::string_view pwd) {
  auto it = st.users.find(id);
  if (it == st.users.end()) return std::nullopt;
  const UserRecord& rec = it->second;
  validate(st.params, rec);
  const auto sk = unlock(rec, pwd);
  if (!sk) return std::nullopt;
  auto ops = make_ops(st.params);
  std::vector<std::optional<std::string>> out;
  for (const auto& entry : rec.waitlist) out.push_back(ops->open(rec, *sk, entry));
  return out;
}

AttackResult legacy_attack(const VaultState& snapshot, const std::string& id,
                           std::string_view registered_pwd, std::string_view pwd0,
                           std::string_view pwd1) {
  // The waitlist is shuffled after every failure, so every entry is checked.
  auto opened = open_waitlist(snapshot, id, registered_pwd);
  if (!opened) return AttackResult::inconclusive;
  bool f0 = false, f1 = false;
  for (const auto& m : *opened) {
    if (!m) continue;
    f0 |= *m == pwd0;
    f1 |= *m == pwd1;
  }
  if (f0 != f1) return f0 ? AttackResult::zero : AttackResult::one;
  return AttackResult::inconclusive;
}

namespace {

std::string random_word(std::size_t len, Rng& rng) {
  std::string s(len, 'a');
  for (auto& ch : s) ch = static_cast<char>('a' + rng.uniform(26));
  return s;
}

}  // namespace

AttackTally attack_game(const VaultParams& params, std::size_t trials, Rng& rng) {
  AttackTally tally;
  const std::size_t len = std::min<std::size_t>(8, params.n);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::string pwd = random_word(len, rng);
    std::string cand[2];
    for (int i = 0; i < 2; ++i) {
      do {
        cand[i] = random_word(len, rng);
      } while (p_typo(pwd, cand[i], params.n) || (i == 1 && cand[1] == cand[0]));
    }
    const int b = static_cast<int>(rng.uniform(2));
    auto st = register_new_user(initialization(params), "u", pwd, rng).first;
    st = login(st, "u", cand[b], rng).first;
    const AttackResult r = legacy_attack(st, "u", pwd, cand[0], cand[1]);
    ++tally.trials;
    if (r == AttackResult::inconclusive)
      ++tally.inconclusive;
    else if ((r == AttackResult::one) == (b == 1))
      ++tally.correct;
    else
      ++tally.wrong;
  }
  return tally;
}

namespace {

Bytes unb64(const nlohmann::json& j) {
  if (!j.is_string()) throw IntegrityError("expected a base64 string");
  try {
    return from_base64(j.get<std::string>());
  } catch (const MalformedError& e) {
    throw IntegrityError(e.what());
  }
}

}  // namespace

nlohmann::json to_json(const VaultState& st) {
  nlohmann::json j;
  j["version"] = VaultState::kVersion;
  const auto& p = st.params;
  j["params"] = {{"backend", to_string(p.backend)},     {"n", p.n},
                 {"modulus_bits", p.modulus_bits},      {"insecure", p.insecure},
                 {"waitlist_size", p.waitlist_size},    {"cache_size", p.cache_size},
                 {"kdf", to_string(p.kdf)}};
  j["users"] = nlohmann::json::object();
  for (const auto& [id, r] : st.users) {
    nlohmann::json u;
    u["salt"] = to_base64(r.salt);
    u["pk"] = to_base64(r.pk);
    u["c_pwd"] = to_base64(r.c_pwd);
    u["waitlist"] = nlohmann::json::array();
    for (const auto& e : r.waitlist) u["waitlist"].push_back(to_base64(e));
    u["cache"] = nlohmann::json::array();
    for (const auto& e : r.cache) u["cache"].push_back(to_base64(e));
    u["counter"] = r.counter;
    u["kdf_profile"] = to_string(r.kdf_profile);
    j["users"][id] = std::move(u);
  }
  return j;
}

VaultState from_json(const nlohmann::json& j) {
  try {
    if (j.at("version").get<int>() != VaultState::kVersion)
      throw IntegrityError("unsupported vault version");
    const auto& jp = j.at("params");
    VaultParams p;
    p.backend = parse_backend(jp.at("backend").get<std::string>());
    p.n = jp.at("n").get<std::size_t>();
    p.modulus_bits = jp.at("modulus_bits").get<unsigned>();
    p.insecure = jp.at("insecure").get<bool>();
    p.waitlist_size = jp.at("waitlist_size").get<std::size_t>();
    p.cache_size = jp.at("cache_size").get<std::size_t>();
    p.kdf = parse_kdf_profile(jp.at("kdf").get<std::string>());
    VaultState st = initialization(p);
    for (const auto& [id, u] : j.at("users").items()) {
      UserRecord r;
      r.salt = unb64(u.at("salt"));
      r.pk = unb64(u.at("pk"));
      r.c_pwd = unb64(u.at("c_pwd"));
      for (const auto& e : u.at("waitlist")) r.waitlist.push_back(unb64(e));
      for (const auto& e : u.at("cache")) r.cache.push_back(unb64(e));
      r.counter = u.at("counter").get<std::uint64_t>();
      r.kdf_profile = parse_kdf_profile(u.at("kdf_profile").get<std::string>());
      validate(p, r);
      st.users.emplace(id, std::move(r));
    }
    return st;
  } catch (const IntegrityError&) {
    throw;
  } catch (const std::exception& e) {
    throw IntegrityError(std::string("malformed vault state: ") + e.what());
  }
}

void save_state(const VaultState& st, const std::string& path) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot write " + tmp);
    f << to_json(st).dump(1) << '\n';
    if (!f.flush()) throw Error("write failed: " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

VaultState load_state(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(ss.str());
  } catch (const std::exception& e) {
    throw IntegrityError(std::string("vault is not valid JSON: ") + e.what());
  }
  return from_json(j);
}

}  // namespace condenc::typtop
