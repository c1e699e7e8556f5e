// condenc: key generation, conditional-encryption round trips, benchmark
// sweeps, dataset filtering, the typo vault, and the waitlist attack demo.
//
// Exit codes: 0 success/accept, 1 reject/predicate false, 2 usage or
// parameter error, 3 integrity error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "condenc/bench.hpp"
#include "condenc/bigint.hpp"
#include "condenc/errors.hpp"
#include "condenc/scheme.hpp"
#include "condenc/typtop.hpp"

using namespace condenc;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kReject = 1, kUsage = 2, kIntegrity = 3;

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view data) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f || !f.write(data.data(), static_cast<std::streamsize>(data.size())))
    throw InputError("cannot write " + path);
}

SchemeParams scheme_params(const std::string& spec, std::size_t n, unsigned bits, bool insecure) {
  SchemeParams sp = SchemeParams::for_predicate(PredicateSpec::parse(spec), n, bits);
  sp.insecure = insecure;
  return sp;
}

// Key files: <prefix>.pk carries the scheme parameters alongside the
// public key so roundtrip can rebuild the scheme; <prefix>.sk holds p, q.
struct KeyFiles {
  SchemeParams params;
  paillier::KeyPair kp;
};

KeyFiles load_keys(const std::string& prefix) {
  try {
    const json pk = json::parse(read_file(prefix + ".pk"));
    const json sk = json::parse(read_file(prefix + ".sk"));
    KeyFiles k;
    k.params = scheme_params(pk.at("scheme").get<std::string>(), pk.at("n").get<std::size_t>(),
                             pk.at("bits").get<unsigned>(), pk.at("insecure").get<bool>());
    k.kp.pk = paillier::PublicKey::deserialize(from_base64(pk.at("pk").get<std::string>()));
    k.kp.sk = paillier::SecretKey::deserialize(from_base64(sk.at("sk").get<std::string>()));
    if (k.kp.sk.p * k.kp.sk.q != k.kp.pk.N) throw IntegrityError("secret key does not match");
    return k;
  } catch (const json::exception& e) {
    throw IntegrityError(std::string("bad key file: ") + e.what());
  } catch (const MalformedError& e) {
    throw IntegrityError(std::string("bad key file: ") + e.what());
  }
}

std::vector<std::size_t> parse_n_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size() || v == 0) throw InputError("bad n list: " + s);
    out.push_back(v);
  }
  if (out.empty()) throw InputError("empty n list");
  return out;
}

struct VaultOpts {
  std::string state, backend = "cond", kdf = "fast", user, password;
  std::size_t n = 32;
  unsigned bits = 1024;
  bool insecure = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conditional encryption toolkit"};
  app.require_subcommand(1);

  // keygen
  std::string kg_scheme = "typo:32", kg_out;
  std::size_t kg_n = 32;
  unsigned kg_bits = 1024;
  bool kg_insecure = false;
  auto* keygen = app.add_subcommand("keygen", "Generate a key pair for a scheme");
  keygen->add_option("--scheme", kg_scheme, "eq, caps, ham:<l>:<n>, ed1 or typo:<n>");
  keygen->add_option("--n", kg_n, "maximum message length");
  keygen->add_option("--bits", kg_bits, "modulus size");
  keygen->add_flag("--insecure", kg_insecure, "allow moduli below 1024 bits");
  keygen->add_option("--out", kg_out, "output prefix (.pk and .sk are appended)")->required();

  // roundtrip
  std::string rt_keys, rt_m1, rt_m2, rt_m3;
  bool rt_reuse = false;
  auto* roundtrip = app.add_subcommand("roundtrip", "Run enc, cenc and dec; print m3 or BOTTOM");
  roundtrip->add_option("--keys", rt_keys, "key prefix from keygen")->required();
  roundtrip->add_option("m1", rt_m1, "hidden message")->required();
  roundtrip->add_option("m2", rt_m2, "control message")->required();
  roundtrip->add_option("m3", rt_m3, "payload (defaults to m2)");
  roundtrip->add_flag("--reuse-flag1", rt_reuse, "feed the CEnc output back into CEnc");

  // bench
  std::string b_scheme, b_n = "8,16,32", b_dataset, b_out;
  unsigned b_bits = 1024;
  std::size_t b_trials = 5;
  bool b_unopt = false, b_insecure = false;
  auto* bench = app.add_subcommand("bench", "Timing and size sweep over n");
  bench->add_option("--scheme", b_scheme, "predicate spec; n in ham/typo is swept")->required();
  bench->add_option("--n", b_n, "comma-separated message lengths");
  bench->add_option("--bits", b_bits, "modulus size");
  bench->add_option("--trials", b_trials, "timed runs per n after one warmup");
  bench->add_flag("--unoptimized", b_unopt, "plain exhaustive Hamming decryption");
  bench->add_flag("--insecure", b_insecure, "allow moduli below 1024 bits");
  bench->add_option("--dataset", b_dataset, "password<TAB>typo pairs for predicate-true rows");
  bench->add_option("--out", b_out, ".dat output path (stdout if omitted)");

  // dataset-filter
  std::string df_in, df_pred, df_out;
  std::size_t df_max = 32;
  auto* dfilter = app.add_subcommand("dataset-filter", "Keep pairs satisfying a predicate");
  dfilter->add_option("--in", df_in, "input TSV")->required();
  dfilter->add_option("--predicate", df_pred, "predicate spec")->required();
  dfilter->add_option("--max-len", df_max, "length policy");
  dfilter->add_option("--out", df_out, "output TSV")->required();

  // typtop
  VaultOpts vo;
  auto* typtop = app.add_subcommand("typtop", "Typo-tolerant password vault");
  typtop->require_subcommand(1);
  auto* t_init = typtop->add_subcommand("init", "Create an empty vault state file");
  auto* t_reg = typtop->add_subcommand("register", "Register a user");
  auto* t_login = typtop->add_subcommand("login", "Log in; exit 0 accepts, 1 rejects");
  auto* t_inspect = typtop->add_subcommand("inspect", "Print per-user storage");
  for (auto* sc : {t_init, t_reg, t_login, t_inspect})
    sc->add_option("--state", vo.state, "vault state file")->required();
  t_init->add_option("--backend", vo.backend, "cond or legacy");
  t_init->add_option("--kdf", vo.kdf, "fast or mhf");
  t_init->add_option("--n", vo.n, "maximum password length");
  t_init->add_option("--bits", vo.bits, "modulus size for the cond backend");
  t_init->add_flag("--insecure", vo.insecure, "allow moduli below 1024 bits");
  for (auto* sc : {t_reg, t_login}) {
    sc->add_option("--user", vo.user, "user id")->required();
    sc->add_option("--password", vo.password, "password")->required();
  }

  // attack-demo
  std::string a_backend = "legacy";
  std::size_t a_trials = 100, a_n = 32;
  unsigned a_bits = 1024;
  bool a_insecure = false;
  auto* attack = app.add_subcommand("attack-demo", "Waitlist attack by a password-aware adversary");
  attack->add_option("--backend", a_backend, "cond or legacy");
  attack->add_option("--trials", a_trials, "number of games");
  attack->add_option("--n", a_n, "maximum password length");
  attack->add_option("--bits", a_bits, "modulus size for the cond backend");
  attack->add_flag("--insecure", a_insecure, "allow moduli below 1024 bits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    auto rng = rng_from_env();

    if (*keygen) {
      const SchemeParams sp = scheme_params(kg_scheme, kg_n, kg_bits, kg_insecure);
      const auto scheme = make_scheme(sp);
      const auto kp = scheme->keygen(*rng);
      json pk = {{"scheme", kg_scheme},   {"n", sp.n},
                 {"bits", kg_bits},       {"insecure", kg_insecure},
                 {"pk", to_base64(kp.pk.serialize())}};
      json sk = {{"sk", to_base64(kp.sk.serialize())}};
      write_file(kg_out + ".pk", pk.dump(1) + "\n");
      write_file(kg_out + ".sk", sk.dump(1) + "\n");
      std::cout << "wrote " << kg_out << ".pk and " << kg_out << ".sk (" << bit_length(kp.pk.N)
                << "-bit N)\n";
      return kOk;
    }

    if (*roundtrip) {
      const auto keys = load_keys(rt_keys);
      const auto scheme = make_scheme(keys.params);
      const std::string m3 = roundtrip->count("m3") ? rt_m3 : rt_m2;
      const auto c = scheme->enc(keys.kp.pk, rt_m1, *rng);
      auto cc = scheme->cenc(keys.kp.pk, c, rt_m2, m3, *rng);
      if (rt_reuse && cc) {
        cc = scheme->cenc(keys.kp.pk, *cc, rt_m2, m3, *rng);
        if (!cc) {
          std::cout << "BOTTOM\n";
          std::cerr << "note: CEnc only accepts ciphertexts produced by Enc (flag 0)\n";
          return kReject;
        }
      }
      if (!cc) throw IntegrityError("CEnc rejected a fresh ciphertext");
      const auto out = scheme->dec(keys.kp.sk, keys.kp.pk, *cc);
      if (!out) {
        std::cout << "BOTTOM\n";
        return kReject;
      }
      std::cout << *out << "\n";
      return kOk;
    }

    if (*bench) {
      bench::BenchConfig cfg;
      cfg.predicate = PredicateSpec::parse(b_scheme);
      cfg.n_list = parse_n_list(b_n);
      cfg.modulus_bits = b_bits;
      cfg.trials = b_trials;
      cfg.optimized = !b_unopt;
      cfg.insecure = b_insecure;
      if (!b_dataset.empty()) {
        std::ifstream f(b_dataset);
        if (!f) throw InputError("cannot read " + b_dataset);
        auto tsv = bench::read_tsv(f);
        for (const auto& w : tsv.warnings) std::cerr << "warning: " << w << "\n";
        cfg.dataset = std::move(tsv.pairs);
      }
      const auto report =
          bench::run_bench(cfg, *rng, [](const std::string& m) { std::cerr << m << "\n"; });
      if (!b_dataset.empty())
        std::cerr << "skipped " << report.skipped_length << " pairs over the length policy, "
                  << report.skipped_false << " predicate-false pairs\n";
      const std::string dat = bench::format_dat(report.rows);
      if (b_out.empty())
        std::cout << dat;
      else
        write_file(b_out, dat);
      return kOk;
    }

    if (*dfilter) {
      std::ifstream f(df_in);
      if (!f) throw InputError("cannot read " + df_in);
      const auto spec = PredicateSpec::parse(df_pred);
      const auto tsv = bench::read_tsv(f);
      for (const auto& w : tsv.warnings) std::cerr << "warning: " << w << "\n";
      const auto kept = bench::filter_pairs(tsv.pairs, spec, df_max);
      std::ostringstream os;
      bench::write_tsv(os, kept);
      write_file(df_out, os.str());
      std::cout << "kept " << kept.size() << " of " << tsv.total << "\n";
      return kOk;
    }

    if (*typtop) {
      using namespace condenc::typtop;
      if (*t_init) {
        VaultParams p;
        p.backend = parse_backend(vo.backend);
        p.kdf = parse_kdf_profile(vo.kdf);
        p.n = vo.n;
        p.modulus_bits = vo.bits;
        p.insecure = vo.insecure;
        save_state(initialization(p), vo.state);
        return kOk;
      }
      const VaultState st = load_state(vo.state);
      if (*t_inspect) {
        std::cout << "backend " << to_string(st.params.backend) << "\n";
        for (const auto& [id, rec] : st.users)
          std::cout << id << " " << storage_bytes(rec) << " bytes, cache " << rec.cache.size()
                    << ", counter " << rec.counter << "\n";
        return kOk;
      }
      const bool reg = static_cast<bool>(*t_reg);
      auto [next, decision] = reg ? register_new_user(st, vo.user, vo.password, *rng)
                                  : login(st, vo.user, vo.password, *rng);
      save_state(next, vo.state);
      std::cout << to_string(decision) << "\n";
      return decision == Decision::acpt ? kOk : kReject;
    }

    if (*attack) {
      typtop::VaultParams p;
      p.backend = typtop::parse_backend(a_backend);
      p.n = a_n;
      p.modulus_bits = a_bits;
      p.insecure = a_insecure;
      const auto t = typtop::attack_game(p, a_trials, *rng);
      std::cout << "backend " << a_backend << "\n";
      if (t.trials == 0) return kOk;
      std::printf("trials %zu correct %zu wrong %zu inconclusive %zu success %.1f%%\n", t.trials,
                  t.correct, t.wrong, t.inconclusive,
                  100.0 * static_cast<double>(t.correct) / static_cast<double>(t.trials));
      return kOk;
    }
  } catch (const IntegrityError& e) {
    std::cerr << "integrity error: " << e.what() << "\n";
    return kIntegrity;
  } catch (const MalformedError& e) {
    std::cerr << "integrity error: " << e.what() << "\n";
    return kIntegrity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
