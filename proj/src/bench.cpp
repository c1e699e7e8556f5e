#include "condenc/bench.hpp"

#include <chrono>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "condenc/errors.hpp"
#include "condenc/scheme.hpp"

namespace condenc::bench {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string random_printable(std::size_t len, Rng& rng) {
  std::string s(len, '\0');
  for (auto& ch : s) ch = static_cast<char>('!' + rng.uniform(94));
  return s;
}

PredicateSpec at_length(PredicateSpec p, std::size_t n) {
  if (p.kind == PredicateSpec::Kind::hamming || p.kind == PredicateSpec::Kind::typo) p.n = n;
  return p;
}

}  // namespace

BenchReport run_bench(const BenchConfig& cfg, Rng& rng,
                      const std::function<void(const std::string&)>& log) {
  if (cfg.trials < 1) throw InputError("trials must be positive");
  if (cfg.n_list.empty()) throw InputError("empty n list");
  BenchReport report;
  for (std::size_t n : cfg.n_list) {
    SchemeParams sp = SchemeParams::for_predicate(at_length(cfg.predicate, n), n, cfg.modulus_bits);
    sp.insecure = cfg.insecure;
    if (!cfg.optimized) sp.set_unoptimized();
    auto scheme = make_scheme(sp);

    std::vector<TypoPair> usable;
    if (!cfg.dataset.empty()) {
      for (const auto& pr : cfg.dataset) {
        if (pr.password.size() > n || pr.typo.size() > n) {
          ++report.skipped_length;
        } else if (!scheme->predicate(pr.password, pr.typo)) {
          ++report.skipped_false;
        } else {
          usable.push_back(pr);
        }
      }
      if (usable.empty())
        throw InputError("no predicate-true dataset pairs fit n=" + std::to_string(n));
    }

    if (log) log("n=" + std::to_string(n) + ": keygen");
    const auto kp = scheme->keygen(rng);

    BenchRow row;
    row.L = n;
    row.ctxt_size = scheme->payload_size(kp.pk, 0);
    row.cond_ctxt_size = scheme->payload_size(kp.pk, 1);
    for (std::size_t t = 0; t <= cfg.trials; ++t) {
      std::string m1, m2;
      if (usable.empty()) {
        do {
          m1 = random_printable(n, rng);
          m2 = random_printable(n, rng);
        } while (scheme->predicate(m1, m2));
      } else {
        const auto& pr = usable[rng.uniform(usable.size())];
        m1 = pr.password;
        m2 = pr.typo;
      }
      auto t0 = Clock::now();
      const auto c = scheme->enc(kp.pk, m1, rng);
      const double enc = ms_since(t0);
      t0 = Clock::now();
      const auto cc = scheme->cenc(kp.pk, c, m2, rng);
      const double cenc = ms_since(t0);
      if (!cc) throw IntegrityError("CEnc rejected a fresh ciphertext");
      t0 = Clock::now();
      const auto out = scheme->dec(kp.sk, kp.pk, *cc);
      const double cdec = ms_since(t0);
      if (out.has_value() != scheme->predicate(m1, m2))
        throw IntegrityError("decryption disagrees with the plaintext predicate");
      if (t == 0) continue;  // warmup
      row.enc_ms += enc;
      row.cenc_ms += cenc;
      row.cdec_ms += cdec;
    }
    row.enc_ms /= static_cast<double>(cfg.trials);
    row.cenc_ms /= static_cast<double>(cfg.trials);
    row.cdec_ms /= static_cast<double>(cfg.trials);
    if (log) log("n=" + std::to_string(n) + ": done");
    report.rows.push_back(row);
  }
  return report;
}

std::string format_dat(const std::vector<BenchRow>& rows) {
  std::string out(kDatHeader);
  out += '\n';
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%zu %.3f %.3f %.3f %zu %zu\n", r.L, r.enc_ms, r.cenc_ms,
                  r.cdec_ms, r.ctxt_size, r.cond_ctxt_size);
    out += buf;
  }
  return out;
}

std::vector<BenchRow> parse_dat(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kDatHeader) throw MalformedError("missing .dat header");
  std::vector<BenchRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    BenchRow r;
    std::string extra;
    if (!(ls >> r.L >> r.enc_ms >> r.cenc_ms >> r.cdec_ms >> r.ctxt_size >> r.cond_ctxt_size) ||
        (ls >> extra))
      throw MalformedError("bad .dat row: " + line);
    rows.push_back(r);
  }
  return rows;
}

TsvResult read_tsv(std::istream& in) {
  TsvResult res;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ++res.total;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos || tab == 0 ||
        tab + 1 == line.size()) {
      res.warnings.push_back("line " + std::to_string(lineno) + ": expected password<TAB>typo");
      continue;
    }
    res.pairs.push_back({line.substr(0, tab), line.substr(tab + 1)});
  }
  return res;
}

void write_tsv(std::ostream& out, const std::vector<TypoPair>& pairs) {
  for (const auto& p : pairs) out << p.password << '\t' << p.typo << '\n';
}

std::vector<TypoPair> filter_pairs(const std::vector<TypoPair>& pairs, const PredicateSpec& spec,
                                   std::size_t max_len) {
  std::vector<TypoPair> kept;
  for (const auto& p : pairs) {
    if (p.password.size() > max_len || p.typo.size() > max_len) continue;
    // p_ham rejects inputs longer than its own n.
    if (spec.n && (p.password.size() > spec.n || p.typo.size() > spec.n)) continue;
    if (evaluate(spec, p.password, p.typo)) kept.push_back(p);
  }
  return kept;
}

}  // namespace condenc::bench
