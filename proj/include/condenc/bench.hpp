#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "condenc/predicates.hpp"
#include "condenc/random.hpp"

namespace condenc::bench {

struct BenchRow {
  std::size_t L = 0;
  double enc_ms = 0, cenc_ms = 0, cdec_ms = 0;
  std::size_t ctxt_size = 0, cond_ctxt_size = 0;
};

struct TypoPair {
  std::string password, typo;
  friend bool operator==(const TypoPair&, const TypoPair&) = default;
};

struct BenchConfig {
  PredicateSpec predicate;  // for ham and typo, n is replaced per row
  std::vector<std::size_t> n_list{32};
  unsigned modulus_bits = 1024;
  std::size_t trials = 5;
  bool optimized = true;
  bool insecure = false;
  // Non-empty switches to dataset mode: predicate-true pairs drawn from here.
  std::vector<TypoPair> dataset;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::size_t skipped_length = 0;  // dataset pairs longer than n, summed over rows
  std::size_t skipped_false = 0;   // dataset pairs for which the predicate fails
};

// One warmup, then `trials` timed runs per n. Without a dataset, (m1, m2)
// are fresh uniformly random predicate-false pairs of length n.
BenchReport run_bench(const BenchConfig& cfg, Rng& rng,
                      const std::function<void(const std::string&)>& log = {});

inline constexpr std::string_view kDatHeader = "L Enc CondEnc CondDec CtxtSize CondCtxtSize";

std::string format_dat(const std::vector<BenchRow>& rows);
// Throws MalformedError on a wrong header or a bad row.
std::vector<BenchRow> parse_dat(std::string_view text);

struct TsvResult {
  std::vector<TypoPair> pairs;
  std::size_t total = 0;
  std::vector<std::string> warnings;  // one per malformed line
};

// password<TAB>typo per line; blank lines are ignored, malformed ones skipped.
TsvResult read_tsv(std::istream& in);
void write_tsv(std::ostream& out, const std::vector<TypoPair>& pairs);

// Rows where the plaintext predicate holds and both sides fit in max_len.
std::vector<TypoPair> filter_pairs(const std::vector<TypoPair>& pairs, const PredicateSpec& spec,
                                   std::size_t max_len);

}  // namespace condenc::bench
