#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace condenc {

using Bytes = std::vector<std::uint8_t>;

// Source of randomness injected into every probabilistic operation.
// Satisfies UniformRandomBitGenerator so it can drive std::shuffle.
class Rng {
 public:
  using result_type = std::uint64_t;

  virtual ~Rng() = default;
  virtual void fill(std::uint8_t* out, std::size_t len) = 0;

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() { return next_u64(); }

  std::uint64_t next_u64();
  // Uniform in [0, bound); bound must be nonzero.
  std::uint64_t uniform(std::uint64_t bound);
  // Uniform in [0, bound); bound must be positive.
  mpz_class uniform_below(const mpz_class& bound);
  mpz_class random_bits(unsigned bits);
  Bytes bytes(std::size_t len);
};

// OS entropy.
class SystemRng final : public Rng {
 public:
  SystemRng();
  void fill(std::uint8_t* out, std::size_t len) override;
};

// ChaCha20 keystream keyed by a 64-bit seed. Reproducible across runs.
class SeededRng final : public Rng {
 public:
  explicit SeededRng(std::uint64_t seed);
  void fill(std::uint8_t* out, std::size_t len) override;

 private:
  void refill();

  std::uint8_t key_[32];
  std::uint64_t block_ = 0;
  std::uint8_t buf_[512];
  std::size_t pos_ = sizeof(buf_);
};

// SeededRng if CONDENC_SEED is set to an integer, SystemRng otherwise.
std::unique_ptr<Rng> rng_from_env();

}  // namespace condenc
