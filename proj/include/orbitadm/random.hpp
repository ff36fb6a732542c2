#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "orbitadm/rational.hpp"

namespace orbitadm {

/// Independent sub-seed for stream `stream` of a root seed (splitmix64 mixing).
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream);

/// Seed from ORBITADM_SEED if set; throws std::invalid_argument if malformed.
std::optional<std::uint64_t> seed_from_environment();

/// Deterministic generator. Bounded draws use rejection sampling on raw
/// mt19937_64 output, so streams are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  /// Uniform double in [lo, hi).
  double uniform_real(double lo, double hi);
  /// p/q with p uniform in [-num_bound, num_bound], q uniform in [1, den_bound].
  Rational uniform_rational(std::int64_t num_bound, std::int64_t den_bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace orbitadm
