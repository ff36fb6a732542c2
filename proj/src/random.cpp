#include "orbitadm/random.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

namespace orbitadm {

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream) {
  std::uint64_t z = root + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::optional<std::uint64_t> seed_from_environment() {
  const char* value = std::getenv("ORBITADM_SEED");
  if (value == nullptr || *value == '\0') return std::nullopt;
  const std::string text(value);
  if (text.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("ORBITADM_SEED must be a non-negative integer, got '" + text + "'");
  try {
    return static_cast<std::uint64_t>(std::stoull(text));
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("ORBITADM_SEED out of range: '" + text + "'");
  }
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("Rng::uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<std::int64_t>(engine_());
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw = engine_();
  while (draw >= limit) draw = engine_();
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + draw % range);
}

double Rng::uniform_real(double lo, double hi) {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

Rational Rng::uniform_rational(std::int64_t num_bound, std::int64_t den_bound) {
  const std::int64_t p = uniform_int(-num_bound, num_bound);
  const std::int64_t q = uniform_int(1, den_bound);
  return make_rational(static_cast<long>(p), static_cast<long>(q));
}

}  // namespace orbitadm
