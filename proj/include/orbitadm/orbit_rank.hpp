#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "orbitadm/exact_linalg.hpp"
#include "orbitadm/monomial.hpp"
#include "orbitadm/polynomial.hpp"

namespace orbitadm {

/// m x n matrix with entries l[Y_i, W_j], W the adapted basis (Y's then X's).
QMatrix moment_matrix(const MonomialDatum& datum, const VectorQ& ell);

/// n x n skew matrix l[Z_i, Z_j] in the original basis; its kernel is g(l).
QMatrix skew_form(const LieAlgebra& algebra, const VectorQ& ell);

struct StabilizerReport {
  VectorQ point;
  std::size_t rank_m = 0;
  std::size_t dim_h_orbit = 0;
  std::vector<VectorQ> h_stab_basis;  // original coordinates
  std::size_t dim_g_orbit = 0;
  std::vector<VectorQ> g_stab_basis;  // original coordinates
};

StabilizerReport stabilizer_report(const MonomialDatum& datum, const VectorQ& ell);

struct GenericRankResult {
  enum class Method { Probabilistic, Symbolic };
  std::size_t d_tau = 0;
  VectorQ witness;  // chart coordinates x
  Method method = Method::Probabilistic;
  std::size_t trials = 0;     // Probabilistic only
  std::uint64_t seed = 0;     // Probabilistic only
  bool is_free = false;
};

const char* to_string(GenericRankResult::Method method);

inline constexpr std::size_t kDefaultTrials = 20;
inline constexpr std::int64_t kDefaultBound = 1000000;
inline constexpr std::size_t kDefaultSymbolicThreshold = 8;

/// Integer chart point with coordinates uniform in [-bound, bound] for trial
/// `trial` of root seed `seed`.
VectorQ sample_chart_point(const MonomialDatum& datum, std::int64_t bound, std::uint64_t seed, std::size_t trial);

/// Maximum of rank M(l(x)) over `trials` random integer chart points. A single
/// trial misses the generic rank with probability at most
/// min(m, n) / (2 bound + 1).
GenericRankResult generic_h_orbit_dim(const MonomialDatum& datum, std::size_t trials = kDefaultTrials,
                                      std::int64_t bound = kDefaultBound, std::uint64_t seed = 0);

/// M(l(x)) with the chart coordinates x as indeterminates (entries are affine).
PolyMatrix parametric_moment_matrix(const MonomialDatum& datum);

/// Largest k with a k x k minor of the parametric moment matrix that is not
/// the zero polynomial. Throws ThresholdExceeded when n > threshold.
GenericRankResult symbolic_generic_rank(const MonomialDatum& datum,
                                        std::size_t threshold = kDefaultSymbolicThreshold);

}  // namespace orbitadm
