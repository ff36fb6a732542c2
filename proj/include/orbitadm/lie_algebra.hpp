#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbitadm/exact_linalg.hpp"
#include "orbitadm/rational.hpp"

namespace orbitadm {

/// Finite-dimensional real Lie algebra given by exact structure constants
/// [Z_i, Z_j] = sum_k c(i, j, k) Z_k, stored densely.
class LieAlgebra {
 public:
  struct Bracket {
    std::size_t i;
    std::size_t j;
    VectorQ value;
  };

  /// `constants` holds n^3 entries in (i, j, k) row-major order. No validity
  /// check is made here; see validate().
  LieAlgebra(std::string name, std::vector<std::string> basis_names, std::vector<Rational> constants);

  /// Builds from the brackets [Z_i, Z_j] for i != j, filling [Z_j, Z_i] by
  /// antisymmetry. Unlisted pairs are zero.
  static LieAlgebra from_brackets(std::string name, std::vector<std::string> basis_names,
                                  const std::vector<Bracket>& brackets);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  std::optional<std::size_t> index_of(const std::string& basis_name) const;

  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim() + j) * dim() + k];
  }
  const std::vector<Rational>& constants() const { return constants_; }

  /// [Z_i, Z_j] in basis coordinates.
  VectorQ basis_bracket(std::size_t i, std::size_t j) const;

 private:
  std::string name_;
  std::vector<std::string> names_;
  std::vector<Rational> constants_;
};

struct Violation {
  enum class Kind { Antisymmetry, Jacobi };
  Kind kind;
  std::size_t i;
  std::size_t j;
  std::size_t k;
  /// Antisymmetry: the entry c(i,j,k) + c(j,i,k). Jacobi: component k of the cyclic sum.
  std::size_t component;
  Rational residual;
};

std::string describe(const LieAlgebra& algebra, const Violation& v);

/// Empty iff antisymmetry and the Jacobi identity hold exactly.
std::vector<Violation> validate(const LieAlgebra& algebra);

VectorQ bracket(const LieAlgebra& algebra, const VectorQ& u, const VectorQ& v);

/// ad u as an n x n matrix; column j is [u, Z_j].
QMatrix ad_matrix(const LieAlgebra& algebra, const VectorQ& u);

/// Row-reduced spanning set of [A, B] for subspaces A, B given as row sets.
QMatrix bracket_span(const LieAlgebra& algebra, const QMatrix& a, const QMatrix& b);

struct Exponentiality {
  enum class Status { PassedSampling, FailedWithWitness, Skipped };
  Status status = Status::Skipped;
  std::optional<VectorQ> witness;
  std::size_t samples_checked = 0;
};

const char* to_string(Exponentiality::Status status);

struct StructureReport {
  bool is_valid = false;
  bool is_solvable = false;
  std::vector<std::size_t> derived_series_dims;
  std::vector<std::size_t> lower_central_dims;
  bool is_nilpotent = false;
  bool is_unimodular = false;
  Exponentiality exponentiality;
};

/// Tolerance for the floating point purely-imaginary eigenvalue screen.
inline constexpr double kImaginaryTolerance = 1e-9;

/// Eigenvalues of a rational square matrix. The zero eigenvalues are split off
/// exactly through the rational characteristic polynomial and returned as
/// exact zeros; the remaining roots come from a floating point eigensolve of
/// the companion matrix.
std::vector<std::complex<double>> eigenvalues(const QMatrix& a);

/// True if some eigenvalue has |Re| <= tol but |lambda| > tol.
bool has_purely_imaginary_eigenvalue(const QMatrix& ad, double tol = kImaginaryTolerance);

/// Derived and lower central series by exact elimination, unimodularity by
/// ad traces, exponentiality screened on every basis vector plus
/// `exp_samples` random rational elements drawn from `seed`.
StructureReport structure_report(const LieAlgebra& algebra, std::size_t exp_samples, std::uint64_t seed);

}  // namespace orbitadm
