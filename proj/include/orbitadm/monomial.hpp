#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "orbitadm/exact_linalg.hpp"
#include "orbitadm/lie_algebra.hpp"

namespace orbitadm {

/// Subalgebra h of g, spanned by the rows Y_1..Y_m (original coordinates).
class Subalgebra {
 public:
  const LieAlgebra& algebra() const { return *algebra_; }
  std::shared_ptr<const LieAlgebra> algebra_ptr() const { return algebra_; }
  const QMatrix& rows() const { return rows_; }
  std::size_t dim() const { return rows_.rows(); }

  /// Coefficients of v in the generators; nullopt if v is not in h.
  std::optional<VectorQ> coordinates(const VectorQ& v) const;

 private:
  friend Subalgebra check_subalgebra(std::shared_ptr<const LieAlgebra>, const QMatrix&);
  Subalgebra(std::shared_ptr<const LieAlgebra> algebra, QMatrix rows)
      : algebra_(std::move(algebra)), rows_(std::move(rows)) {}

  std::shared_ptr<const LieAlgebra> algebra_;
  QMatrix rows_;
};

/// Character functional f on h, given by f_j = f(Y_j).
class CharacterFunctional {
 public:
  const VectorQ& values() const { return values_; }

 private:
  friend CharacterFunctional check_character(const Subalgebra&, const VectorQ&);
  explicit CharacterFunctional(VectorQ values) : values_(std::move(values)) {}
  VectorQ values_;
};

/// Throws RankDeficient or NotClosed. `rows` is m x n (m may be 0).
Subalgebra check_subalgebra(std::shared_ptr<const LieAlgebra> algebra, const QMatrix& rows);

/// Throws NotACharacter if f([Y_i, Y_j]) != 0 for some i < j.
CharacterFunctional check_character(const Subalgebra& subalgebra, const VectorQ& f_values);

/// The monomial datum (h, f) with the adapted basis Y_1..Y_m, X_1..X_{n-m}.
class MonomialDatum {
 public:
  const LieAlgebra& algebra() const { return subalgebra_.algebra(); }
  const Subalgebra& subalgebra() const { return subalgebra_; }
  const CharacterFunctional& functional() const { return functional_; }

  std::size_t n() const { return algebra().dim(); }
  std::size_t m() const { return subalgebra_.dim(); }
  /// Dimension of the spectral variety A = f + h^perp.
  std::size_t chart_dim() const { return n() - m(); }

  /// Rows are the adapted basis Y_1..Y_m, X_1..X_{n-m} in original coordinates.
  const QMatrix& adapted_basis() const { return basis_; }
  const QMatrix& adapted_basis_inverse() const { return basis_inv_; }
  /// Original-basis indices of the completion vectors X_r.
  const std::vector<std::size_t>& completion_indices() const { return completion_; }

 private:
  friend MonomialDatum adapt_basis(const Subalgebra&, const CharacterFunctional&);
  MonomialDatum(Subalgebra s, CharacterFunctional f, QMatrix basis, QMatrix inv, std::vector<std::size_t> completion)
      : subalgebra_(std::move(s)),
        functional_(std::move(f)),
        basis_(std::move(basis)),
        basis_inv_(std::move(inv)),
        completion_(std::move(completion)) {}

  Subalgebra subalgebra_;
  CharacterFunctional functional_;
  QMatrix basis_;
  QMatrix basis_inv_;
  std::vector<std::size_t> completion_;
};

/// Completes the generators greedily with standard basis vectors, lowest index first.
MonomialDatum adapt_basis(const Subalgebra& subalgebra, const CharacterFunctional& functional);

/// Convenience: check_subalgebra, check_character and adapt_basis in sequence.
MonomialDatum make_datum(std::shared_ptr<const LieAlgebra> algebra, const QMatrix& rows, const VectorQ& f_values);

/// The functional l in A with l(Y_j) = f_j and l(X_r) = x_r, in original
/// coordinates (l_k = l(Z_k)).
VectorQ point_on_variety(const MonomialDatum& datum, const VectorQ& x);

/// Values of l on the adapted basis: (l(Y_1), .., l(Y_m), l(X_1), ..).
VectorQ adapted_coordinates(const MonomialDatum& datum, const VectorQ& ell);

}  // namespace orbitadm
