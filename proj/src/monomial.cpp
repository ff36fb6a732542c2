#include "orbitadm/monomial.hpp"

#include "orbitadm/errors.hpp"

namespace orbitadm {

std::optional<VectorQ> Subalgebra::coordinates(const VectorQ& v) const {
  if (dim() == 0) return is_zero(v) ? std::optional<VectorQ>(VectorQ{}) : std::nullopt;
  return solve_in_row_space(rows_, v);
}

Subalgebra check_subalgebra(std::shared_ptr<const LieAlgebra> algebra, const QMatrix& rows) {
  const std::size_t n = algebra->dim();
  if (rows.rows() > 0 && rows.cols() != n) throw DimensionMismatch("subalgebra generators", n, rows.cols());
  QMatrix gens = rows.rows() == 0 ? QMatrix(0, n) : rows;
  const std::size_t rank = rank_exact(gens);
  if (rank < gens.rows()) throw RankDeficient(rank, gens.rows());

  const RowEchelon echelon = row_reduce(gens);
  for (std::size_t i = 0; i < gens.rows(); ++i)
    for (std::size_t j = i + 1; j < gens.rows(); ++j) {
      const VectorQ residual = reduce_against(echelon, bracket(*algebra, gens.row(i), gens.row(j)));
      for (std::size_t k = 0; k < n; ++k)
        if (residual[k] != 0) throw NotClosed(i, j, k, residual[k]);
    }
  return Subalgebra(std::move(algebra), std::move(gens));
}

CharacterFunctional check_character(const Subalgebra& subalgebra, const VectorQ& f_values) {
  const std::size_t m = subalgebra.dim();
  if (f_values.size() != m) throw DimensionMismatch("functional values", m, f_values.size());
  const auto& rows = subalgebra.rows();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto coeffs = subalgebra.coordinates(bracket(subalgebra.algebra(), rows.row(i), rows.row(j)));
      // Closure was established by check_subalgebra.
      const Rational value = dot(*coeffs, f_values);
      if (value != 0) throw NotACharacter(i, j, value);
    }
  return CharacterFunctional(f_values);
}

MonomialDatum adapt_basis(const Subalgebra& subalgebra, const CharacterFunctional& functional) {
  const std::size_t n = subalgebra.algebra().dim();
  std::vector<VectorQ> rows = subalgebra.rows().row_list();
  std::vector<std::size_t> completion;
  std::size_t rank = rows.size();
  for (std::size_t k = 0; k < n && rows.size() < n; ++k) {
    rows.push_back(unit_vector(n, k));
    const std::size_t r = rank_exact(QMatrix::from_rows(rows, n));
    if (r > rank) {
      rank = r;
      completion.push_back(k);
    } else {
      rows.pop_back();
    }
  }
  QMatrix basis = QMatrix::from_rows(rows, n);
  QMatrix inv = *inverse(basis);
  return MonomialDatum(subalgebra, functional, std::move(basis), std::move(inv), std::move(completion));
}

MonomialDatum make_datum(std::shared_ptr<const LieAlgebra> algebra, const QMatrix& rows, const VectorQ& f_values) {
  Subalgebra sub = check_subalgebra(std::move(algebra), rows);
  CharacterFunctional f = check_character(sub, f_values);
  return adapt_basis(sub, f);
}

VectorQ point_on_variety(const MonomialDatum& datum, const VectorQ& x) {
  if (x.size() != datum.chart_dim()) throw DimensionMismatch("point_on_variety", datum.chart_dim(), x.size());
  // P l = (f, x) where P holds the adapted basis as rows.
  VectorQ values = datum.functional().values();
  values.insert(values.end(), x.begin(), x.end());
  return times_col(datum.adapted_basis_inverse(), values);
}

VectorQ adapted_coordinates(const MonomialDatum& datum, const VectorQ& ell) {
  if (ell.size() != datum.n()) throw DimensionMismatch("adapted_coordinates", datum.n(), ell.size());
  return times_col(datum.adapted_basis(), ell);
}

}  // namespace orbitadm
