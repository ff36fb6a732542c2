#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "orbitadm/rational.hpp"

namespace orbitadm {

/// Dense row-major rational matrix.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<VectorQ>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  VectorQ row(std::size_t i) const;
  VectorQ col(std::size_t j) const;
  void set_row(std::size_t i, const VectorQ& v);
  std::vector<VectorQ> row_list() const;

  QMatrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const Rational& s, const QMatrix& a);

/// Row vector times matrix: (v^T A)_j.
VectorQ row_times(const VectorQ& v, const QMatrix& a);
/// Matrix times column vector.
VectorQ times_col(const QMatrix& a, const VectorQ& v);

Rational dot(const VectorQ& a, const VectorQ& b);

/// Exact rank by fraction-free (Bareiss) elimination over the integers, after
/// clearing denominators row by row.
std::size_t rank_exact(const QMatrix& m);

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon {
  QMatrix reduced;  // only the nonzero rows are kept
  std::vector<std::size_t> pivots;
};
RowEchelon row_reduce(const QMatrix& m);

/// Basis of {x : A x = 0}, one vector per free column.
std::vector<VectorQ> right_kernel(const QMatrix& a);
/// Basis of {y : y^T A = 0}.
std::vector<VectorQ> left_kernel(const QMatrix& a);

/// Coefficients c with v = sum_i c_i * rows(i), if v lies in the row space.
/// Rows are assumed linearly independent.
std::optional<VectorQ> solve_in_row_space(const QMatrix& rows, const VectorQ& v);

/// v minus its reduction against the row space (zero iff v is in the span).
VectorQ reduce_against(const RowEchelon& echelon, const VectorQ& v);

/// Exact inverse; std::nullopt when singular.
std::optional<QMatrix> inverse(const QMatrix& a);

/// Trace and characteristic polynomial coefficients of a square matrix.
/// charpoly[k] is the coefficient of x^k; charpoly[n] == 1.
Rational trace(const QMatrix& a);
std::vector<Rational> characteristic_polynomial(const QMatrix& a);

}  // namespace orbitadm
