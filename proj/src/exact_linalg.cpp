#include "orbitadm/exact_linalg.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace orbitadm {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<VectorQ>& rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

VectorQ QMatrix::row(std::size_t i) const {
  return VectorQ(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

VectorQ QMatrix::col(std::size_t j) const {
  VectorQ v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void QMatrix::set_row(std::size_t i, const VectorQ& v) {
  if (v.size() != cols_) throw std::invalid_argument("QMatrix::set_row: length mismatch");
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

std::vector<VectorQ> QMatrix::row_list() const {
  std::vector<VectorQ> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool QMatrix::is_zero() const {
  for (const auto& q : data_)
    if (q != 0) return false;
  return true;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("QMatrix product: shape mismatch");
  QMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("QMatrix sum: shape mismatch");
  QMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

QMatrix operator*(const Rational& s, const QMatrix& a) {
  QMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

VectorQ row_times(const VectorQ& v, const QMatrix& a) {
  if (v.size() != a.rows()) throw std::invalid_argument("row_times: length mismatch");
  VectorQ out = zero_vector(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] += v[i] * a(i, j);
  }
  return out;
}

VectorQ times_col(const QMatrix& a, const VectorQ& v) {
  if (v.size() != a.cols()) throw std::invalid_argument("times_col: length mismatch");
  VectorQ out = zero_vector(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

Rational dot(const VectorQ& a, const VectorQ& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::size_t rank_exact(const QMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  // Scale each row by the lcm of its denominators.
  std::vector<mpz_class> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * cols + j]; };

  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(piv, j), at(rank, j));
    const mpz_class p = at(rank, c);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = at(i, j) * p - at(i, c) * at(rank, j);
        mpz_divexact(at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, c) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

RowEchelon row_reduce(const QMatrix& m) {
  QMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational factor = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= factor * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  QMatrix reduced(r, a.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) reduced(i, j) = a(i, j);
  return {std::move(reduced), std::move(pivots)};
}

std::vector<VectorQ> right_kernel(const QMatrix& a) {
  const RowEchelon e = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<VectorQ> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    VectorQ v = zero_vector(a.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<VectorQ> left_kernel(const QMatrix& a) { return right_kernel(a.transpose()); }

std::optional<VectorQ> solve_in_row_space(const QMatrix& rows, const VectorQ& v) {
  if (v.size() != rows.cols()) throw std::invalid_argument("solve_in_row_space: length mismatch");
  // Solve rows^T c = v by eliminating the augmented system [rows^T | v].
  const std::size_t m = rows.rows();
  QMatrix aug(rows.cols(), m + 1);
  for (std::size_t j = 0; j < rows.cols(); ++j) {
    for (std::size_t i = 0; i < m; ++i) aug(j, i) = rows(i, j);
    aug(j, m) = v[j];
  }
  const RowEchelon e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == m) return std::nullopt;
  VectorQ c = zero_vector(m);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) c[e.pivots[r]] = e.reduced(r, m);
  return c;
}

VectorQ reduce_against(const RowEchelon& echelon, const VectorQ& v) {
  VectorQ r = v;
  for (std::size_t i = 0; i < echelon.pivots.size(); ++i) {
    const Rational factor = r[echelon.pivots[i]];
    if (factor == 0) continue;
    for (std::size_t j = 0; j < r.size(); ++j) r[j] -= factor * echelon.reduced(i, j);
  }
  return r;
}

std::optional<QMatrix> inverse(const QMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = a.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const RowEchelon e = row_reduce(aug);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Rational trace(const QMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("trace: matrix not square");
  Rational t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

// Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
std::vector<Rational> characteristic_polynomial(const QMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("characteristic_polynomial: matrix not square");
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  QMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    QMatrix next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    c[n - k] = -trace(a * mk) / Rational(static_cast<long>(k));
  }
  return c;
}

}  // namespace orbitadm
