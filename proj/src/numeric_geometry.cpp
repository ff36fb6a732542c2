#include "orbitadm/numeric_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "orbitadm/errors.hpp"
#include "orbitadm/orbit_rank.hpp"

namespace orbitadm {

Eigen::MatrixXd to_eigen(const QMatrix& m) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).get_d();
  return out;
}

Eigen::VectorXd to_eigen(const VectorQ& v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i].get_d();
  return out;
}

Eigen::MatrixXd matrix_exp(const Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Eigen::MatrixXd scaled = a / std::ldexp(1.0, squarings);

  // Taylor series; with ||scaled|| <= 1/2 twenty terms are far below roundoff.
  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
  for (int k = 1; k <= 20; ++k) {
    term = term * scaled / static_cast<double>(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() == 0.0) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

Eigen::MatrixXd ad_exp(const LieAlgebra& algebra, const VectorQ& z, double t) {
  return matrix_exp(t * to_eigen(ad_matrix(algebra, z)));
}

Eigen::VectorXd coadjoint_apply(const LieAlgebra& algebra, const QMatrix& generators, const GroupCoordinates& t,
                                const Eigen::VectorXd& ell) {
  const std::size_t n = algebra.dim();
  if (static_cast<std::size_t>(ell.size()) != n) throw DimensionMismatch("coadjoint_apply: functional", n, static_cast<std::size_t>(ell.size()));
  if (t.size() != generators.rows()) throw DimensionMismatch("coadjoint_apply: coordinates", generators.rows(), t.size());
  // Ad(s^-1) = exp(-t_k ad W_k) ... exp(-t_1 ad W_1); (s.l)(W) = l(Ad(s^-1) W).
  Eigen::MatrixXd ad_inv = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t k = generators.rows(); k-- > 0;) {
    if (t[k] == 0.0) continue;
    ad_inv = ad_inv * ad_exp(algebra, generators.row(k), -t[k]);
  }
  return (ell.transpose() * ad_inv).transpose();
}

Eigen::VectorXd coadjoint_apply(const LieAlgebra& algebra, const GroupCoordinates& t, const Eigen::VectorXd& ell) {
  return coadjoint_apply(algebra, QMatrix::identity(algebra.dim()), t, ell);
}

namespace {

Eigen::VectorXd chart_functional(const MonomialDatum& datum, const std::vector<double>& x) {
  const auto& f = datum.functional().values();
  Eigen::VectorXd values(static_cast<Eigen::Index>(datum.n()));
  for (std::size_t j = 0; j < datum.m(); ++j) values(static_cast<Eigen::Index>(j)) = f[j].get_d();
  for (std::size_t r = 0; r < x.size(); ++r) values(static_cast<Eigen::Index>(datum.m() + r)) = x[r];
  return to_eigen(datum.adapted_basis_inverse()) * values;
}

}  // namespace

Eigen::VectorXd phi_in_chart(const MonomialDatum& datum, const GroupCoordinates& t, const std::vector<double>& x) {
  if (t.size() != datum.n()) throw DimensionMismatch("phi_in_chart: group coordinates", datum.n(), t.size());
  if (x.size() != datum.chart_dim()) throw DimensionMismatch("phi_in_chart: chart point", datum.chart_dim(), x.size());
  const Eigen::VectorXd moved = coadjoint_apply(datum.algebra(), datum.adapted_basis(), t, chart_functional(datum, x));
  return to_eigen(datum.adapted_basis()) * moved;
}

Eigen::MatrixXd moment_matrix_numeric(const MonomialDatum& datum, const Eigen::VectorXd& ell) {
  const auto& basis = datum.adapted_basis();
  Eigen::MatrixXd m(static_cast<Eigen::Index>(datum.m()), static_cast<Eigen::Index>(datum.n()));
  for (std::size_t i = 0; i < datum.m(); ++i)
    for (std::size_t j = 0; j < datum.n(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          to_eigen(bracket(datum.algebra(), basis.row(i), basis.row(j))).dot(ell);
  return m;
}

std::size_t numerical_rank(const Eigen::MatrixXd& m, double rel_tol) {
  if (!(rel_tol > 0)) throw std::invalid_argument("numerical_rank: rel_tol must be positive");
  if (m.size() == 0) return 0;
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues();
  const double largest = sv.size() > 0 ? sv(0) : 0.0;
  if (largest <= std::numeric_limits<double>::min()) return 0;
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_tol * largest) ++rank;
  return rank;
}

JacobianReport fd_jacobian(const MonomialDatum& datum, const VectorQ& x, double h, double rel_tol) {
  if (!(h > 0)) throw std::invalid_argument("fd_jacobian: step must be positive");
  if (x.size() != datum.chart_dim()) throw DimensionMismatch("fd_jacobian: chart point", datum.chart_dim(), x.size());
  const std::size_t n = datum.n();
  const std::size_t m = datum.m();
  const std::size_t inputs = 2 * n - m;

  std::vector<double> x0(x.size());
  for (std::size_t r = 0; r < x.size(); ++r) x0[r] = x[r].get_d();

  JacobianReport rep;
  rep.jacobian.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(inputs));
  for (std::size_t col = 0; col < inputs; ++col) {
    GroupCoordinates tp(n, 0.0);
    GroupCoordinates tm(n, 0.0);
    std::vector<double> xp = x0;
    std::vector<double> xm = x0;
    if (col < n) {
      tp[col] = h;
      tm[col] = -h;
    } else {
      xp[col - n] += h;
      xm[col - n] -= h;
    }
    rep.jacobian.col(static_cast<Eigen::Index>(col)) =
        (phi_in_chart(datum, tp, xp) - phi_in_chart(datum, tm, xm)) / (2.0 * h);
  }

  const QMatrix exact_m = moment_matrix(datum, point_on_variety(datum, x));
  const Eigen::MatrixXd analytic = to_eigen(exact_m);
  const auto mi = static_cast<Eigen::Index>(m);
  const auto ni = static_cast<Eigen::Index>(n);
  const auto ci = static_cast<Eigen::Index>(n - m);
  if (m > 0) {
    rep.max_dev_topleft = (rep.jacobian.topLeftCorner(mi, ni) - analytic).cwiseAbs().maxCoeff();
    if (n > m) rep.max_dev_topright = rep.jacobian.topRightCorner(mi, ci).cwiseAbs().maxCoeff();
  }
  if (n > m)
    rep.max_dev_bottomright =
        (rep.jacobian.bottomRightCorner(ci, ci) - Eigen::MatrixXd::Identity(ci, ci)).cwiseAbs().maxCoeff();
  rep.numerical_rank = numerical_rank(rep.jacobian, rel_tol);
  rep.exact_rank_m = rank_exact(exact_m);
  rep.expected_rank = rep.exact_rank_m + n - m;
  return rep;
}

}  // namespace orbitadm
