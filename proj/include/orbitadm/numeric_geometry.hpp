#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

#include "orbitadm/lie_algebra.hpp"
#include "orbitadm/monomial.hpp"

namespace orbitadm {

/// Coordinates of the second kind: s = exp(t_1 W_1) ... exp(t_k W_k).
using GroupCoordinates = std::vector<double>;

Eigen::MatrixXd to_eigen(const QMatrix& m);
Eigen::VectorXd to_eigen(const VectorQ& v);

/// exp(t ad Z) by scaling and squaring around a Taylor core.
Eigen::MatrixXd ad_exp(const LieAlgebra& algebra, const VectorQ& z, double t);
Eigen::MatrixXd matrix_exp(const Eigen::MatrixXd& a);

/// s . l = l o Ad(s^-1) for s = exp(t_1 Z_1) ... exp(t_n Z_n), Z the algebra basis.
Eigen::VectorXd coadjoint_apply(const LieAlgebra& algebra, const GroupCoordinates& t, const Eigen::VectorXd& ell);

/// Same, with the factors taken along the rows of `generators` (k x n).
Eigen::VectorXd coadjoint_apply(const LieAlgebra& algebra, const QMatrix& generators, const GroupCoordinates& t,
                                const Eigen::VectorXd& ell);

/// Adapted dual coordinates of phi(alpha(t, x)): group factors run along the
/// adapted basis, outputs are the values on Y_1..Y_m, X_1..X_{n-m}.
Eigen::VectorXd phi_in_chart(const MonomialDatum& datum, const GroupCoordinates& t, const std::vector<double>& x);

inline constexpr double kDefaultStep = 1e-4;
inline constexpr double kDefaultRankTolerance = 1e-8;

struct JacobianReport {
  Eigen::MatrixXd jacobian;  // n x (2n - m)
  double max_dev_topleft = 0;
  double max_dev_topright = 0;
  double max_dev_bottomright = 0;
  std::size_t numerical_rank = 0;
  std::size_t exact_rank_m = 0;
  std::size_t expected_rank = 0;  // rank M(l) + n - m
};

/// Central-difference Jacobian of phi_in_chart at (0, x), compared against the
/// block form [[M(l), 0], [*, I]]. `x` is an exact chart point.
JacobianReport fd_jacobian(const MonomialDatum& datum, const VectorQ& x, double h = kDefaultStep,
                           double rel_tol = kDefaultRankTolerance);

/// Floating point M(l) for a floating point functional l (original coordinates).
Eigen::MatrixXd moment_matrix_numeric(const MonomialDatum& datum, const Eigen::VectorXd& ell);

/// Number of singular values above rel_tol times the largest one.
std::size_t numerical_rank(const Eigen::MatrixXd& m, double rel_tol = kDefaultRankTolerance);

}  // namespace orbitadm
