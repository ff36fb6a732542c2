#include "orbitadm/lie_algebra.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "orbitadm/errors.hpp"
#include "orbitadm/random.hpp"

namespace orbitadm {

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis_names,
                       std::vector<Rational> constants)
    : name_(std::move(name)), names_(std::move(basis_names)), constants_(std::move(constants)) {
  const std::size_t n = names_.size();
  if (n == 0) throw std::invalid_argument("LieAlgebra: dimension must be positive");
  if (constants_.size() != n * n * n) throw DimensionMismatch("structure constants", n * n * n, constants_.size());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (names_[a] == names_[b]) throw std::invalid_argument("LieAlgebra: duplicate basis name " + names_[a]);
}

LieAlgebra LieAlgebra::from_brackets(std::string name, std::vector<std::string> basis_names,
                                     const std::vector<Bracket>& brackets) {
  const std::size_t n = basis_names.size();
  std::vector<Rational> c(n * n * n);
  for (const auto& br : brackets) {
    if (br.i >= n || br.j >= n) throw std::out_of_range("from_brackets: basis index");
    if (br.value.size() != n) throw DimensionMismatch("bracket value", n, br.value.size());
    for (std::size_t k = 0; k < n; ++k) {
      c[(br.i * n + br.j) * n + k] = br.value[k];
      c[(br.j * n + br.i) * n + k] = -br.value[k];
    }
  }
  return LieAlgebra(std::move(name), std::move(basis_names), std::move(c));
}

std::optional<std::size_t> LieAlgebra::index_of(const std::string& basis_name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == basis_name) return i;
  return std::nullopt;
}

VectorQ LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  VectorQ v(dim());
  for (std::size_t k = 0; k < dim(); ++k) v[k] = c(i, j, k);
  return v;
}

std::string describe(const LieAlgebra& algebra, const Violation& v) {
  const auto& nm = algebra.basis_names();
  std::ostringstream os;
  if (v.kind == Violation::Kind::Antisymmetry) {
    os << "antisymmetry violated at (" << nm[v.i] << ", " << nm[v.j] << ", " << nm[v.k]
       << "): c[" << nm[v.i] << "][" << nm[v.j] << "][" << nm[v.k] << "] + c[" << nm[v.j] << "]["
       << nm[v.i] << "][" << nm[v.k] << "] = " << v.residual.get_str();
  } else {
    os << "Jacobi identity violated at (" << nm[v.i] << ", " << nm[v.j] << ", " << nm[v.k]
       << "): component " << nm[v.component] << " of the cyclic sum is " << v.residual.get_str();
  }
  return os.str();
}

std::vector<Violation> validate(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  std::vector<Violation> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational r = algebra.c(i, j, k) + algebra.c(j, i, k);
        if (r != 0) out.push_back({Violation::Kind::Antisymmetry, i, j, k, k, std::move(r)});
      }

  // [[Z_i,Z_j],Z_k] + [[Z_j,Z_k],Z_i] + [[Z_k,Z_i],Z_j], expanded through c.
  auto cyclic = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t comp) {
    Rational s = 0;
    for (std::size_t p = 0; p < n; ++p) {
      s += algebra.c(i, j, p) * algebra.c(p, k, comp);
      s += algebra.c(j, k, p) * algebra.c(p, i, comp);
      s += algebra.c(k, i, p) * algebra.c(p, j, comp);
    }
    return s;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t comp = 0; comp < n; ++comp) {
          Rational r = cyclic(i, j, k, comp);
          if (r != 0) out.push_back({Violation::Kind::Jacobi, i, j, k, comp, std::move(r)});
        }
  return out;
}

VectorQ bracket(const LieAlgebra& algebra, const VectorQ& u, const VectorQ& v) {
  const std::size_t n = algebra.dim();
  if (u.size() != n) throw DimensionMismatch("bracket: left operand", n, u.size());
  if (v.size() != n) throw DimensionMismatch("bracket: right operand", n, v.size());
  VectorQ out = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j] == 0) continue;
      const Rational w = u[i] * v[j];
      for (std::size_t k = 0; k < n; ++k)
        if (algebra.c(i, j, k) != 0) out[k] += w * algebra.c(i, j, k);
    }
  }
  return out;
}

QMatrix ad_matrix(const LieAlgebra& algebra, const VectorQ& u) {
  const std::size_t n = algebra.dim();
  if (u.size() != n) throw DimensionMismatch("ad_matrix", n, u.size());
  QMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const VectorQ col = bracket(algebra, u, unit_vector(n, j));
    for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
  }
  return m;
}

QMatrix bracket_span(const LieAlgebra& algebra, const QMatrix& a, const QMatrix& b) {
  std::vector<VectorQ> rows;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.rows(); ++j) rows.push_back(bracket(algebra, a.row(i), b.row(j)));
  if (rows.empty()) return QMatrix(0, algebra.dim());
  return row_reduce(QMatrix::from_rows(rows, algebra.dim())).reduced;
}

const char* to_string(Exponentiality::Status status) {
  switch (status) {
    case Exponentiality::Status::PassedSampling: return "PassedSampling";
    case Exponentiality::Status::FailedWithWitness: return "FailedWithWitness";
    case Exponentiality::Status::Skipped: return "Skipped";
  }
  return "Skipped";
}

std::vector<std::complex<double>> eigenvalues(const QMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Rational> cp = characteristic_polynomial(a);
  std::size_t zeros = 0;
  while (zeros < n && cp[zeros] == 0) ++zeros;
  std::vector<std::complex<double>> out(zeros, {0.0, 0.0});
  const std::size_t deg = n - zeros;
  if (deg == 0) return out;
  // Companion matrix of the monic factor x^deg + ... + cp[zeros].
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(deg), static_cast<Eigen::Index>(deg));
  for (std::size_t i = 1; i < deg; ++i) companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < deg; ++i)
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(deg - 1)) = -cp[zeros + i].get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) out.push_back(solver.eigenvalues()[i]);
  return out;
}

bool has_purely_imaginary_eigenvalue(const QMatrix& ad, double tol) {
  for (const auto& lambda : eigenvalues(ad))
    if (std::abs(lambda.real()) <= tol && std::abs(lambda) > tol) return true;
  return false;
}

namespace {

std::vector<std::size_t> series_dims(const LieAlgebra& algebra, bool derived) {
  const std::size_t n = algebra.dim();
  const QMatrix whole = QMatrix::identity(n);
  QMatrix current = whole;
  std::vector<std::size_t> dims{n};
  while (current.rows() > 0) {
    QMatrix next = bracket_span(algebra, derived ? current : whole, current);
    if (next.rows() == current.rows()) break;
    current = std::move(next);
    dims.push_back(current.rows());
  }
  return dims;
}

}  // namespace

StructureReport structure_report(const LieAlgebra& algebra, std::size_t exp_samples, std::uint64_t seed) {
  StructureReport report;
  report.is_valid = validate(algebra).empty();
  report.derived_series_dims = series_dims(algebra, true);
  report.is_solvable = report.derived_series_dims.back() == 0;
  report.lower_central_dims = series_dims(algebra, false);
  report.is_nilpotent = report.lower_central_dims.back() == 0;

  const std::size_t n = algebra.dim();
  report.is_unimodular = true;
  for (std::size_t i = 0; i < n; ++i) {
    Rational t = 0;
    for (std::size_t j = 0; j < n; ++j) t += algebra.c(i, j, j);
    if (t != 0) report.is_unimodular = false;
  }

  if (!report.is_valid || !report.is_solvable) return report;

  auto& ex = report.exponentiality;
  ex.status = Exponentiality::Status::PassedSampling;
  auto check = [&](const VectorQ& u) {
    ++ex.samples_checked;
    if (has_purely_imaginary_eigenvalue(ad_matrix(algebra, u))) {
      ex.status = Exponentiality::Status::FailedWithWitness;
      ex.witness = u;
      return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < n; ++i)
    if (!check(unit_vector(n, i))) return report;
  for (std::size_t s = 0; s < exp_samples; ++s) {
    Rng rng(derive_seed(seed, s));
    VectorQ u(n);
    for (auto& q : u) q = rng.uniform_rational(100, 10);
    if (!check(u)) return report;
  }
  return report;
}

}  // namespace orbitadm
