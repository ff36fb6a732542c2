#include "orbitadm/orbit_rank.hpp"

#include <algorithm>
#include <numeric>

#include "orbitadm/errors.hpp"
#include "orbitadm/random.hpp"

namespace orbitadm {

namespace {

/// [Y_i, W_j] for every generator i and adapted basis vector j.
std::vector<std::vector<VectorQ>> generator_brackets(const MonomialDatum& datum) {
  const auto& basis = datum.adapted_basis();
  std::vector<std::vector<VectorQ>> out(datum.m());
  for (std::size_t i = 0; i < datum.m(); ++i)
    for (std::size_t j = 0; j < datum.n(); ++j)
      out[i].push_back(bracket(datum.algebra(), basis.row(i), basis.row(j)));
  return out;
}

/// Next k-combination of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> c(k);
  std::iota(c.begin(), c.end(), std::size_t{0});
  return c;
}

}  // namespace

QMatrix moment_matrix(const MonomialDatum& datum, const VectorQ& ell) {
  if (ell.size() != datum.n()) throw DimensionMismatch("moment_matrix", datum.n(), ell.size());
  const auto brackets = generator_brackets(datum);
  QMatrix m(datum.m(), datum.n());
  for (std::size_t i = 0; i < datum.m(); ++i)
    for (std::size_t j = 0; j < datum.n(); ++j) m(i, j) = dot(ell, brackets[i][j]);
  return m;
}

QMatrix skew_form(const LieAlgebra& algebra, const VectorQ& ell) {
  const std::size_t n = algebra.dim();
  if (ell.size() != n) throw DimensionMismatch("skew_form", n, ell.size());
  QMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      b(i, j) = dot(ell, algebra.basis_bracket(i, j));
      b(j, i) = -b(i, j);
    }
  return b;
}

StabilizerReport stabilizer_report(const MonomialDatum& datum, const VectorQ& ell) {
  StabilizerReport r;
  r.point = ell;
  const QMatrix m = moment_matrix(datum, ell);
  r.rank_m = rank_exact(m);
  r.dim_h_orbit = r.rank_m;
  const auto& gens = datum.subalgebra().rows();
  if (datum.m() > 0) {
    for (const auto& a : left_kernel(m)) r.h_stab_basis.push_back(row_times(a, gens));
  }
  const QMatrix b = skew_form(datum.algebra(), ell);
  r.g_stab_basis = right_kernel(b);
  r.dim_g_orbit = datum.n() - r.g_stab_basis.size();
  return r;
}

const char* to_string(GenericRankResult::Method method) {
  return method == GenericRankResult::Method::Symbolic ? "Symbolic" : "Probabilistic";
}

VectorQ sample_chart_point(const MonomialDatum& datum, std::int64_t bound, std::uint64_t seed, std::size_t trial) {
  Rng rng(derive_seed(seed, trial));
  VectorQ x(datum.chart_dim());
  for (auto& q : x) q = Rational(static_cast<long>(rng.uniform_int(-bound, bound)));
  return x;
}

GenericRankResult generic_h_orbit_dim(const MonomialDatum& datum, std::size_t trials, std::int64_t bound,
                                      std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("generic_h_orbit_dim: trials must be >= 1");
  if (bound < 0) throw std::invalid_argument("generic_h_orbit_dim: bound must be >= 0");
  GenericRankResult result;
  result.method = GenericRankResult::Method::Probabilistic;
  result.trials = trials;
  result.seed = seed;
  bool have_witness = false;
  for (std::size_t t = 0; t < trials; ++t) {
    VectorQ x = sample_chart_point(datum, bound, seed, t);
    const std::size_t r = rank_exact(moment_matrix(datum, point_on_variety(datum, x)));
    if (!have_witness || r > result.d_tau) {
      result.d_tau = r;
      result.witness = std::move(x);
      have_witness = true;
    }
    if (result.d_tau == datum.m()) break;  // cannot exceed m
  }
  result.is_free = result.d_tau == datum.m();
  return result;
}

PolyMatrix parametric_moment_matrix(const MonomialDatum& datum) {
  const std::size_t vars = datum.chart_dim();
  const std::size_t n = datum.n();
  // l_k(x) = sum_j Pinv(k, j) * (f, x)_j is affine in x.
  const QMatrix& inv = datum.adapted_basis_inverse();
  const VectorQ& f = datum.functional().values();
  std::vector<Polynomial> ell(n, Polynomial(vars));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < datum.m(); ++j)
      ell[k] += Polynomial::constant(vars, inv(k, j) * f[j]);
    for (std::size_t r = 0; r < vars; ++r)
      if (inv(k, datum.m() + r) != 0) ell[k] += inv(k, datum.m() + r) * Polynomial::variable(vars, r);
  }
  const auto brackets = generator_brackets(datum);
  PolyMatrix m(datum.m(), std::vector<Polynomial>(n, Polynomial(vars)));
  for (std::size_t i = 0; i < datum.m(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (brackets[i][j][k] != 0) m[i][j] += brackets[i][j][k] * ell[k];
  return m;
}

GenericRankResult symbolic_generic_rank(const MonomialDatum& datum, std::size_t threshold) {
  if (datum.n() > threshold) throw ThresholdExceeded(datum.n(), threshold);
  GenericRankResult result;
  result.method = GenericRankResult::Method::Symbolic;
  const std::size_t vars = datum.chart_dim();
  const PolyMatrix m = parametric_moment_matrix(datum);

  // Identically zero rows and columns never contribute to a nonzero minor.
  std::vector<std::size_t> live_rows;
  std::vector<std::size_t> live_cols;
  for (std::size_t i = 0; i < datum.m(); ++i)
    if (std::any_of(m[i].begin(), m[i].end(), [](const Polynomial& p) { return !p.is_zero(); }))
      live_rows.push_back(i);
  for (std::size_t j = 0; j < datum.n(); ++j)
    if (std::any_of(live_rows.begin(), live_rows.end(), [&](std::size_t i) { return !m[i][j].is_zero(); }))
      live_cols.push_back(j);

  Polynomial certificate = Polynomial::constant(vars, Rational(1));
  std::size_t k = std::min(live_rows.size(), live_cols.size());
  for (; k > 0; --k) {
    bool found = false;
    auto rs = first_combination(k);
    do {
      std::vector<std::size_t> rows(k);
      for (std::size_t a = 0; a < k; ++a) rows[a] = live_rows[rs[a]];
      auto cs = first_combination(k);
      do {
        std::vector<std::size_t> cols(k);
        for (std::size_t a = 0; a < k; ++a) cols[a] = live_cols[cs[a]];
        Polynomial det = minor_determinant(m, rows, cols);
        if (!det.is_zero()) {
          certificate = std::move(det);
          found = true;
        }
      } while (!found && next_combination(cs, live_cols.size()));
    } while (!found && next_combination(rs, live_rows.size()));
    if (found) break;
  }
  result.d_tau = k;
  result.is_free = k == datum.m();

  // Witness: the origin if the certificate survives there, else a deterministic
  // search over small integer points.
  VectorQ x = zero_vector(vars);
  Rng rng(derive_seed(0x5eed, vars));
  std::int64_t bound = 4;
  for (std::size_t attempt = 0; certificate.evaluate(x) == 0; ++attempt) {
    for (auto& q : x) q = Rational(static_cast<long>(rng.uniform_int(-bound, bound)));
    if (attempt % 16 == 15) bound *= 4;
  }
  result.witness = std::move(x);
  return result;
}

}  // namespace orbitadm
