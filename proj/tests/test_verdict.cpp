#include <doctest.h>

#include "orbitadm/errors.hpp"
#include "orbitadm/verdict.hpp"
#include "test_support.hpp"

using namespace orbitadm;
using namespace orbitadm::testing;

namespace {

using SK = SpectralVerdict::Kind;
using AK = AdmissibilityVerdict::Kind;

FullReport report(const std::string& name, std::uint64_t seed = 0) {
  const ProblemFile p = problem(name);
  ReportConfig config;
  config.seed = seed;
  return full_report(p.algebra, p.generator_matrix(), p.functional_values(), config);
}

// Subalgebra generated by a few random sparse vectors, closed under brackets.
QMatrix random_subalgebra(Rng& rng, const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<VectorQ> span;
  const auto k = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(n)));
  for (std::size_t i = 0; i < k; ++i) {
    VectorQ v(n);
    for (auto& x : v)
      if (rng.uniform_int(0, 2) == 0) x = rng.uniform_int(-2, 2);
    span.push_back(v);
  }
  auto basis = [&](const std::vector<VectorQ>& rows) {
    if (rows.empty()) return QMatrix(0, n);
    return row_reduce(QMatrix::from_rows(rows, n)).reduced;
  };
  QMatrix current = basis(span);
  while (true) {
    std::vector<VectorQ> grown = current.row_list();
    for (std::size_t i = 0; i < current.rows(); ++i)
      for (std::size_t j = i + 1; j < current.rows(); ++j) grown.push_back(bracket(g, current.row(i), current.row(j)));
    QMatrix next = basis(grown);
    if (next.rows() == current.rows()) return current;
    current = std::move(next);
  }
}

// Random f vanishing on [h, h].
VectorQ random_character(Rng& rng, const Subalgebra& h) {
  const std::size_t m = h.dim();
  std::vector<VectorQ> constraints;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      constraints.push_back(*h.coordinates(bracket(h.algebra(), h.rows().row(i), h.rows().row(j))));
  std::vector<VectorQ> allowed;
  if (constraints.empty()) {
    for (std::size_t i = 0; i < m; ++i) allowed.push_back(unit_vector(m, i));
  } else {
    allowed = right_kernel(QMatrix::from_rows(constraints, m));
  }
  VectorQ f = zero_vector(m);
  for (const auto& b : allowed) {
    const Rational c = rng.uniform_int(0, 3) == 0 ? Rational(0) : Rational(rng.uniform_int(-3, 3));
    for (std::size_t i = 0; i < m; ++i) f[i] += c * b[i];
  }
  return f;
}

void check_table(const SpectralVerdict& s, const AdmissibilityVerdict& a) {
  CHECK_FALSE((s.kind == SK::Singular && a.kind == AK::Admissible));
  CHECK_FALSE((!a.unimodular && s.kind == SK::AbsolutelyContinuous && a.kind != AK::Admissible));
  CHECK((s.kind == SK::AbsolutelyContinuous) == (s.d_tau == s.m));
  CHECK(s.witness.has_value() == (s.kind == SK::AbsolutelyContinuous));
  CHECK(a.is_theorem == (a.kind != AK::ConjecturallyNotAdmissible));
}

}  // namespace

TEST_CASE("spectral_verdict examples") {
  {
    const MonomialDatum d = datum("axb_f1");
    const SpectralVerdict v = spectral_verdict(d, generic_h_orbit_dim(d));
    CHECK(v.kind == SK::AbsolutelyContinuous);
    CHECK(v.d_tau == 1);
    CHECK(v.witness.has_value());
  }
  {
    const MonomialDatum d = datum("h3_yz");
    const SpectralVerdict v = spectral_verdict(d, generic_h_orbit_dim(d));
    CHECK(v.kind == SK::Singular);
    CHECK(v.d_tau == 1);
    CHECK(v.m == 2);
    CHECK_FALSE(v.witness.has_value());
  }
  {
    const MonomialDatum d = datum(heisenberg3(), {}, {});
    CHECK(spectral_verdict(d, generic_h_orbit_dim(d)).kind == SK::AbsolutelyContinuous);
  }
}

TEST_CASE("admissibility_verdict table") {
  SpectralVerdict ac;
  ac.kind = SK::AbsolutelyContinuous;
  SpectralVerdict singular;
  singular.kind = SK::Singular;

  const AdmissibilityVerdict a = admissibility_verdict(ac, false);
  CHECK(a.kind == AK::Admissible);
  CHECK(a.reason == AdmissibilityVerdict::Reason::FreeActionNonunimodular);
  CHECK(a.is_theorem);

  for (bool unimodular : {false, true}) {
    const AdmissibilityVerdict s = admissibility_verdict(singular, unimodular);
    CHECK(s.kind == AK::NotAdmissible);
    CHECK(s.reason == AdmissibilityVerdict::Reason::FailsNecessaryCondition);
    CHECK(s.is_theorem);
    CHECK(s.unimodular == unimodular);
  }

  const AdmissibilityVerdict c = admissibility_verdict(ac, true);
  CHECK(c.kind == AK::ConjecturallyNotAdmissible);
  CHECK(c.reason == AdmissibilityVerdict::Reason::UnimodularConjecture);
  CHECK_FALSE(c.is_theorem);
  CHECK(rationale(c.reason).find("unimodular case unresolved") != std::string::npos);

  CHECK(std::string(to_string(AK::ConjecturallyNotAdmissible)) == "ConjecturallyNotAdmissible");
  CHECK(std::string(to_string(SK::AbsolutelyContinuous)) == "AbsolutelyContinuous");
}

TEST_CASE("full_report examples") {
  SUBCASE("ax+b, f(X) = 1") {
    const FullReport r = report("axb_f1");
    CHECK(r.spectral.kind == SK::AbsolutelyContinuous);
    CHECK(r.admissibility.kind == AK::Admissible);
    CHECK_FALSE(r.structure.is_unimodular);
    REQUIRE(r.symbolic_check.has_value());
    CHECK(r.symbolic_check->d_tau == r.generic.d_tau);
  }
  SUBCASE("ax+b, f(X) = 0") {
    const FullReport r = report("axb_f0");
    CHECK(r.spectral.kind == SK::Singular);
    CHECK(r.spectral.d_tau == 0);
    CHECK(r.admissibility.kind == AK::NotAdmissible);
  }
  SUBCASE("h5, span{Y1, Y2}, f = 0") {
    const FullReport r = report("h5");
    CHECK(r.spectral.kind == SK::AbsolutelyContinuous);
    CHECK(r.spectral.d_tau == 2);
    CHECK(r.admissibility.kind == AK::ConjecturallyNotAdmissible);
    CHECK(r.admissibility.unimodular);
    // Rows -l(Z) in the X1, X2 columns: free exactly off l(Z) = 0.
    CHECK(point_on_variety(r.datum, r.spectral.witness.value())[4] != 0);
  }
}

TEST_CASE("full_report errors") {
  const auto sl2 = std::make_shared<const LieAlgebra>(LieAlgebra::from_brackets(
      "sl2", {"H", "E", "F"}, {{0, 1, vec({0, 2, 0})}, {0, 2, vec({0, 0, -2})}, {1, 2, vec({1, 0, 0})}}));
  CHECK_THROWS_AS(full_report(sl2, QMatrix(0, 3), {}, {}), PreconditionFailed);

  const auto e2 = std::make_shared<const LieAlgebra>(LieAlgebra::from_brackets(
      "e2", {"R", "X", "Y"}, {{0, 1, vec({0, 0, 1})}, {0, 2, vec({0, -1, 0})}}));
  CHECK_THROWS_AS(full_report(e2, QMatrix(0, 3), {}, {}), PreconditionFailed);
  ReportConfig assume;
  assume.assume_exponential = true;
  const FullReport forced = full_report(e2, QMatrix(0, 3), {}, assume);
  CHECK(forced.spectral.kind == SK::AbsolutelyContinuous);
  CHECK_FALSE(forced.warnings.empty());

  std::vector<Rational> c(27, Rational(0));
  c[(0 * 3 + 2) * 3 + 0] = 1;  // [X, Z] = X, no antisymmetric partner
  const auto broken = std::make_shared<const LieAlgebra>("broken", std::vector<std::string>{"X", "Y", "Z"}, c);
  CHECK_THROWS_AS(full_report(broken, QMatrix(0, 3), {}, {}), InvalidAlgebra);

  const auto h3 = heisenberg3();
  CHECK_THROWS_AS(full_report(h3, QMatrix::from_rows({vec({1, 0, 0}), vec({0, 1, 0})}, 3), vec({0, 0}), {}), NotClosed);
  CHECK_THROWS_AS(full_report(h3, QMatrix::from_rows({vec({0, 1, 0}), vec({0, 2, 0})}, 3), vec({0, 0}), {}),
                  RankDeficient);
  CHECK_THROWS_AS(full_report(h3, QMatrix::from_rows({vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})}, 3),
                              vec({0, 0, 1}), {}),
                  NotACharacter);

  ReportConfig symbolic;
  symbolic.symbolic = true;
  symbolic.symbolic_threshold = 2;
  CHECK_THROWS_AS(full_report(h3, QMatrix(0, 3), {}, symbolic), ThresholdExceeded);
}

TEST_CASE("property: verdict table on the corpus and on random data") {
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    const FullReport r = report(name);
    check_table(r.spectral, r.admissibility);
  }

  std::size_t data = 0;
  std::size_t free_count = 0;
  for (const auto& name : corpus_names()) {
    const auto g = algebra(name);
    Rng rng(derive_seed(71, g->dim() * 100 + name.size()));
    for (int t = 0; t < 30; ++t, ++data) {
      CAPTURE(name);
      CAPTURE(t);
      const QMatrix rows = random_subalgebra(rng, *g);
      const Subalgebra h = check_subalgebra(g, rows);
      const VectorQ f = random_character(rng, h);
      ReportConfig config;
      config.seed = static_cast<std::uint64_t>(t);
      const FullReport r = full_report(g, rows, f, config);
      check_table(r.spectral, r.admissibility);
      REQUIRE(r.symbolic_check.has_value());
      CHECK(r.symbolic_check->d_tau == r.generic.d_tau);
      if (r.spectral.kind == SK::AbsolutelyContinuous) ++free_count;
    }
  }
  CHECK(data >= 200);
  CHECK(free_count > 0);
  CHECK(free_count < data);
}

TEST_CASE("property: verdicts do not depend on the seed") {
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    const FullReport base = report(name, 0);
    for (std::uint64_t seed : {1ULL, 7ULL, 123456789ULL}) {
      const FullReport other = report(name, seed);
      CHECK(other.spectral.kind == base.spectral.kind);
      CHECK(other.spectral.d_tau == base.spectral.d_tau);
      CHECK(other.admissibility.kind == base.admissibility.kind);
    }
    const FullReport again = report(name, 0);
    CHECK(again.generic.witness == base.generic.witness);
    CHECK(again.warnings == base.warnings);
  }
}
