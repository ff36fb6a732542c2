#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "orbitadm/cli.hpp"
#include "orbitadm/corpus.hpp"
#include "orbitadm/errors.hpp"
#include "orbitadm/numeric_geometry.hpp"
#include "orbitadm/orbit_rank.hpp"
#include "orbitadm/problem_file.hpp"
#include "orbitadm/report.hpp"
#include "orbitadm/verdict.hpp"

namespace py = pybind11;
using namespace orbitadm;

namespace {

VectorQ to_rationals(const std::vector<std::string>& items) {
  VectorQ v;
  for (const auto& s : items) v.push_back(parse_rational(s));
  return v;
}

std::vector<std::string> to_strings(const VectorQ& v) {
  std::vector<std::string> out;
  for (const auto& q : v) out.push_back(q.get_str());
  return out;
}

MonomialDatum datum_of(const ProblemFile& problem) {
  const auto violations = validate(*problem.algebra);
  if (!violations.empty()) throw InvalidAlgebra(describe(*problem.algebra, violations.front()));
  return make_datum(problem.algebra, problem.generator_matrix(), problem.functional_values());
}

py::tuple rank_tuple(const GenericRankResult& r) {
  return py::make_tuple(r.d_tau, to_strings(r.witness), r.is_free);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Generic orbit rank, spectral and admissibility verdicts for monomial representations";

  // Translators are tried most recently registered first: derived types last.
  auto& base_error = py::register_exception<Error>(m, "OrbitadmError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionFailed>(m, "PreconditionFailed", base_error.ptr());

  m.def("parse",
        [](const std::string& text) {
          const ProblemFile p = parse_problem(text);
          py::dict d;
          d["name"] = p.algebra->name();
          d["basis"] = p.algebra->basis_names();
          std::vector<std::vector<std::string>> gens;
          for (const auto& g : p.generators) gens.push_back(to_strings(g));
          d["generators"] = gens;
          d["functional"] = to_strings(p.functional_values());
          return d;
        },
        py::arg("text"), "Parse a problem file into a plain dict.");

  m.def("normalize", [](const std::string& text) { return serialize(parse_problem(text)); }, py::arg("text"),
        "Canonical text of a problem file.");

  m.def("validate",
        [](const std::string& text) {
          const ProblemFile p = parse_problem(text);
          std::vector<std::string> out;
          for (const auto& v : validate(*p.algebra)) out.push_back(describe(*p.algebra, v));
          return out;
        },
        py::arg("text"), "Antisymmetry and Jacobi violations, empty when the algebra is valid.");

  m.def("verdict_json",
        [](const std::string& text, std::size_t trials, std::int64_t bound, std::uint64_t seed, bool symbolic,
           bool assume_exponential) {
          const ProblemFile p = parse_problem(text);
          ReportConfig config;
          config.trials = trials;
          config.bound = bound;
          config.seed = seed;
          config.symbolic = symbolic;
          config.assume_exponential = assume_exponential;
          return render_json(to_json(full_report(p.algebra, p.generator_matrix(), p.functional_values(), config)));
        },
        py::arg("text"), py::arg("trials") = kDefaultTrials, py::arg("bound") = kDefaultBound, py::arg("seed") = 0,
        py::arg("symbolic") = false, py::arg("assume_exponential") = false);

  m.def("stabilizer_json",
        [](const std::string& text, const std::vector<std::string>& point) {
          const MonomialDatum datum = datum_of(parse_problem(text));
          return render_json(to_json(datum, stabilizer_report(datum, point_on_variety(datum, to_rationals(point)))));
        },
        py::arg("text"), py::arg("point"));

  m.def("jacobian_json",
        [](const std::string& text, const std::vector<std::string>& point, double step, double tol) {
          const MonomialDatum datum = datum_of(parse_problem(text));
          const VectorQ x = to_rationals(point);
          return render_json(to_json(datum, x, fd_jacobian(datum, x, step, tol), step, tol));
        },
        py::arg("text"), py::arg("point"), py::arg("step") = kDefaultStep, py::arg("tol") = kDefaultRankTolerance);

  m.def("generic_rank",
        [](const std::string& text, std::size_t trials, std::int64_t bound, std::uint64_t seed) {
          return rank_tuple(generic_h_orbit_dim(datum_of(parse_problem(text)), trials, bound, seed));
        },
        py::arg("text"), py::arg("trials") = kDefaultTrials, py::arg("bound") = kDefaultBound, py::arg("seed") = 0,
        "(d_tau, witness, is_free) from random chart points.");

  m.def("symbolic_rank",
        [](const std::string& text, std::size_t threshold) {
          return rank_tuple(symbolic_generic_rank(datum_of(parse_problem(text)), threshold));
        },
        py::arg("text"), py::arg("threshold") = kDefaultSymbolicThreshold,
        "(d_tau, witness, is_free) from the parametric moment matrix.");

  m.def("corpus", [] {
    py::dict d;
    for (const auto& e : corpus()) d[py::str(std::string(e.name))] = std::string(e.source);
    return d;
  });

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out;
          std::ostringstream err;
          const int code = run_cli(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command line tool; returns (exit_code, stdout, stderr).");
}
