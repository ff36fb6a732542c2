#include "orbitadm/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "orbitadm/corpus.hpp"
#include "orbitadm/errors.hpp"
#include "orbitadm/numeric_geometry.hpp"
#include "orbitadm/problem_file.hpp"
#include "orbitadm/random.hpp"
#include "orbitadm/report.hpp"
#include "orbitadm/verdict.hpp"

namespace orbitadm {

namespace {

constexpr std::string_view kCorpusPrefix = "corpus:";

std::string load_source(const std::string& file) {
  if (file.rfind(kCorpusPrefix, 0) == 0) {
    const auto name = std::string_view(file).substr(kCorpusPrefix.size());
    auto entry = find_corpus(name);
    if (!entry) throw Error("no bundled example named '" + std::string(name) + "'");
    return std::string(entry->source);
  }
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error("cannot open '" + file + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

VectorQ parse_point(const std::string& text) {
  VectorQ x;
  if (text.empty()) return x;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    x.push_back(parse_rational(item));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return x;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag, const ProblemFile& problem) {
  if (flag) return *flag;
  if (problem.config.seed) return *problem.config.seed;
  if (auto env = seed_from_environment()) return *env;
  return 0;
}

void emit(std::ostream& out, const Json& j, bool json) { out << (json ? render_json(j) : render_text(j)); }

MonomialDatum datum_of(const ProblemFile& problem) {
  const auto violations = validate(*problem.algebra);
  if (!violations.empty()) throw InvalidAlgebra(describe(*problem.algebra, violations.front()));
  return make_datum(problem.algebra, problem.generator_matrix(), problem.functional_values());
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral measure and admissibility of monomial representations of exponential solvable Lie groups",
               "orbitadm"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string file;
  bool json = false;
  std::optional<std::uint64_t> seed;

  auto* validate_cmd = app.add_subcommand("validate", "Check structure constants, subalgebra and character");
  validate_cmd->add_option("file", file, "problem file, or corpus:NAME")->required();
  bool assume_exp_validate = false;
  std::size_t exp_samples = 32;
  validate_cmd->add_option("--seed", seed, "seed for the exponentiality screen");
  validate_cmd->add_option("--samples", exp_samples, "random elements for the exponentiality screen");
  validate_cmd->add_flag("--assume-exponential", assume_exp_validate, "do not fail on an exponentiality witness");
  validate_cmd->add_flag("--json", json, "JSON output");

  auto* verdict_cmd = app.add_subcommand("verdict", "Spectral and admissibility verdict");
  verdict_cmd->add_option("file", file, "problem file, or corpus:NAME")->required();
  std::optional<std::size_t> trials;
  std::optional<std::int64_t> bound;
  std::optional<std::size_t> threshold;
  bool symbolic = false;
  bool assume_exp = false;
  verdict_cmd->add_option("--trials", trials, "random chart points")->check(CLI::PositiveNumber);
  verdict_cmd->add_option("--bound", bound, "coordinates drawn from [-B, B]")->check(CLI::NonNegativeNumber);
  verdict_cmd->add_option("--seed", seed, "root seed (default: ORBITADM_SEED or 0)");
  verdict_cmd->add_option("--symbolic-threshold", threshold, "largest dimension for the symbolic rank");
  verdict_cmd->add_flag("--symbolic", symbolic, "report the symbolic generic rank");
  verdict_cmd->add_flag("--assume-exponential", assume_exp, "proceed despite an exponentiality witness");
  verdict_cmd->add_flag("--json", json, "JSON output");

  auto* rank_cmd = app.add_subcommand("rank", "Stabilizers and orbit dimensions at a chart point");
  rank_cmd->add_option("file", file, "problem file, or corpus:NAME")->required();
  std::string point;
  rank_cmd->add_option("--point", point, "chart coordinates x1,...,x_{n-m}");
  rank_cmd->add_flag("--json", json, "JSON output");

  auto* jac_cmd = app.add_subcommand("jacobian", "Finite-difference Jacobian of the orbit map at a chart point");
  jac_cmd->add_option("file", file, "problem file, or corpus:NAME")->required();
  double step = kDefaultStep;
  double tol = kDefaultRankTolerance;
  jac_cmd->add_option("--point", point, "chart coordinates x1,...,x_{n-m}");
  jac_cmd->add_option("--step", step, "central difference step")->check(CLI::PositiveNumber);
  jac_cmd->add_option("--tol", tol, "relative singular value threshold")->check(CLI::PositiveNumber);
  jac_cmd->add_flag("--json", json, "JSON output");

  auto* corpus_cmd = app.add_subcommand("corpus", "List bundled examples, or print one");
  std::string corpus_name;
  corpus_cmd->add_option("name", corpus_name, "example to print");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*corpus_cmd) {
      if (!corpus_name.empty()) {
        auto entry = find_corpus(corpus_name);
        if (!entry) throw Error("no bundled example named '" + corpus_name + "'");
        out << entry->source;
        return kExitOk;
      }
      for (const auto& e : corpus()) out << e.name << "  " << corpus_description(e) << "\n";
      return kExitOk;
    }

    const ProblemFile problem = parse_problem(load_source(file));

    if (*validate_cmd) {
      const auto violations = validate(*problem.algebra);
      if (!violations.empty()) {
        for (const auto& v : violations) err << "error: " << describe(*problem.algebra, v) << "\n";
        return kExitInputError;
      }
      const StructureReport report = structure_report(*problem.algebra, exp_samples, resolve_seed(seed, problem));
      Json j = structure_json(*problem.algebra, report);
      if (!problem.generators.empty()) {
        const MonomialDatum datum = datum_of(problem);
        j["generators"] = Json::array();
        for (const auto& g : datum.subalgebra().rows().row_list())
          j["generators"].push_back(format_combination(*problem.algebra, g));
        j["functional"] = rational_array(datum.functional().values());
      }
      emit(out, j, json);
      if (!report.is_solvable) {
        err << "error: algebra is not solvable\n";
        return kExitPrecondition;
      }
      if (report.exponentiality.status == Exponentiality::Status::FailedWithWitness && !assume_exp_validate) {
        err << "error: exponentiality witness found: " << format_combination(*problem.algebra, *report.exponentiality.witness)
            << "\n";
        return kExitPrecondition;
      }
      return kExitOk;
    }

    if (*verdict_cmd) {
      ReportConfig config;
      config.trials = trials.value_or(problem.config.trials.value_or(kDefaultTrials));
      config.bound = bound.value_or(problem.config.bound.value_or(kDefaultBound));
      config.symbolic_threshold = threshold.value_or(problem.config.symbolic_threshold.value_or(kDefaultSymbolicThreshold));
      config.seed = resolve_seed(seed, problem);
      config.symbolic = symbolic;
      config.assume_exponential = assume_exp;
      const FullReport report = full_report(problem.algebra, problem.generator_matrix(), problem.functional_values(), config);
      emit(out, to_json(report), json);
      return kExitOk;
    }

    const MonomialDatum datum = datum_of(problem);
    const VectorQ x = parse_point(point);
    if (x.size() != datum.chart_dim()) throw DimensionMismatch("--point", datum.chart_dim(), x.size());

    if (*rank_cmd) {
      const VectorQ ell = point_on_variety(datum, x);
      emit(out, to_json(datum, stabilizer_report(datum, ell)), json);
      return kExitOk;
    }
    if (*jac_cmd) {
      emit(out, to_json(datum, x, fd_jacobian(datum, x, step, tol), step, tol), json);
      return kExitOk;
    }
  } catch (const DisagreementError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDisagreement;
  } catch (const PreconditionFailed& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const ThresholdExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace orbitadm
