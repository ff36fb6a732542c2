#include "orbitadm/report.hpp"

#include <sstream>

#include "orbitadm/problem_file.hpp"

namespace orbitadm {

Json rational_array(const VectorQ& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(q.get_str());
  return a;
}

namespace {

Json vector_list(const LieAlgebra& algebra, const std::vector<VectorQ>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(format_combination(algebra, v));
  return a;
}

Json datum_json(const MonomialDatum& datum) {
  Json d;
  const auto& alg = datum.algebra();
  d["algebra"] = alg.name();
  d["dim"] = alg.dim();
  d["basis"] = alg.basis_names();
  d["generators"] = vector_list(alg, datum.subalgebra().rows().row_list());
  d["functional"] = rational_array(datum.functional().values());
  Json completion = Json::array();
  for (auto k : datum.completion_indices()) completion.push_back(alg.basis_names()[k]);
  d["completion"] = completion;
  return d;
}

std::string leaf_text(const Json& v) {
  if (v.is_null()) return "none";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) out += ", ";
      out += leaf_text(v[i]);
    }
    return out + "]";
  }
  return v.dump();
}

void flatten(const Json& node, const std::string& prefix, std::ostringstream& os) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, os);
    return;
  }
  os << prefix << ": " << leaf_text(node) << "\n";
}

}  // namespace

Json structure_json(const LieAlgebra& algebra, const StructureReport& report) {
  Json s;
  s["algebra"] = algebra.name();
  s["dim"] = algebra.dim();
  s["basis"] = algebra.basis_names();
  s["valid"] = report.is_valid;
  s["solvable"] = report.is_solvable;
  s["derived_series_dims"] = report.derived_series_dims;
  s["nilpotent"] = report.is_nilpotent;
  s["lower_central_dims"] = report.lower_central_dims;
  s["unimodular"] = report.is_unimodular;
  s["exponentiality"] = to_string(report.exponentiality.status);
  s["exponentiality_witness"] =
      report.exponentiality.witness ? rational_array(*report.exponentiality.witness) : Json(nullptr);
  return s;
}

Json to_json(const FullReport& report) {
  Json structure = structure_json(report.datum.algebra(), report.structure);
  const Json datum = datum_json(report.datum);
  structure["generators"] = datum["generators"];
  structure["functional"] = datum["functional"];
  structure["completion"] = datum["completion"];

  Json j;
  j["structure"] = structure;
  j["d_tau"] = report.spectral.d_tau;
  j["m"] = report.spectral.m;
  j["witness"] = report.spectral.witness ? rational_array(*report.spectral.witness) : Json(nullptr);

  Json spectral;
  spectral["verdict"] = to_string(report.spectral.kind);
  spectral["free"] = report.generic.is_free;
  spectral["method"] = to_string(report.generic.method);
  spectral["bound"] = report.config.bound;
  spectral["symbolic_d_tau"] = report.symbolic_check ? Json(report.symbolic_check->d_tau) : Json(nullptr);
  j["spectral"] = spectral;

  Json adm;
  adm["verdict"] = to_string(report.admissibility.kind);
  adm["unimodular"] = report.admissibility.unimodular;
  adm["reason"] = to_string(report.admissibility.reason);
  adm["theorem"] = report.admissibility.is_theorem;
  adm["rationale"] = rationale(report.admissibility.reason);
  j["admissibility"] = adm;

  j["warnings"] = report.warnings;
  j["seed"] = report.config.seed;
  j["trials"] = report.config.trials;
  return j;
}

Json to_json(const MonomialDatum& datum, const StabilizerReport& report) {
  const auto& alg = datum.algebra();
  Json j;
  j["datum"] = datum_json(datum);
  j["point"] = rational_array(report.point);
  j["rank_M"] = report.rank_m;
  j["dim_H_orbit"] = report.dim_h_orbit;
  j["h_stabilizer"] = vector_list(alg, report.h_stab_basis);
  j["dim_G_orbit"] = report.dim_g_orbit;
  j["g_stabilizer"] = vector_list(alg, report.g_stab_basis);
  j["free"] = report.dim_h_orbit == datum.m();
  return j;
}

Json to_json(const MonomialDatum& datum, const VectorQ& x, const JacobianReport& report, double step, double tol) {
  Json j;
  j["datum"] = datum_json(datum);
  j["point"] = rational_array(x);
  j["step"] = step;
  j["rank_tolerance"] = tol;
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < report.jacobian.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < report.jacobian.cols(); ++c) row.push_back(report.jacobian(r, c));
    rows.push_back(row);
  }
  j["jacobian"] = rows;
  j["max_dev_topleft"] = report.max_dev_topleft;
  j["max_dev_topright"] = report.max_dev_topright;
  j["max_dev_bottomright"] = report.max_dev_bottomright;
  j["numerical_rank"] = report.numerical_rank;
  j["rank_M"] = report.exact_rank_m;
  j["expected_rank"] = report.expected_rank;
  j["rank_formula_holds"] = report.numerical_rank == report.expected_rank;
  return j;
}

std::string render_text(const Json& report) {
  std::ostringstream os;
  flatten(report, "", os);
  return os.str();
}

std::string render_json(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace orbitadm
