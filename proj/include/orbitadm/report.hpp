#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "orbitadm/numeric_geometry.hpp"
#include "orbitadm/orbit_rank.hpp"
#include "orbitadm/verdict.hpp"

namespace orbitadm {

using Json = nlohmann::ordered_json;

Json rational_array(const VectorQ& v);

/// Top-level keys, in order: structure, d_tau, m, witness, spectral,
/// admissibility, warnings, seed, trials.
Json to_json(const FullReport& report);
Json to_json(const MonomialDatum& datum, const StabilizerReport& report);
Json to_json(const MonomialDatum& datum, const VectorQ& x, const JacobianReport& report, double step, double tol);
Json structure_json(const LieAlgebra& algebra, const StructureReport& report);

/// One "key: value" line per leaf; nested keys are joined with '.', arrays
/// render as "[a, b]" and null as "none".
std::string render_text(const Json& report);

/// Pretty JSON with a trailing newline.
std::string render_json(const Json& report);

}  // namespace orbitadm
