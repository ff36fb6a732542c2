#include "orbitadm/verdict.hpp"

#include "orbitadm/errors.hpp"

namespace orbitadm {

const char* to_string(SpectralVerdict::Kind kind) {
  return kind == SpectralVerdict::Kind::AbsolutelyContinuous ? "AbsolutelyContinuous" : "Singular";
}

const char* to_string(AdmissibilityVerdict::Kind kind) {
  switch (kind) {
    case AdmissibilityVerdict::Kind::Admissible: return "Admissible";
    case AdmissibilityVerdict::Kind::NotAdmissible: return "NotAdmissible";
    case AdmissibilityVerdict::Kind::ConjecturallyNotAdmissible: return "ConjecturallyNotAdmissible";
  }
  return "NotAdmissible";
}

const char* to_string(AdmissibilityVerdict::Reason reason) {
  switch (reason) {
    case AdmissibilityVerdict::Reason::FreeActionNonunimodular: return "FreeActionNonunimodular";
    case AdmissibilityVerdict::Reason::FailsNecessaryCondition: return "FailsNecessaryCondition";
    case AdmissibilityVerdict::Reason::UnimodularConjecture: return "UnimodularConjecture";
  }
  return "FailsNecessaryCondition";
}

std::string rationale(AdmissibilityVerdict::Reason reason) {
  switch (reason) {
    case AdmissibilityVerdict::Reason::FreeActionNonunimodular:
      return "G nonunimodular and H acts freely on a point of A_tau";
    case AdmissibilityVerdict::Reason::FailsNecessaryCondition:
      return "H acts freely on no point of A_tau; tau is not contained in the regular representation";
    case AdmissibilityVerdict::Reason::UnimodularConjecture:
      return "unimodular case unresolved; conjectured to have no admissible vectors";
  }
  return {};
}

SpectralVerdict spectral_verdict(const MonomialDatum& datum, const GenericRankResult& generic) {
  SpectralVerdict v;
  v.d_tau = generic.d_tau;
  v.m = datum.m();
  if (generic.d_tau == datum.m()) {
    v.kind = SpectralVerdict::Kind::AbsolutelyContinuous;
    v.witness = generic.witness;
  } else {
    v.kind = SpectralVerdict::Kind::Singular;
  }
  return v;
}

AdmissibilityVerdict admissibility_verdict(const SpectralVerdict& spectral, bool unimodular) {
  AdmissibilityVerdict v;
  v.unimodular = unimodular;
  if (spectral.kind == SpectralVerdict::Kind::Singular) {
    v.kind = AdmissibilityVerdict::Kind::NotAdmissible;
    v.reason = AdmissibilityVerdict::Reason::FailsNecessaryCondition;
  } else if (!unimodular) {
    v.kind = AdmissibilityVerdict::Kind::Admissible;
    v.reason = AdmissibilityVerdict::Reason::FreeActionNonunimodular;
  } else {
    v.kind = AdmissibilityVerdict::Kind::ConjecturallyNotAdmissible;
    v.reason = AdmissibilityVerdict::Reason::UnimodularConjecture;
    v.is_theorem = false;
  }
  return v;
}

FullReport full_report(std::shared_ptr<const LieAlgebra> algebra, const QMatrix& generators,
                       const VectorQ& f_values, const ReportConfig& config) {
  const auto violations = validate(*algebra);
  if (!violations.empty()) throw InvalidAlgebra(describe(*algebra, violations.front()));

  MonomialDatum datum = make_datum(algebra, generators, f_values);

  StructureReport structure = structure_report(*algebra, config.exp_samples, config.seed);
  std::vector<std::string> warnings;
  if (!structure.is_solvable) throw PreconditionFailed("algebra is not solvable");
  if (structure.exponentiality.status == Exponentiality::Status::FailedWithWitness) {
    if (!config.assume_exponential)
      throw PreconditionFailed("ad u has a nonzero purely imaginary eigenvalue for some u; "
                               "the group is not exponential (override with --assume-exponential)");
    warnings.push_back("exponentiality witness found but overridden by assumption");
  } else {
    warnings.push_back("exponentiality screened by sampling only, not certified");
  }

  GenericRankResult probabilistic = generic_h_orbit_dim(datum, config.trials, config.bound, config.seed);
  std::optional<GenericRankResult> symbolic;
  if (config.symbolic || algebra->dim() <= config.symbolic_threshold)
    symbolic = symbolic_generic_rank(datum, config.symbolic_threshold);
  if (symbolic && symbolic->d_tau != probabilistic.d_tau)
    throw DisagreementError(symbolic->d_tau, probabilistic.d_tau);
  if (!symbolic) warnings.push_back("symbolic cross-check skipped (dimension above threshold)");

  const GenericRankResult& used = config.symbolic ? *symbolic : probabilistic;
  SpectralVerdict spectral = spectral_verdict(datum, used);
  AdmissibilityVerdict admissibility = admissibility_verdict(spectral, structure.is_unimodular);
  if (!admissibility.is_theorem) warnings.push_back("admissibility verdict is conjectural, not a theorem");

  return FullReport{std::move(structure), std::move(datum),       used,   std::move(symbolic),
                    std::move(spectral),  std::move(admissibility), std::move(warnings), config};
}

}  // namespace orbitadm
