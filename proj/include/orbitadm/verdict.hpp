#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbitadm/lie_algebra.hpp"
#include "orbitadm/monomial.hpp"
#include "orbitadm/orbit_rank.hpp"

namespace orbitadm {

struct SpectralVerdict {
  enum class Kind { AbsolutelyContinuous, Singular };
  Kind kind = Kind::Singular;
  std::size_t d_tau = 0;
  std::size_t m = 0;
  std::optional<VectorQ> witness;  // present iff AbsolutelyContinuous
};

struct AdmissibilityVerdict {
  enum class Kind { Admissible, NotAdmissible, ConjecturallyNotAdmissible };
  enum class Reason {
    FreeActionNonunimodular,    // theorem: free action suffices for nonunimodular G
    FailsNecessaryCondition,    // no free point: spectral measure singular
    UnimodularConjecture,       // free action, unimodular G: conjectured, not proven
  };
  Kind kind = Kind::NotAdmissible;
  bool unimodular = false;
  Reason reason = Reason::FailsNecessaryCondition;
  /// False only for the conjectural verdict.
  bool is_theorem = true;
};

const char* to_string(SpectralVerdict::Kind kind);
const char* to_string(AdmissibilityVerdict::Kind kind);
const char* to_string(AdmissibilityVerdict::Reason reason);
std::string rationale(AdmissibilityVerdict::Reason reason);

/// Absolutely continuous w.r.t. Plancherel measure iff H acts freely somewhere on A.
SpectralVerdict spectral_verdict(const MonomialDatum& datum, const GenericRankResult& generic);

AdmissibilityVerdict admissibility_verdict(const SpectralVerdict& spectral, bool unimodular);

struct ReportConfig {
  std::size_t trials = kDefaultTrials;
  std::int64_t bound = kDefaultBound;
  std::uint64_t seed = 0;
  /// Report the symbolic rank (fails with ThresholdExceeded above the threshold).
  bool symbolic = false;
  std::size_t symbolic_threshold = kDefaultSymbolicThreshold;
  /// Proceed even if the exponentiality screen finds a witness.
  bool assume_exponential = false;
  std::size_t exp_samples = 32;
};

struct FullReport {
  StructureReport structure;
  MonomialDatum datum;
  GenericRankResult generic;
  std::optional<GenericRankResult> symbolic_check;
  SpectralVerdict spectral;
  AdmissibilityVerdict admissibility;
  std::vector<std::string> warnings;
  ReportConfig config;
};

/// validate -> subalgebra -> character -> adapted basis -> structure -> generic
/// rank (probabilistic, cross-checked symbolically when n <= threshold) ->
/// verdicts. Throws InvalidAlgebra, RankDeficient, NotClosed, NotACharacter,
/// PreconditionFailed, ThresholdExceeded or DisagreementError.
FullReport full_report(std::shared_ptr<const LieAlgebra> algebra, const QMatrix& generators,
                       const VectorQ& f_values, const ReportConfig& config);

}  // namespace orbitadm
