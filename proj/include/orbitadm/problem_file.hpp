#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbitadm/exact_linalg.hpp"
#include "orbitadm/lie_algebra.hpp"

namespace orbitadm {

/// Optional `config KEY = INT` lines; command-line flags take precedence.
struct ConfigOverrides {
  std::optional<std::size_t> trials;
  std::optional<std::int64_t> bound;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> symbolic_threshold;

  friend bool operator==(const ConfigOverrides&, const ConfigOverrides&) = default;
};

/// Parsed input file. Syntax only: the algebra, subalgebra and character
/// conditions are checked downstream.
struct ProblemFile {
  std::shared_ptr<const LieAlgebra> algebra;
  std::vector<VectorQ> generators;  // empty when the subalgebra block is absent
  std::optional<VectorQ> functional;
  ConfigOverrides config;

  QMatrix generator_matrix() const;
  /// The functional values, zero when the block is absent.
  VectorQ functional_values() const;
};

bool operator==(const ProblemFile& a, const ProblemFile& b);

/// Line-oriented grammar:
///   algebra NAME / dim INT / basis ID+ / bracket ID ID = term (+ term)*
///   subalgebra gen (; gen)* / functional RATIONAL (, RATIONAL)* / config KEY = INT
/// '#' starts a comment. Throws ParseError with line and column.
ProblemFile parse_problem(std::string_view source);

/// Canonical text that parse_problem maps back to the same ProblemFile.
std::string serialize(const ProblemFile& problem);

/// "c*ID + ..." rendering of a vector against the basis names.
std::string format_combination(const LieAlgebra& algebra, const VectorQ& v);

}  // namespace orbitadm
