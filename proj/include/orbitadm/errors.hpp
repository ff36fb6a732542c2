#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "orbitadm/rational.hpp"

namespace orbitadm {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(const std::string& what, std::size_t expected, std::size_t got)
      : Error(what + ": expected length " + std::to_string(expected) + ", got " +
              std::to_string(got)),
        expected(expected),
        got(got) {}
  std::size_t expected;
  std::size_t got;
};

/// Generator rows are linearly dependent.
class RankDeficient : public Error {
 public:
  RankDeficient(std::size_t rank, std::size_t rows)
      : Error("subalgebra generators are linearly dependent (rank " + std::to_string(rank) +
              " < " + std::to_string(rows) + ")"),
        rank(rank),
        rows(rows) {}
  std::size_t rank;
  std::size_t rows;
};

/// [Y_i, Y_j] leaves the span of the generators. `component` is the first
/// basis coordinate with a nonzero residual after reduction against the span.
class NotClosed : public Error {
 public:
  NotClosed(std::size_t i, std::size_t j, std::size_t component, Rational residual)
      : Error("generators are not bracket-closed: [Y" + std::to_string(i + 1) + ", Y" +
              std::to_string(j + 1) + "] leaves the span (component " +
              std::to_string(component + 1) + ", residual " + residual.get_str() + ")"),
        i(i),
        j(j),
        component(component),
        residual(std::move(residual)) {}
  std::size_t i;
  std::size_t j;
  std::size_t component;
  Rational residual;
};

/// f([Y_i, Y_j]) != 0.
class NotACharacter : public Error {
 public:
  NotACharacter(std::size_t i, std::size_t j, Rational value)
      : Error("functional is not a character: f([Y" + std::to_string(i + 1) + ", Y" +
              std::to_string(j + 1) + "]) = " + value.get_str() + " != 0"),
        i(i),
        j(j),
        value(std::move(value)) {}
  std::size_t i;
  std::size_t j;
  Rational value;
};

class ThresholdExceeded : public Error {
 public:
  ThresholdExceeded(std::size_t n, std::size_t threshold)
      : Error("symbolic generic rank limited to dim <= " + std::to_string(threshold) +
              ", algebra has dim " + std::to_string(n)),
        n(n),
        threshold(threshold) {}
  std::size_t n;
  std::size_t threshold;
};

/// Symbolic and probabilistic generic ranks differ. Never expected.
class DisagreementError : public Error {
 public:
  DisagreementError(std::size_t symbolic, std::size_t probabilistic)
      : Error("symbolic generic rank " + std::to_string(symbolic) +
              " disagrees with probabilistic rank " + std::to_string(probabilistic)),
        symbolic(symbolic),
        probabilistic(probabilistic) {}
  std::size_t symbolic;
  std::size_t probabilistic;
};

/// Structure constants violate antisymmetry or Jacobi.
class InvalidAlgebra : public Error {
 public:
  using Error::Error;
};

/// A structural hypothesis of the analysis fails (not solvable, exponentiality witness).
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string expected, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message + (expected.empty() ? "" : " (expected " + expected + ")")),
        line(line),
        column(column),
        expected(std::move(expected)) {}
  std::size_t line;
  std::size_t column;
  std::string expected;
};

}  // namespace orbitadm
