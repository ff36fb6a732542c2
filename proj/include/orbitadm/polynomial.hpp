#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "orbitadm/rational.hpp"

namespace orbitadm {

/// Sparse multivariate polynomial over Q in a fixed number of variables.
class Polynomial {
 public:
  using Exponents = std::vector<unsigned>;

  explicit Polynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}
  static Polynomial constant(std::size_t num_vars, const Rational& c);
  static Polynomial variable(std::size_t num_vars, std::size_t index);

  std::size_t num_vars() const { return num_vars_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned total_degree() const;
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  Rational evaluate(const std::vector<Rational>& point) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Rational& c);

  std::size_t num_vars_;
  std::map<Exponents, Rational> terms_;
};

/// Square matrix of polynomials, row-major.
using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Determinant of the submatrix picked by `rows` x `cols`, by expansion over
/// column subsets (O(k 2^k) polynomial products).
Polynomial minor_determinant(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                             const std::vector<std::size_t>& cols);

}  // namespace orbitadm
