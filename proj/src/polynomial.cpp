#include "orbitadm/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orbitadm {

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& c) {
  Polynomial p(num_vars);
  p.add_term(Exponents(num_vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw std::out_of_range("Polynomial::variable");
  Polynomial p(num_vars);
  Exponents e(num_vars, 0);
  e[index] = 1;
  p.add_term(e, Rational(1));
  return p;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (auto k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != num_vars_) throw std::invalid_argument("Polynomial::evaluate: arity mismatch");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t v = 0; v < num_vars_; ++v)
      for (unsigned k = 0; k < e[v]; ++k) t *= point[v];
    sum += t;
  }
  return sum;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.num_vars_ != num_vars_) throw std::invalid_argument("Polynomial: arity mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.num_vars_ != num_vars_) throw std::invalid_argument("Polynomial: arity mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars_ != b.num_vars_) throw std::invalid_argument("Polynomial: arity mismatch");
  Polynomial out(a.num_vars_);
  Polynomial::Exponents e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t v = 0; v < a.num_vars_; ++v) e[v] = ea[v] + eb[v];
      out.add_term(e, ca * cb);
    }
  return out;
}

Polynomial operator*(const Rational& s, const Polynomial& a) {
  Polynomial out(a.num_vars_);
  for (const auto& [e, c] : a.terms_) out.add_term(e, s * c);
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (std::size_t v = 0; v < num_vars_; ++v) {
      if (e[v] == 0) continue;
      os << "*x" << (v + 1);
      if (e[v] > 1) os << '^' << e[v];
    }
  }
  return os.str();
}

Polynomial minor_determinant(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                             const std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  if (cols.size() != k) throw std::invalid_argument("minor_determinant: non-square selection");
  const std::size_t vars = m.empty() || m[0].empty() ? 0 : m[0][0].num_vars();
  if (k == 0) return Polynomial::constant(vars, Rational(1));

  // det[mask] = determinant of rows[0..popcount(mask)) x the columns in mask,
  // expanded along the last of those rows.
  std::vector<Polynomial> det(std::size_t{1} << k, Polynomial(vars));
  det[0] = Polynomial::constant(vars, Rational(1));
  for (std::size_t mask = 1; mask < det.size(); ++mask) {
    const auto used = static_cast<std::size_t>(__builtin_popcountll(mask));
    const std::size_t r = rows[used - 1];
    Polynomial acc(vars);
    // Sign follows the position of column c among the selected columns.
    std::size_t position = 0;
    for (std::size_t c = 0; c < k; ++c) {
      if (!(mask & (std::size_t{1} << c))) continue;
      const Polynomial& entry = m[r][cols[c]];
      const Polynomial& sub = det[mask & ~(std::size_t{1} << c)];
      if (!entry.is_zero() && !sub.is_zero()) {
        const bool negative = ((used - 1 + position) % 2) == 1;
        if (negative) acc -= entry * sub;
        else acc += entry * sub;
      }
      ++position;
    }
    det[mask] = std::move(acc);
  }
  return det.back();
}

}  // namespace orbitadm
