#include "orbitadm/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace orbitadm {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    const mpz_class d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    value = Rational(mpz_class(std::string(num)), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    }
    std::string digits = std::string(whole) + std::string(frac);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    value = Rational(mpz_class(digits), scale);
  } else {
    if (!all_digits(body)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    value = Rational(mpz_class(std::string(body)));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

VectorQ zero_vector(std::size_t n) { return VectorQ(n, Rational(0)); }

VectorQ unit_vector(std::size_t n, std::size_t k) {
  VectorQ v = zero_vector(n);
  v.at(k) = 1;
  return v;
}

bool is_zero(const VectorQ& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

}  // namespace orbitadm
