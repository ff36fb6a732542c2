#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace orbitadm {

/// Exact rational in lowest terms with positive denominator (GMP mpq).
using Rational = mpq_class;

/// Coordinates of an element of g (or a functional on g) in the algebra basis.
using VectorQ = std::vector<Rational>;

Rational make_rational(long num, long den = 1);

/// Accepts "p", "p/q" and finite decimals such as "-1.25" (converted exactly).
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

double to_double(const Rational& q);

VectorQ zero_vector(std::size_t n);
VectorQ unit_vector(std::size_t n, std::size_t k);
bool is_zero(const VectorQ& v);

}  // namespace orbitadm
