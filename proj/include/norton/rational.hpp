#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace norton {

using BigInt = mpz_class;
using Rational = mpq_class;
using Vector = std::vector<Rational>;

// Always "num/den", including integers ("3/1"), so serialized output is bit-stable.
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

std::string to_string(const Vector& v);

bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
Vector hadamard(const Vector& a, const Vector& b);
Rational dot(const Vector& a, const Vector& b);

// q^e for any integer exponent (negative allowed).
Rational rational_pow(const Rational& base, long exponent);

} // namespace norton
