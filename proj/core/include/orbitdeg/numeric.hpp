#pragma once

#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace orbitdeg {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
// 50 significant decimal digits.
using Real = boost::multiprecision::mpfr_float_50;

// Standard binomial coefficient C(a, b) for 0 <= b <= a.
Integer binomial(long a, long b);

// Binomial with the counting convention used by the even-multigraph
// generating function: C(a, 0) = 1 for every a (including a = -1),
// C(a, b) = 0 whenever b > a and b != 0. Throws DomainError for b < 0.
// This is deliberately not the generalized negative-upper-index binomial.
Integer binomial_ext(long a, long b);

Integer factorial(long n);
Integer pow_int(const Integer& base, unsigned long exponent);

bool is_integral(const Rational& q);
// Throws InternalConsistencyError naming `what` if q is not an integer.
Integer require_integral(const Rational& q, const char* what);

Real to_real(const Integer& z);
Real to_real(const Rational& q);

// "p" for integers, "p/q" otherwise. With `always_fraction`, integers are
// rendered as "p/1".
std::string to_string(const Integer& z);
std::string to_string(const Rational& q, bool always_fraction = false);

// Decimal rendering with exactly `significant` significant digits. Fixed
// notation for moderate magnitudes, scientific otherwise.
std::string to_decimal(const Real& x, int significant);
std::string to_decimal(const Rational& q, int significant);

}  // namespace orbitdeg
