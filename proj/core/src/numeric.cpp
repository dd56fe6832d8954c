#include "orbitdeg/numeric.hpp"

#include <cstdlib>
#include <string>

#include <gmp.h>

#include "orbitdeg/errors.hpp"

namespace orbitdeg {

Integer binomial(long a, long b) {
  if (b < 0 || a < 0 || b > a) {
    throw DomainError("binomial: requires 0 <= b <= a, got a=" + std::to_string(a) +
                      " b=" + std::to_string(b));
  }
  Integer out;
  mpz_bin_uiui(out.backend().data(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

Integer binomial_ext(long a, long b) {
  if (b < 0) {
    throw DomainError("binomial_ext: lower index must be nonnegative, got " + std::to_string(b));
  }
  if (b == 0) return Integer(1);
  if (b > a) return Integer(0);
  return binomial(a, b);
}

Integer factorial(long n) {
  if (n < 0) throw DomainError("factorial: negative argument " + std::to_string(n));
  Integer out;
  mpz_fac_ui(out.backend().data(), static_cast<unsigned long>(n));
  return out;
}

Integer pow_int(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.backend().data(), base.backend().data(), exponent);
  return out;
}

bool is_integral(const Rational& q) { return denominator(q) == 1; }

Integer require_integral(const Rational& q, const char* what) {
  if (!is_integral(q)) {
    throw InternalConsistencyError(std::string(what) + ": expected an integer, got " + q.str());
  }
  return numerator(q);
}

Real to_real(const Integer& z) { return Real(z); }

Real to_real(const Rational& q) { return Real(numerator(q)) / Real(denominator(q)); }

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q, bool always_fraction) {
  if (is_integral(q) && !always_fraction) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_decimal(const Real& x, int significant) {
  if (significant < 1) significant = 1;
  if (x == 0) return "0";
  // Scientific rendering gives correctly rounded digits and the exponent
  // after rounding; fixed notation is rebuilt from it.
  std::string sci = x.str(significant - 1, std::ios_base::scientific);
  bool negative = false;
  if (!sci.empty() && sci.front() == '-') {
    negative = true;
    sci.erase(0, 1);
  }
  const auto epos = sci.find_first_of("eE");
  std::string mantissa = sci.substr(0, epos);
  const long exponent = epos == std::string::npos ? 0 : std::strtol(sci.c_str() + epos + 1, nullptr, 10);
  std::string digits;
  for (char c : mantissa) {
    if (c != '.') digits.push_back(c);
  }
  std::string out;
  if (exponent >= -5 && exponent < significant) {
    if (exponent < 0) {
      out = "0." + std::string(static_cast<std::size_t>(-exponent - 1), '0') + digits;
    } else {
      const auto int_len = static_cast<std::size_t>(exponent + 1);
      out = digits.substr(0, int_len);
      if (digits.size() > int_len) out += "." + digits.substr(int_len);
    }
  } else {
    out = digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + std::string(exponent < 0 ? "-" : "+") + std::to_string(std::labs(exponent));
  }
  return negative ? "-" + out : out;
}

std::string to_decimal(const Rational& q, int significant) { return to_decimal(to_real(q), significant); }

}  // namespace orbitdeg
