#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace permrange {

// All counting and value arithmetic is exact. BigInt never overflows and
// Rational is always stored reduced with a positive denominator.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Bad user input: malformed files, out-of-range parameters, precondition
// violations. Maps to exit code 2 at the CLI boundary.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computation was refused because it would exceed the configured work
// budget. Maps to exit code 3 at the CLI boundary.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// x (x-1) ... (x-k+1); the empty product for k = 0.
inline BigInt falling_factorial(const BigInt& x, int64_t k) {
  BigInt r = 1;
  for (int64_t t = 0; t < k; ++t) r *= x - t;
  return r;
}

inline BigInt int_pow(const BigInt& base, uint64_t exp) {
  BigInt r = 1, b = base;
  while (exp != 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

// base^exp for possibly negative exp; base must be nonzero when exp < 0.
inline Rational rational_pow(const Rational& base, int64_t exp) {
  if (exp >= 0) {
    Rational r = 1, b = base;
    uint64_t e = static_cast<uint64_t>(exp);
    while (e != 0) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }
  if (base == 0) throw InputError("rational_pow: 0 cannot be raised to a negative power");
  return 1 / rational_pow(base, -exp);
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

// "p" for integers, "p/q" otherwise.
inline std::string to_decimal(const Rational& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

// floor(num/den) for den > 0.
inline BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;
  if ((num % den) != 0 && (num < 0) != (den < 0)) --q;
  return q;
}

inline BigInt floor_rational(const Rational& v) {
  return floor_div(numerator(v), denominator(v));
}

inline BigInt ceil_rational(const Rational& v) {
  return -floor_rational(-v);
}

// Rough log10 for reporting; exact enough for human-readable magnitude.
double log10_approx(const BigInt& v);
double log10_approx(const Rational& v);

}  // namespace permrange
