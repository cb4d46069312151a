#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace octopus {

// Exact arithmetic used throughout: big integers for counting, rationals for
// group-algebra coefficients. Floating point enters only at the matrix
// boundary (spectral module).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return static_cast<double>(r); }
inline double to_double(const BigInt& z) { return static_cast<double>(z); }

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace octopus
