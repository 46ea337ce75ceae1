#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pg5 {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const Rational& x) { return x.sign(); }
inline int sign(const BigInt& x) { return x.sign(); }

inline double to_double(const Rational& x) { return x.template convert_to<double>(); }
inline double to_double(const BigInt& x) { return x.template convert_to<double>(); }

inline std::string to_string(const Rational& x) { return x.str(); }

/// True iff x is the square of a rational, writing the root to *root when given.
inline bool rational_square_root(const Rational& x, Rational* root = nullptr) {
  if (x.sign() < 0) return false;
  BigInt num = numerator(x), den = denominator(x);
  BigInt rn = boost::multiprecision::sqrt(num);
  BigInt rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return false;
  if (root) *root = Rational(rn, rd);
  return true;
}

}  // namespace pg5
