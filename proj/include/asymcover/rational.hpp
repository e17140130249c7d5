#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace asymcover {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt ceil_div(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  BigInt quo = num / den;
  if (quo * den < num) ++quo;  // den > 0 always
  return quo;
}

inline std::int64_t ceil_to_int64(const Rational& q) { return static_cast<std::int64_t>(ceil_div(q)); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace asymcover
