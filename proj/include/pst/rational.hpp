#pragma once

#include <boost/rational.hpp>
#include <numbers>
#include <string>

namespace pst {

// Exact scalar for times measured in units of pi.
using Rational = boost::rational<long long>;

// Render r as "pi*p/q" ("pi*p" when q == 1, "0" when p == 0).
inline std::string pi_string(const Rational& r) {
  if (r.numerator() == 0) return "0";
  std::string s = "pi*" + std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

// Numeric value of pi*r.
inline double pi_value(const Rational& r) {
  return std::numbers::pi * static_cast<double>(r.numerator()) /
         static_cast<double>(r.denominator());
}

}  // namespace pst
