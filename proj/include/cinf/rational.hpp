#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace cinf {

// Exact rational scalars. Term constants and all polynomial algebra run on
// these; doubles appear only at evaluation time.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

inline std::string rational_to_string(const Rational& q) {
  const BigInt num = numerator(q);
  const BigInt den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// Accepts -?[0-9]+(/[0-9]+)?; anything else (including zero denominators)
// yields nullopt.
std::optional<Rational> parse_rational(const std::string& text);

}  // namespace cinf
