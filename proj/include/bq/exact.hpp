#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace bq {

// All arithmetic in this library is exact. Integers are arbitrary
// precision and rationals are reduced fractions of those; no routine
// anywhere converts to floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& x) { return x.str(); }

inline std::string to_string(const Rat& x) {
  Int num = boost::multiprecision::numerator(x);
  Int den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline bool is_integer(const Rat& x) {
  return boost::multiprecision::denominator(x) == 1;
}

// Thrown when an enumeration or closure exceeds its configured cap.
// Distinct from every mathematical failure mode so callers can map it
// to a dedicated exit status.
class resource_exhausted : public std::runtime_error {
 public:
  explicit resource_exhausted(const std::string& what)
      : std::runtime_error(what) {}
};

// Thrown when exact data contradicts itself (non-integral genus,
// non-integral Euler characteristic, ...). Indicates bad input data,
// not a resource problem.
class inconsistency : public std::runtime_error {
 public:
  explicit inconsistency(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace bq
