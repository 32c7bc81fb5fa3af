#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <stdexcept>
#include <string>

namespace rhotensor {

/// Arbitrary-precision integer used for every multiplicity and dimension.
using Integer = boost::multiprecision::cpp_int;
/// Exact rational used for form values and GKO scalars.
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an internal invariant is violated. Always a bug signal, never a
/// mathematical verdict.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a lattice precondition (e.g. lam + mu - nu in Q) is violated,
/// so callers can tell it apart from an ordinary false result.
class LatticeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline std::string to_string(const Integer& v) { return v.str(); }

inline std::string to_string(const Rational& v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

inline Integer parse_integer(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("bad integer literal '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer literal '" + s + "'");
  }
  return Integer(s);
}

inline Rational make_rational(long long num, long long den) { return Rational(num, den); }

}  // namespace rhotensor
