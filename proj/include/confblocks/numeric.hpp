#ifndef CONFBLOCKS_NUMERIC_HPP
#define CONFBLOCKS_NUMERIC_HPP

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace confblocks {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Input violates a mathematical domain (bad partition, weight outside P_l, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A theorem hypothesis or operation precondition does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Computation would exceed a configured size bound.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Text input could not be parsed.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal identity failed; indicates a bug rather than bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline std::string to_string(const BigInt& v) { return v.str(); }

// Always "p/q" in lowest terms, q > 0.
inline std::string to_string(const Rational& v) {
  return boost::multiprecision::numerator(v).str() + "/" +
         boost::multiprecision::denominator(v).str();
}

inline Rational make_rational(long long p, long long q) { return Rational(p) / Rational(q); }

}  // namespace confblocks

#endif  // CONFBLOCKS_NUMERIC_HPP
