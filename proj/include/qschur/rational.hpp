#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace qschur {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when user-supplied data violates a documented precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when input is a symmetric function outside the Q-function subring.
class NotInQSpan : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Thrown when two routes that must agree exactly do not; always a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Thrown by brute-force enumerators asked for more than they will attempt.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Int factorial(long n) {
  if (n < 0) throw InvalidInput("factorial of negative argument");
  Int r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Int pow2(long e) {
  if (e < 0) throw InvalidInput("pow2 of negative exponent");
  Int r = 1;
  r <<= static_cast<unsigned>(e);
  return r;
}

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

// Exact text form: "5", "-3", or "3/4". Never a float.
inline std::string rat_to_string(const Rat& x) {
  if (is_integer(x)) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace qschur
