#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace toricoh {

// All arithmetic in this library is exact. Integers are arbitrary precision;
// rationals never appear as a type, only as (numerator, denominator) pairs
// handled inline with floor/ceil divisions.
using Int = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Contract violation on user-supplied input; the CLI maps this to exit 2.
struct DomainError : Error {
  using Error::Error;
};

// A sign chamber with nonzero homology came out unbounded. On a validated
// complete fan this cannot happen, so it signals bad input or an engine bug.
struct UnboundedChamberError : DomainError {
  using DomainError::DomainError;
};

inline Int floor_div(Int a, Int b) {
  if (b < 0) {
    a = -a;
    b = -b;
  }
  Int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

inline Int gcd_of(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int abs_of(const Int& a) { return boost::multiprecision::abs(a); }

}  // namespace toricoh
