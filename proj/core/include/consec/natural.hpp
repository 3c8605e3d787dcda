#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace consec {

/// Positive integer in the 64-bit range. Zero is rejected at API entry
/// points with InvalidInput; intermediate products are formed in 128 bits.
using Natural = std::uint64_t;
using Wide = unsigned __int128;

inline constexpr Natural kNaturalMax = std::numeric_limits<Natural>::max();

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A result does not fit in a Natural.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Input violates a precondition (zero, non-prime modulus, malformed set).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

inline Natural require_positive(Natural n, const char* what = "n") {
  if (n == 0) throw InvalidInput(std::string(what) + " must be a positive integer");
  return n;
}

inline Natural narrow(Wide w, const char* what = "value") {
  if (w > kNaturalMax) throw OverflowError(std::string(what) + " exceeds the 64-bit range");
  return static_cast<Natural>(w);
}

inline Natural checked_mul(Natural a, Natural b) {
  return narrow(static_cast<Wide>(a) * b, "product");
}

inline Natural checked_add(Natural a, Natural b) {
  return narrow(static_cast<Wide>(a) + b, "sum");
}

/// a * 2^shift, exact or OverflowError.
inline Natural checked_shl(Natural a, unsigned shift) {
  if (a == 0) return 0;
  if (shift >= 64) throw OverflowError("shift exceeds the 64-bit range");
  Wide w = static_cast<Wide>(a) << shift;
  return narrow(w, "shifted value");
}

inline Natural checked_pow(Natural base, unsigned exp) {
  Natural r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

std::string to_string(Wide w);

}  // namespace consec

namespace consec {

/// A structural guarantee failed. Reaching this means a bug or a
/// counterexample to a theorem the library relies on.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace consec

#define CONSEC_CHECK(cond, msg)                                               \
  do {                                                                        \
    if (!(cond)) throw ::consec::InvariantViolation(std::string(msg) + " [" #cond "]"); \
  } while (0)
