#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "consec/natural.hpp"

namespace consec {

struct PrimePower {
  Natural prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, primes ascending.
using Factorization = std::vector<PrimePower>;

/// Exact non-negative rational in lowest terms. Ordering is by
/// cross-multiplication in 128 bits, never through floating point.
struct Rational {
  Natural num = 0;
  Natural den = 1;

  static Rational reduced(Natural num, Natural den);

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return static_cast<Wide>(a.num) * b.den <=> static_cast<Wide>(b.num) * a.den;
  }
};

/// Exponent of 2 in n; n must be nonzero.
unsigned v2(Natural n);

/// n with every factor of 2 removed.
Natural odd_part(Natural n);

bool is_power_of_two(Natural n);

/// Deterministic Miller-Rabin over the full 64-bit range.
bool is_prime(Natural n);

/// Smallest prime strictly greater than x; OverflowError past 2^64 - 59.
Natural next_prime_after(Natural x);

/// Largest e with p^e | m. InvalidInput if p is not prime or m is zero.
unsigned valuation(Natural p, Natural m);

Factorization factorize(Natural n);

/// Every divisor of the number described by `f` that is strictly below
/// `bound`, ascending. Works in 128 bits so the factored number itself may
/// exceed the Natural range.
std::vector<Wide> divisors_below(const Factorization& f, Wide bound);

std::vector<Natural> divisors(Natural n);

/// Odd divisors of n, ascending; first is 1 and last is odd_part(n).
std::vector<Natural> odd_divisors(Natural n);

/// Divisors of l strictly below k, ascending.
std::vector<Natural> factors_below(Natural l, Natural k);

/// m'/m for the complementary divisor pair m <= m' of k that is closest to
/// the square root; m is the largest divisor of k with m^2 <= k.
Rational q_ratio(Natural k);

/// Product of two factorizations.
Factorization merge(const Factorization& a, const Factorization& b);

}  // namespace consec
