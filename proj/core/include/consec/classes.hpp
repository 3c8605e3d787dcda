#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "consec/natural.hpp"
#include "consec/spectrum.hpp"

namespace consec {

/// An explicit finite class.
struct FiniteClass {
  std::vector<Natural> members;
  friend bool operator==(const FiniteClass&, const FiniteClass&) = default;
};

/// {2^(min_exponent + i) * odd_part : i >= 0}
struct PowerOfTwoFamily {
  Natural odd_part = 1;
  unsigned min_exponent = 0;
  friend bool operator==(const PowerOfTwoFamily&, const PowerOfTwoFamily&) = default;
};

/// {scale * p : p prime, p > prime_threshold} together with `extras`, which
/// are stored already multiplied by `scale`.
struct PrimeScaledFamily {
  Natural scale = 1;
  Natural prime_threshold = 2;
  std::vector<Natural> extras;
  friend bool operator==(const PrimeScaledFamily&, const PrimeScaledFamily&) = default;
};

/// Set of all numbers sharing one length spectrum. Equality is structural.
using SpectralClass = std::variant<FiniteClass, PowerOfTwoFamily, PrimeScaledFamily>;

enum class Cardinality { One, Two, Infinite };

struct PrimeExcess {
  Natural prime;
  unsigned gamma;    // largest e with prime^e in S1
  unsigned mu;       // exponent of prime in max S1
  unsigned epsilon;  // gamma - mu
  friend bool operator==(const PrimeExcess&, const PrimeExcess&) = default;
};

/// Excess data of a balanced spectrum, one entry per odd prime in S1.
struct ExcessiveProfile {
  Natural max_odd = 1;
  std::vector<PrimeExcess> primes;
  Natural excessive_number = 1;

  bool is_excessive() const { return excessive_number > 1; }
  std::vector<Natural> excessive_primes() const;
  std::optional<PrimeExcess> find(Natural p) const;
};

/// S1 with its |S0| smallest elements removed; empty when |S0| > |S1|.
std::vector<Natural> difference_set(const Spectrum& s);

/// min D(S) * max D(S). InvalidInput unless |S1| > |S0|.
Natural largest_odd_factor_from_spectrum(const Spectrum& s);

/// {a in S1*S1 : a > max S0, divisors of a * max S1 below a are exactly S1}.
/// InvalidInput if either parity is absent. OverflowError if a member does
/// not fit in a Natural.
std::vector<Natural> exceptional_set(const Spectrum& s);

/// InvalidInput if `s` is not balanced or is inconsistent with being a
/// spectrum (a prime of max S1 missing from S1).
ExcessiveProfile excessive_profile(const Spectrum& s);

/// Algorithm 1 on a spectrum already known to equal lspec(n).
SpectralClass spectral_class_of(const Spectrum& s, Natural n);
SpectralClass spectral_class(Natural n);

bool class_contains(const SpectralClass& c, Natural x);

/// The `count` smallest members, ascending. OverflowError when a requested
/// member exceeds the Natural range.
std::vector<Natural> class_enumerate(const SpectralClass& c, std::size_t count);

Cardinality class_cardinality(const SpectralClass& c);

}  // namespace consec
