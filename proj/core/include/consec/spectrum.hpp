#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "consec/natural.hpp"

namespace consec {

/// A run of `length` consecutive naturals starting at `first` whose sum is
/// `target`. The run is never materialized.
struct Decomposition {
  Natural first;
  Natural length;
  Natural target;

  Natural last() const { return first + (length - 1); }
  bool is_odd() const { return (length & 1) != 0; }

  /// The odd divisor of `target` this decomposition corresponds to.
  Natural factor() const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Which of the structural invariants of a length spectrum a set satisfies.
struct SpectrumDiagnostics {
  bool nonempty = false;
  bool contains_one = false;
  bool even_not_more_than_odd = false;
  bool uniform_even_valuation = false;
  /// even part equals 2^(v+1) times the smallest |S0| odd elements
  bool even_mirrors_odd = false;
  bool odd_divisor_closed = false;

  bool all() const {
    return nonempty && contains_one && even_not_more_than_odd && uniform_even_valuation &&
           even_mirrors_odd && odd_divisor_closed;
  }
  std::vector<std::string> failures() const;
};

enum class SpectrumShape { Unmixed, Balanced, Lopsided };

std::string to_string(SpectrumShape shape);

/// Canonical ascending set of decomposition lengths, with its odd part S1
/// and even part S0.
class Spectrum {
 public:
  Spectrum() = default;

  /// Sorts and dedupes. Throws InvalidInput on a zero element. The result is
  /// not checked against the spectrum invariants; see diagnose().
  static Spectrum from_elements(std::vector<Natural> elements);

  const std::vector<Natural>& elements() const { return elements_; }
  const std::vector<Natural>& odd() const { return odd_; }
  const std::vector<Natural>& even() const { return even_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(Natural x) const;

  /// max S0, if any even element exists.
  std::optional<Natural> max_even() const;
  /// max S1, if any odd element exists.
  std::optional<Natural> max_odd() const;

  SpectrumDiagnostics diagnose() const;

  friend bool operator==(const Spectrum& a, const Spectrum& b) { return a.elements_ == b.elements_; }

 private:
  std::vector<Natural> elements_;
  std::vector<Natural> odd_;
  std::vector<Natural> even_;
};

/// One decomposition per odd divisor of n, sorted by length.
std::vector<Decomposition> decompositions(Natural n);

/// Same, from a precomputed ascending list of the odd divisors of n.
std::vector<Decomposition> decompositions_from(Natural n, std::span<const Natural> odd_divisors);

Spectrum lspec(Natural n);
Spectrum lspec_from(Natural n, std::span<const Natural> odd_divisors);

/// Independent route: tries every length l with l(l+1)/2 <= n directly.
Spectrum lspec_oracle(Natural n);

SpectrumShape shape_of(const Spectrum& s);

/// Shape from the arithmetic of n alone, without building the spectrum.
SpectrumShape shape_of_number(Natural n);

/// v2(n) recovered from the even elements. InvalidInput if they disagree.
std::optional<unsigned> v2_from_spectrum(const Spectrum& s);

}  // namespace consec
