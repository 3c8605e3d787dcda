#pragma once

#include <optional>
#include <span>

#include "consec/classes.hpp"
#include "consec/spectrum.hpp"

namespace consec {

/// Outcome of inverting a set: the class of numbers having it as spectrum,
/// or nullopt when no number does.
struct InverseResult {
  Spectrum input;                         // canonicalized input set
  std::optional<Natural> representative;  // candidate n, when one was formed
  std::optional<SpectralClass> spectral_class;

  bool is_spectrum() const { return spectral_class.has_value(); }
};

/// Algorithm 2. Input may contain duplicates in any order; a zero element
/// is InvalidInput. Overflow while forming the candidate is OverflowError,
/// never a negative answer.
InverseResult numbers_with_spectrum(std::span<const Natural> elements);

}  // namespace consec
