#include "consec/inverse.hpp"

#include <bit>

#include "consec/arith.hpp"

namespace consec {

namespace {

// Step 1: sets that cannot be a spectrum, so that later steps are total.
bool rejected_early(const Spectrum& s) {
  if (s.empty() || !s.contains(1)) return true;
  if (s.even().size() > s.odd().size()) return true;
  for (Natural e : s.even()) {
    if (v2(e) != v2(s.even().front())) return true;
  }
  return false;
}

Natural candidate(const Spectrum& s) {
  const auto& even = s.even();
  if (even.empty()) {
    const Natural m1 = *s.max_odd();
    const auto v = static_cast<unsigned>(std::bit_width(m1) - 1);
    return checked_shl(m1, v);
  }
  if (even.size() < s.odd().size()) {
    const auto d = difference_set(s);
    const Natural min_even = even.front();
    CONSEC_CHECK(min_even % 2 == 0, "min S0 must be even");
    return checked_mul(checked_mul(min_even / 2, d.front()), d.back());
  }
  const Natural m0 = even.back();
  CONSEC_CHECK(m0 % 2 == 0, "max S0 must be even");
  const auto e = exceptional_set(s);
  if (!e.empty()) return checked_mul(m0 / 2, e.front());
  return checked_mul(m0 / 2, next_prime_after(m0));
}

}  // namespace

InverseResult numbers_with_spectrum(std::span<const Natural> elements) {
  InverseResult result;
  result.input = Spectrum::from_elements({elements.begin(), elements.end()});
  if (rejected_early(result.input)) return result;
  const Natural n = candidate(result.input);
  result.representative = n;
  if (lspec(n) == result.input) result.spectral_class = spectral_class_of(result.input, n);
  return result;
}

}  // namespace consec
