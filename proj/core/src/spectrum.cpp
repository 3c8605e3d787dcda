#include "consec/spectrum.hpp"

#include <algorithm>

#include "consec/arith.hpp"

namespace consec {

Natural Decomposition::factor() const {
  if (is_odd()) return length;
  return static_cast<Natural>(2 * static_cast<Wide>(target) / length);
}

std::vector<std::string> SpectrumDiagnostics::failures() const {
  std::vector<std::string> out;
  if (!nonempty) out.emplace_back("empty set");
  if (!contains_one) out.emplace_back("1 is missing");
  if (!even_not_more_than_odd) out.emplace_back("more even than odd elements");
  if (!uniform_even_valuation) out.emplace_back("even elements differ in 2-adic valuation");
  if (!even_mirrors_odd) out.emplace_back("even part is not 2^(v+1) times the smallest odd elements");
  if (!odd_divisor_closed) out.emplace_back("odd part is not closed under divisors");
  return out;
}

std::string to_string(SpectrumShape shape) {
  switch (shape) {
    case SpectrumShape::Unmixed:
      return "unmixed";
    case SpectrumShape::Balanced:
      return "balanced";
    case SpectrumShape::Lopsided:
      return "lopsided";
  }
  return "?";
}

Spectrum Spectrum::from_elements(std::vector<Natural> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (!elements.empty() && elements.front() == 0) {
    throw InvalidInput("spectrum elements must be positive");
  }
  Spectrum s;
  s.elements_ = std::move(elements);
  for (Natural x : s.elements_) (x & 1 ? s.odd_ : s.even_).push_back(x);
  return s;
}

bool Spectrum::contains(Natural x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::optional<Natural> Spectrum::max_even() const {
  if (even_.empty()) return std::nullopt;
  return even_.back();
}

std::optional<Natural> Spectrum::max_odd() const {
  if (odd_.empty()) return std::nullopt;
  return odd_.back();
}

SpectrumDiagnostics Spectrum::diagnose() const {
  SpectrumDiagnostics d;
  d.nonempty = !elements_.empty();
  d.contains_one = contains(1);
  d.even_not_more_than_odd = even_.size() <= odd_.size();
  d.uniform_even_valuation = true;
  for (Natural e : even_) d.uniform_even_valuation &= (v2(e) == v2(even_.front()));

  d.even_mirrors_odd = d.even_not_more_than_odd && d.uniform_even_valuation;
  if (d.even_mirrors_odd && !even_.empty()) {
    const unsigned shift = v2(even_.front());
    for (std::size_t i = 0; i < even_.size(); ++i) {
      if (static_cast<Wide>(odd_[i]) << shift != even_[i]) d.even_mirrors_odd = false;
    }
  }

  d.odd_divisor_closed = true;
  for (Natural k : odd_) {
    for (Natural f : divisors(k)) {
      if (!std::binary_search(odd_.begin(), odd_.end(), f)) {
        d.odd_divisor_closed = false;
        break;
      }
    }
    if (!d.odd_divisor_closed) break;
  }
  return d;
}

std::vector<Decomposition> decompositions_from(Natural n, std::span<const Natural> odd_divs) {
  require_positive(n);
  const Wide twice = 2 * static_cast<Wide>(n);
  std::vector<Decomposition> out;
  out.reserve(odd_divs.size());
  for (Natural k : odd_divs) {
    const Wide sq = static_cast<Wide>(k) * k;
    CONSEC_CHECK(sq != twice, "odd square equals an even number");
    const Natural quotient = n / k;
    const Natural half = (k - 1) / 2;
    if (sq < twice) {
      CONSEC_CHECK(quotient > half, "odd decomposition must start at 1 or later");
      out.push_back({quotient - half, k, n});
    } else {
      CONSEC_CHECK(half + 1 > quotient, "even decomposition must start at 1 or later");
      out.push_back({half - quotient + 1, static_cast<Natural>(twice / k), n});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Decomposition& a, const Decomposition& b) { return a.length < b.length; });
  return out;
}

std::vector<Decomposition> decompositions(Natural n) {
  require_positive(n);
  const auto divs = odd_divisors(n);
  return decompositions_from(n, divs);
}

Spectrum lspec_from(Natural n, std::span<const Natural> odd_divs) {
  std::vector<Natural> lengths;
  lengths.reserve(odd_divs.size());
  for (const auto& d : decompositions_from(n, odd_divs)) lengths.push_back(d.length);
  auto s = Spectrum::from_elements(std::move(lengths));
  CONSEC_CHECK(s.size() == odd_divs.size(), "decomposition lengths must be distinct");
  CONSEC_CHECK(s.contains(1), "every number has the trivial decomposition");
  CONSEC_CHECK(s.even().size() <= s.odd().size(), "even decompositions cannot outnumber odd ones");
  return s;
}

Spectrum lspec(Natural n) {
  require_positive(n);
  const auto divs = odd_divisors(n);
  return lspec_from(n, divs);
}

Spectrum lspec_oracle(Natural n) {
  require_positive(n);
  std::vector<Natural> lengths;
  // a run of length l starting at f sums to l*f + l(l-1)/2
  for (Natural l = 1; static_cast<Wide>(l) * (l + 1) / 2 <= n; ++l) {
    const Wide offset = static_cast<Wide>(l) * (l - 1) / 2;
    const Wide rest = n - offset;
    if (rest > 0 && rest % l == 0) lengths.push_back(l);
  }
  return Spectrum::from_elements(std::move(lengths));
}

SpectrumShape shape_of(const Spectrum& s) {
  if (s.even().empty()) return SpectrumShape::Unmixed;
  if (s.even().size() == s.odd().size()) return SpectrumShape::Balanced;
  return SpectrumShape::Lopsided;
}

SpectrumShape shape_of_number(Natural n) {
  require_positive(n);
  const unsigned alpha = v2(n);
  const Natural k = n >> alpha;
  // 2^(alpha+1) > k; alpha <= 63 so the power fits in 128 bits
  const Wide pow = static_cast<Wide>(1) << (alpha + 1);
  if (pow > k) return SpectrumShape::Unmixed;
  const Rational q = q_ratio(k);
  if (static_cast<Wide>(q.num) > pow * q.den) return SpectrumShape::Balanced;
  return SpectrumShape::Lopsided;
}

std::optional<unsigned> v2_from_spectrum(const Spectrum& s) {
  if (s.even().empty()) return std::nullopt;
  const unsigned v = v2(s.even().front());
  for (Natural e : s.even()) {
    if (v2(e) != v) throw InvalidInput("even elements disagree on 2-adic valuation");
  }
  return v - 1;
}

}  // namespace consec
