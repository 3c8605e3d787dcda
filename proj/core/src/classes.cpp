#include "consec/classes.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "consec/arith.hpp"

namespace consec {

std::vector<Natural> ExcessiveProfile::excessive_primes() const {
  std::vector<Natural> out;
  for (const auto& p : primes) {
    if (p.epsilon > 0) out.push_back(p.prime);
  }
  return out;
}

std::optional<PrimeExcess> ExcessiveProfile::find(Natural p) const {
  for (const auto& e : primes) {
    if (e.prime == p) return e;
  }
  return std::nullopt;
}

std::vector<Natural> difference_set(const Spectrum& s) {
  const auto& odd = s.odd();
  const std::size_t drop = s.even().size();
  if (drop > odd.size()) return {};
  return {odd.begin() + static_cast<std::ptrdiff_t>(drop), odd.end()};
}

Natural largest_odd_factor_from_spectrum(const Spectrum& s) {
  if (s.odd().size() <= s.even().size()) {
    throw InvalidInput("largest odd factor needs more odd than even elements");
  }
  const auto d = difference_set(s);
  return checked_mul(d.front(), d.back());
}

std::vector<Natural> exceptional_set(const Spectrum& s) {
  if (s.even().empty() || s.odd().empty()) {
    throw InvalidInput("exceptional set needs both even and odd elements");
  }
  const auto& odd = s.odd();
  const Natural m0 = *s.max_even();

  std::vector<Factorization> factored;
  factored.reserve(odd.size());
  for (Natural k : odd) factored.push_back(factorize(k));
  const Factorization& f_m1 = factored.back();

  std::set<Wide> tried;
  std::vector<Wide> found;
  for (std::size_t i = 0; i < odd.size(); ++i) {
    for (std::size_t j = i; j < odd.size(); ++j) {
      const Wide a = static_cast<Wide>(odd[i]) * odd[j];
      if (a <= m0 || !tried.insert(a).second) continue;
      const auto below = divisors_below(merge(merge(factored[i], factored[j]), f_m1), a);
      if (below.size() != odd.size()) continue;
      if (std::equal(below.begin(), below.end(), odd.begin(),
                     [](Wide d, Natural k) { return d == k; })) {
        found.push_back(a);
      }
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<Natural> out;
  out.reserve(found.size());
  for (Wide a : found) out.push_back(narrow(a, "exceptional set element"));
  return out;
}

ExcessiveProfile excessive_profile(const Spectrum& s) {
  if (shape_of(s) != SpectrumShape::Balanced) {
    throw InvalidInput("excessive profile is defined for balanced spectra only");
  }
  const auto& odd = s.odd();
  ExcessiveProfile profile;
  profile.max_odd = odd.back();

  std::map<Natural, unsigned> mu;
  for (const auto& [p, e] : factorize(profile.max_odd)) mu[p] = e;
  std::set<Natural> primes;
  for (Natural k : odd) {
    if (k > 2 && is_prime(k)) primes.insert(k);
  }
  for (const auto& [p, e] : mu) {
    if (!primes.count(p)) {
      throw InvalidInput("prime " + std::to_string(p) + " divides max S1 but is not in S1");
    }
  }

  for (Natural p : primes) {
    unsigned gamma = 0;
    Wide power = p;
    for (unsigned e = 1; power <= profile.max_odd; ++e, power *= p) {
      if (s.contains(static_cast<Natural>(power))) gamma = e;
    }
    const unsigned mu_p = mu.count(p) ? mu[p] : 0;
    if (gamma < mu_p) {
      throw InvalidInput("set is not a spectrum: a prime power of max S1 is missing");
    }
    profile.primes.push_back({p, gamma, mu_p, gamma - mu_p});
    profile.excessive_number = checked_mul(profile.excessive_number, checked_pow(p, gamma - mu_p));
  }
  return profile;
}

SpectralClass spectral_class_of(const Spectrum& s, Natural n) {
  switch (shape_of(s)) {
    case SpectrumShape::Unmixed: {
      const Natural m1 = *s.max_odd();
      // least v with 2^(v+1) > m1
      const auto v = static_cast<unsigned>(std::bit_width(m1) - 1);
      return PowerOfTwoFamily{m1, v};
    }
    case SpectrumShape::Lopsided:
      return FiniteClass{{n}};
    case SpectrumShape::Balanced:
      break;
  }
  const Natural m0 = *s.max_even();
  CONSEC_CHECK(m0 % 2 == 0, "max S0 must be even");
  const Natural scale = m0 / 2;
  std::vector<Natural> scaled;
  for (Natural a : exceptional_set(s)) scaled.push_back(checked_mul(scale, a));
  if (excessive_profile(s).is_excessive()) {
    CONSEC_CHECK(!scaled.empty() && scaled.size() <= 2, "finite class must have 1 or 2 members");
    return FiniteClass{std::move(scaled)};
  }
  return PrimeScaledFamily{scale, m0, std::move(scaled)};
}

SpectralClass spectral_class(Natural n) {
  require_positive(n);
  return spectral_class_of(lspec(n), n);
}

namespace {

struct ContainsVisitor {
  Natural x;
  bool operator()(const FiniteClass& c) const {
    return std::binary_search(c.members.begin(), c.members.end(), x);
  }
  bool operator()(const PowerOfTwoFamily& c) const {
    return x != 0 && odd_part(x) == c.odd_part && v2(x) >= c.min_exponent;
  }
  bool operator()(const PrimeScaledFamily& c) const {
    if (std::binary_search(c.extras.begin(), c.extras.end(), x)) return true;
    if (x == 0 || x % c.scale != 0) return false;
    const Natural p = x / c.scale;
    return p > c.prime_threshold && is_prime(p);
  }
};

struct EnumerateVisitor {
  std::size_t count;

  std::vector<Natural> operator()(const FiniteClass& c) const {
    const std::size_t take = std::min(count, c.members.size());
    return {c.members.begin(), c.members.begin() + static_cast<std::ptrdiff_t>(take)};
  }
  std::vector<Natural> operator()(const PowerOfTwoFamily& c) const {
    std::vector<Natural> out;
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(checked_shl(c.odd_part, c.min_exponent + static_cast<unsigned>(i)));
    }
    return out;
  }
  std::vector<Natural> operator()(const PrimeScaledFamily& c) const {
    std::vector<Natural> out;
    auto extra = c.extras.begin();
    Natural p = next_prime_after(c.prime_threshold);
    Natural scaled = checked_mul(c.scale, p);
    while (out.size() < count) {
      if (extra != c.extras.end() && *extra <= scaled) {
        if (*extra == scaled) {
          p = next_prime_after(p);
          scaled = checked_mul(c.scale, p);
        }
        out.push_back(*extra++);
      } else {
        out.push_back(scaled);
        if (out.size() == count) break;
        p = next_prime_after(p);
        scaled = checked_mul(c.scale, p);
      }
    }
    return out;
  }
};

}  // namespace

bool class_contains(const SpectralClass& c, Natural x) { return std::visit(ContainsVisitor{x}, c); }

std::vector<Natural> class_enumerate(const SpectralClass& c, std::size_t count) {
  if (count == 0) throw InvalidInput("count must be positive");
  return std::visit(EnumerateVisitor{count}, c);
}

Cardinality class_cardinality(const SpectralClass& c) {
  if (const auto* f = std::get_if<FiniteClass>(&c)) {
    CONSEC_CHECK(f->members.size() == 1 || f->members.size() == 2,
                 "finite spectral class must have 1 or 2 members");
    return f->members.size() == 1 ? Cardinality::One : Cardinality::Two;
  }
  return Cardinality::Infinite;
}

}  // namespace consec
