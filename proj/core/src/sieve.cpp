#include "consec/sieve.hpp"

#include <algorithm>
#include <string>

namespace consec {

SpfSieve::SpfSieve(Natural limit) : limit_(limit) {
  if (limit > kMaxLimit) {
    throw InvalidInput("sieve limit " + std::to_string(limit) + " exceeds " + std::to_string(kMaxLimit));
  }
  spf_.assign(limit + 1, 0);
  std::vector<std::uint32_t> primes;
  for (Natural i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      if (p > spf_[i] || i * p > limit) break;
      spf_[i * p] = p;
    }
  }
}

Natural SpfSieve::smallest_prime_factor(Natural n) const {
  if (n < 2 || n > limit_) throw InvalidInput("value outside the sieve range");
  return spf_[n];
}

Factorization SpfSieve::factorize(Natural n) const {
  require_positive(n);
  if (n > limit_) return consec::factorize(n);
  Factorization out;
  while (n > 1) {
    const Natural p = spf_[n];
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  return out;
}

std::vector<Natural> SpfSieve::odd_divisors(Natural n) const {
  std::vector<Natural> out{1};
  for (const auto& [p, e] : factorize(n)) {
    if (p == 2) continue;
    const std::size_t existing = out.size();
    for (std::size_t i = 0; i < existing; ++i) {
      Natural d = out[i];
      for (unsigned k = 0; k < e; ++k) {
        d *= p;
        out.push_back(d);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace consec
