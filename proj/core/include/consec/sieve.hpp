#pragma once

#include <cstdint>
#include <vector>

#include "consec/arith.hpp"

namespace consec {

/// Smallest-prime-factor table over [0, limit], built by a linear sieve.
/// Read-only after construction, so one instance can back many scan workers.
class SpfSieve {
 public:
  static constexpr Natural kMaxLimit = Natural{1} << 31;

  explicit SpfSieve(Natural limit);

  Natural limit() const { return limit_; }
  Natural smallest_prime_factor(Natural n) const;
  Factorization factorize(Natural n) const;
  std::vector<Natural> odd_divisors(Natural n) const;

 private:
  Natural limit_;
  std::vector<std::uint32_t> spf_;
};

}  // namespace consec
