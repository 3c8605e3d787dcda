#include "consec/arith.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

namespace consec {

std::string to_string(Wide w) {
  if (w == 0) return "0";
  std::string s;
  while (w > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(w % 10)));
    w /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

Rational Rational::reduced(Natural num, Natural den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  Natural g = std::gcd(num, den);
  if (g == 0) return {0, 1};
  return {num / g, den / g};
}

unsigned v2(Natural n) {
  require_positive(n);
  return static_cast<unsigned>(std::countr_zero(n));
}

Natural odd_part(Natural n) { return n >> v2(n); }

bool is_power_of_two(Natural n) { return std::has_single_bit(n); }

namespace {

Natural mul_mod(Natural a, Natural b, Natural m) {
  return static_cast<Natural>(static_cast<Wide>(a) * b % m);
}

Natural pow_mod(Natural base, Natural exp, Natural m) {
  Natural result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// These twelve bases are a proven deterministic set below 3.3 * 10^24.
constexpr std::array<Natural, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool strong_probable_prime(Natural n, Natural a, Natural d, unsigned r) {
  Natural x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

Natural pollard_brent(Natural n) {
  if (n % 2 == 0) return 2;
  for (Natural c = 1;; ++c) {
    auto f = [&](Natural x) { return static_cast<Natural>((static_cast<Wide>(x) * x + c) % n); };
    Natural y = 2, x = 2, g = 1, q = 1, ys = 2;
    Natural r = 1;
    constexpr Natural kBlock = 128;
    do {
      x = y;
      for (Natural i = 0; i < r; ++i) y = f(y);
      Natural k = 0;
      do {
        ys = y;
        for (Natural i = 0; i < std::min(kBlock, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += kBlock;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_large(Natural n, std::vector<Natural>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  Natural d = pollard_brent(n);
  factor_large(d, primes);
  factor_large(n / d, primes);
}

constexpr Natural kTrialBound = 1 << 12;

}  // namespace

bool is_prime(Natural n) {
  if (n < 2) return false;
  for (Natural p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  Natural d = n - 1;
  unsigned r = static_cast<unsigned>(std::countr_zero(d));
  d >>= r;
  for (Natural a : kWitnesses) {
    if (!strong_probable_prime(n, a, d, r)) return false;
  }
  return true;
}

Natural next_prime_after(Natural x) {
  require_positive(x, "x");
  for (Natural c = x; c < kNaturalMax;) {
    ++c;
    if (is_prime(c)) return c;
  }
  throw OverflowError("no prime after " + std::to_string(x) + " fits in 64 bits");
}

unsigned valuation(Natural p, Natural m) {
  require_positive(m, "m");
  if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
  unsigned e = 0;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  return e;
}

Factorization factorize(Natural n) {
  require_positive(n);
  Factorization out;
  auto take = [&](Natural p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  take(2);
  for (Natural d = 3; d < kTrialBound && d * d <= n; d += 2) take(d);
  if (n == 1) return out;
  if (n < kTrialBound * kTrialBound) {
    out.push_back({n, 1});
    return out;
  }
  std::vector<Natural> big;
  factor_large(n, big);
  std::sort(big.begin(), big.end());
  for (std::size_t i = 0; i < big.size();) {
    std::size_t j = i;
    while (j < big.size() && big[j] == big[i]) ++j;
    out.push_back({big[i], static_cast<unsigned>(j - i)});
    i = j;
  }
  return out;
}

Factorization merge(const Factorization& a, const Factorization& b) {
  Factorization out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].prime < b[j].prime)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].prime < a[i].prime) {
      out.push_back(b[j++]);
    } else {
      out.push_back({a[i].prime, a[i].exponent + b[j].exponent});
      ++i;
      ++j;
    }
  }
  return out;
}

std::vector<Wide> divisors_below(const Factorization& f, Wide bound) {
  std::vector<Wide> out;
  if (bound <= 1) return out;
  out.push_back(1);
  for (const auto& [p, e] : f) {
    const std::size_t existing = out.size();
    for (std::size_t i = 0; i < existing; ++i) {
      Wide d = out[i];
      for (unsigned k = 0; k < e; ++k) {
        // d * p < bound without forming a product that could wrap
        if (d >= (bound + p - 1) / p) break;
        d *= p;
        out.push_back(d);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<Natural> all_divisors(const Factorization& f) {
  std::vector<Natural> out{1};
  for (const auto& [p, e] : f) {
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

}  // namespace

std::vector<Natural> divisors(Natural n) { return all_divisors(factorize(n)); }

std::vector<Natural> odd_divisors(Natural n) { return all_divisors(factorize(odd_part(n))); }

std::vector<Natural> factors_below(Natural l, Natural k) {
  std::vector<Natural> out;
  for (Wide d : divisors_below(factorize(l), k)) out.push_back(static_cast<Natural>(d));
  return out;
}

Rational q_ratio(Natural k) {
  require_positive(k, "k");
  const auto divs = divisors(k);
  // largest m with m * m <= k
  Natural m = 1;
  for (Natural d : divs) {
    if (static_cast<Wide>(d) * d <= k) m = d;
    else break;
  }
  return Rational::reduced(k / m, m);
}

}  // namespace consec
