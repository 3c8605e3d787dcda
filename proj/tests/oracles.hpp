#pragma once

// Brute-force references for the tests. Nothing here calls into the
// library's divisor, factorization, or spectrum code.

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline std::vector<u64> divisors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 1; d <= n; ++d) {
    if (d * d > n) break;
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<u64> odd_divisors(u64 n) {
  std::vector<u64> out;
  for (u64 d : divisors(n)) {
    if (d % 2 == 1) out.push_back(d);
  }
  return out;
}

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Every run of consecutive naturals summing to n, as (first, length).
inline std::vector<std::pair<u64, u64>> runs(u64 n) {
  std::vector<std::pair<u64, u64>> out;
  for (u64 first = 1; first <= n; ++first) {
    u64 sum = 0;
    for (u64 x = first; sum < n; ++x) {
      sum += x;
      if (sum == n) out.emplace_back(first, x - first + 1);
    }
  }
  std::sort(out.begin(), out.end(), [](auto a, auto b) { return a.second < b.second; });
  return out;
}

inline std::vector<u64> spectrum(u64 n) {
  std::vector<u64> out;
  for (auto [first, len] : runs(n)) out.push_back(len);
  std::sort(out.begin(), out.end());
  return out;
}

/// min m'/m over complementary pairs m <= m', as (num, den) unreduced.
inline std::pair<u64, u64> q_ratio(u64 k) {
  std::pair<u64, u64> best{k, 1};
  for (u64 m : divisors(k)) {
    const u64 mp = k / m;
    if (m > mp) continue;
    // mp/m < best.first/best.second
    if (static_cast<unsigned __int128>(mp) * best.second < static_cast<unsigned __int128>(best.first) * m) {
      best = {mp, m};
    }
  }
  return best;
}

/// Literal definition of the exceptional set over sorted odd/even parts.
inline std::vector<u64> exceptional_set(const std::vector<u64>& s) {
  std::vector<u64> odd, even;
  for (u64 x : s) (x % 2 ? odd : even).push_back(x);
  const u64 m0 = even.back();
  const u64 m1 = odd.back();
  std::set<u64> out;
  for (u64 b : odd) {
    for (u64 c : odd) {
      const u64 a = b * c;
      if (a <= m0) continue;
      std::vector<u64> below;
      for (u64 d : divisors(a * m1)) {
        if (d < a) below.push_back(d);
      }
      if (below == odd) out.insert(a);
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace oracle
