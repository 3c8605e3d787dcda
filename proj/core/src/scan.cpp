#include "consec/scan.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "consec/arith.hpp"
#include "consec/classes.hpp"
#include "consec/inverse.hpp"
#include "consec/sieve.hpp"
#include "consec/spectrum.hpp"

namespace consec {

namespace {

/// Everything the suites and witnesses ask about one n, computed on demand.
class Facts {
 public:
  Facts(Natural n, std::vector<Natural> odd_divs)
      : n_(n), odd_divs_(std::move(odd_divs)), s_(lspec_from(n_, odd_divs_)), shape_(shape_of(s_)) {}

  Natural n() const { return n_; }
  const std::vector<Natural>& odd_divisors() const { return odd_divs_; }
  const Spectrum& spectrum() const { return s_; }
  SpectrumShape shape() const { return shape_; }
  bool balanced() const { return shape_ == SpectrumShape::Balanced; }

  const std::vector<Natural>& exceptional() {
    if (!e_) e_ = exceptional_set(s_);
    return *e_;
  }
  const ExcessiveProfile& profile() {
    if (!profile_) profile_ = excessive_profile(s_);
    return *profile_;
  }
  Natural m1() const { return *s_.max_odd(); }

 private:
  Natural n_;
  std::vector<Natural> odd_divs_;
  Spectrum s_;
  SpectrumShape shape_;
  std::optional<std::vector<Natural>> e_;
  std::optional<ExcessiveProfile> profile_;
};

// nullopt: the property does not apply to this n
using Check = std::function<std::optional<bool>(Facts&)>;

struct Suite {
  std::string name;
  Check check;
};

bool divides(Natural d, Natural x) { return d != 0 && x % d == 0; }

// a = e_a * n_a with e_a made of excessive primes
std::pair<Natural, Natural> split_excessive(const ExcessiveProfile& prof, Natural a) {
  Natural e_a = 1;
  for (Natural p : prof.excessive_primes()) {
    while (a % p == 0) {
      a /= p;
      e_a *= p;
    }
  }
  return {e_a, a};
}

std::optional<Natural> largest_non_excessive_prime(const ExcessiveProfile& prof) {
  std::optional<Natural> q;
  for (const auto& e : prof.primes) {
    if (e.epsilon == 0) q = e.prime;
  }
  return q;
}

// x == q^k for some k >= 1; returns k
std::optional<unsigned> power_of(Natural x, Natural q) {
  if (x < q) return std::nullopt;
  unsigned k = 0;
  while (x % q == 0) {
    x /= q;
    ++k;
  }
  if (x != 1) return std::nullopt;
  return k;
}

std::optional<PrimePower> as_prime_power(Natural x) {
  if (x < 2) return std::nullopt;
  const auto f = factorize(x);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

bool odd_part_is_divisors_of_max(Facts& f) {
  return f.spectrum().odd() == divisors(f.m1());
}

std::optional<bool> check_theorem_2(Facts& f) {
  const auto ds = decompositions_from(f.n(), f.odd_divisors());
  if (ds.size() != f.odd_divisors().size()) return false;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const auto& d = ds[i];
    if (d.first < 1 || d.target != f.n()) return false;
    const Wide sum = static_cast<Wide>(d.length) * d.first + static_cast<Wide>(d.length) * (d.length - 1) / 2;
    if (sum != f.n()) return false;
    if (i > 0 && ds[i - 1].length >= d.length) return false;
  }
  return true;
}

std::optional<bool> check_v2_recovery(Facts& f) {
  const auto& s = f.spectrum();
  if (auto v = v2_from_spectrum(s); v && *v != v2(f.n())) return false;
  if (s.odd().size() > s.even().size() && largest_odd_factor_from_spectrum(s) != odd_part(f.n())) {
    return false;
  }
  return true;
}

std::optional<bool> check_trichotomy(Facts& f) {
  const auto c = class_cardinality(spectral_class_of(f.spectrum(), f.n()));
  switch (f.shape()) {
    case SpectrumShape::Unmixed:
      return c == Cardinality::Infinite;
    case SpectrumShape::Lopsided:
      return c == Cardinality::One;
    case SpectrumShape::Balanced:
      break;
  }
  const std::size_t e = f.exceptional().size();
  if (!f.profile().is_excessive()) return c == Cardinality::Infinite;
  return (e == 1 && c == Cardinality::One) || (e == 2 && c == Cardinality::Two);
}

std::optional<bool> check_theorem_17(Facts& f) {
  if (!f.balanced()) return std::nullopt;
  const auto& e = f.exceptional();
  bool rhs = e.empty();
  if (e.size() == 1) {
    if (auto pp = as_prime_power(e.front())) {
      rhs = pp->exponent == valuation(pp->prime, f.m1()) + 1;
    }
  }
  return !f.profile().is_excessive() == rhs;
}

std::optional<bool> check_lemma_11(Facts& f) {
  if (!f.balanced()) return std::nullopt;
  const auto& odd = f.spectrum().odd();
  for (Natural a : f.exceptional()) {
    if (is_prime(a)) return false;
    for (Natural d : divisors(a)) {
      if (d != a && !std::binary_search(odd.begin(), odd.end(), d)) return false;
    }
    if (q_ratio(checked_mul(f.m1(), a)) != Rational::reduced(a, f.m1())) return false;
  }
  return true;
}

std::optional<bool> check_lemma_14(Facts& f) {
  if (!f.balanced()) return std::nullopt;
  for (Natural a : f.exceptional()) {
    if (!divides(f.profile().excessive_number, a)) return false;
  }
  return true;
}

std::optional<bool> check_prop_16(Facts& f) {
  if (!f.balanced()) return std::nullopt;
  const auto& prof = f.profile();
  const auto q = largest_non_excessive_prime(prof);
  for (Natural a : f.exceptional()) {
    const auto [e_a, n_a] = split_excessive(prof, a);
    if (!divides(prof.excessive_number, e_a)) return false;
    if (n_a > 1) {
      if (!q || !power_of(n_a, *q)) return false;
      if (e_a != prof.excessive_number) return false;
    }
  }
  return true;
}

std::optional<bool> check_prop_20(Facts& f) {
  if (!f.balanced()) return std::nullopt;
  const auto& prof = f.profile();
  if (prof.excessive_number <= f.m1()) return true;
  return f.exceptional() == std::vector<Natural>{prof.excessive_number};
}

std::optional<bool> check_prop_21(Facts& f) {
  if (!f.balanced() || f.exceptional().size() != 1) return std::nullopt;
  const auto& prof = f.profile();
  const Natural a = f.exceptional().front();
  const auto [e_a, n_a] = split_excessive(prof, a);
  if (n_a == 1) return true;
  const auto q = largest_non_excessive_prime(prof);
  return q && e_a == prof.excessive_number && power_of(n_a, *q).has_value();
}

std::optional<bool> check_prop_22(Facts& f) {
  if (!f.balanced() || f.exceptional().size() != 2) return std::nullopt;
  const auto& prof = f.profile();
  const auto excessive = prof.excessive_primes();
  if (excessive.size() != 1 || prof.primes.size() < 2) return false;
  const auto p = *prof.find(excessive.front());
  const Natural largest = prof.primes[prof.primes.size() - 1].prime;
  const Natural second = prof.primes[prof.primes.size() - 2].prime;
  if (p.prime != largest && p.prime != second) return false;
  const Natural q = p.prime == largest ? second : largest;

  const auto& e = f.exceptional();
  if (e[0] != checked_pow(p.prime, p.gamma + 1)) return false;
  const Natural pe = checked_pow(p.prime, p.epsilon);
  if (e[1] % pe != 0) return false;
  const auto beta = power_of(e[1] / pe, q);
  if (!beta || *beta < 1) return false;
  if (p.prime == largest && p.epsilon != p.gamma) return false;
  if (q == largest && *beta != 1) return false;
  return true;
}

std::optional<bool> check_round_trip(Facts& f) {
  const auto inv = numbers_with_spectrum(f.spectrum().elements());
  if (!inv.spectral_class) return false;
  return *inv.spectral_class == spectral_class_of(f.spectrum(), f.n()) &&
         class_contains(*inv.spectral_class, f.n());
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"oracle-equivalence", [](Facts& f) -> std::optional<bool> { return f.spectrum() == lspec_oracle(f.n()); }},
      {"theorem-1",
       [](Facts& f) -> std::optional<bool> {
         return (f.spectrum().elements() == std::vector<Natural>{1}) == is_power_of_two(f.n());
       }},
      {"theorem-2", check_theorem_2},
      {"theorem-4",
       [](Facts& f) -> std::optional<bool> { return f.spectrum().even().size() <= f.spectrum().odd().size(); }},
      {"eq4-structure", [](Facts& f) -> std::optional<bool> { return f.spectrum().diagnose().all(); }},
      {"shape", [](Facts& f) -> std::optional<bool> { return f.shape() == shape_of_number(f.n()); }},
      {"v2-recovery", check_v2_recovery},
      {"E-size",
       [](Facts& f) -> std::optional<bool> {
         if (!f.balanced()) return std::nullopt;
         return f.exceptional().size() <= 2;
       }},
      {"trichotomy", check_trichotomy},
      {"excessive-crosscheck",
       [](Facts& f) -> std::optional<bool> {
         if (!f.balanced()) return std::nullopt;
         return f.profile().is_excessive() == !odd_part_is_divisors_of_max(f);
       }},
      {"theorem-17", check_theorem_17},
      {"lemma-11", check_lemma_11},
      {"lemma-14", check_lemma_14},
      {"prop-16", check_prop_16},
      {"prop-20", check_prop_20},
      {"prop-21", check_prop_21},
      {"prop-22", check_prop_22},
      {"round-trip", check_round_trip},
  };
  return all;
}

using Predicate = std::function<bool(Facts&)>;

struct Witness {
  std::string name;
  Predicate predicate;
  bool extended = false;
};

bool has_odd_prime(Facts& f) { return !f.profile().primes.empty(); }

std::optional<unsigned> beta_of_pair(Facts& f) {
  if (f.exceptional().size() != 2) return std::nullopt;
  const auto& prof = f.profile();
  const auto excessive = prof.excessive_primes();
  if (excessive.size() != 1) return std::nullopt;
  const Natural p = excessive.front();
  Natural rest = f.exceptional()[1];
  while (rest % p == 0) rest /= p;
  const auto pp = as_prime_power(rest);
  if (!pp) return std::nullopt;
  return pp->exponent;
}

const std::vector<Witness>& witnesses() {
  static const std::vector<Witness> all = {
      {"nonempty-E", [](Facts& f) { return f.balanced() && !f.exceptional().empty(); }},
      {"excessive", [](Facts& f) { return f.balanced() && f.profile().is_excessive(); }},
      {"E-size-2", [](Facts& f) { return f.balanced() && f.exceptional().size() == 2; }},
      {"all-primes-divide-m",
       [](Facts& f) {
         if (!f.balanced() || !f.profile().is_excessive()) return false;
         for (const auto& e : f.profile().primes) {
           if (f.m1() % e.prime != 0) return false;
         }
         return true;
       }},
      {"all-odd-primes-excessive",
       [](Facts& f) {
         if (!f.balanced() || !has_odd_prime(f)) return false;
         for (const auto& e : f.profile().primes) {
           if (e.epsilon == 0) return false;
         }
         return true;
       }},
      {"beta-gt-1",
       [](Facts& f) {
         if (!f.balanced()) return false;
         const auto beta = beta_of_pair(f);
         return beta && *beta > 1;
       }},
      {"gamma-beta-gt-1",
       [](Facts& f) {
         if (!f.balanced()) return false;
         const auto beta = beta_of_pair(f);
         if (!beta || *beta <= 1) return false;
         const auto p = f.profile().find(f.profile().excessive_primes().front());
         return p && p->gamma > 1;
       },
       true},
  };
  return all;
}

unsigned resolve_jobs(unsigned jobs) {
  if (jobs > 0) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs body(chunk_index, lo, hi) over disjoint ascending chunks of [lo, hi].
/// Workers claim chunks in order; `stop_before(chunk_lo)` lets a caller skip
/// chunks that cannot improve a result.
void for_each_chunk(Natural lo, Natural hi, const ScanOptions& options,
                    const std::function<void(std::size_t, Natural, Natural)>& body,
                    const std::function<bool(Natural)>& stop_before = {}) {
  const Natural chunk = std::max<Natural>(1, options.chunk);
  const std::size_t count = static_cast<std::size_t>((hi - lo) / chunk + 1);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < count; i = next++) {
        const Natural c_lo = lo + i * chunk;
        if (stop_before && stop_before(c_lo)) return;
        const Natural c_hi = std::min(hi, c_lo + (chunk - 1));
        body(i, c_lo, c_hi);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  const unsigned jobs = std::min<std::size_t>(resolve_jobs(options.jobs), count);
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  std::vector<std::string> out;
  for (const auto& s : suites()) out.push_back(s.name);
  return out;
}

std::vector<std::string> witness_names(bool include_extended) {
  std::vector<std::string> out;
  for (const auto& w : witnesses()) {
    if (include_extended || !w.extended) out.push_back(w.name);
  }
  return out;
}

bool is_extended_witness(std::string_view name) {
  for (const auto& w : witnesses()) {
    if (w.name == name) return w.extended;
  }
  return false;
}

std::vector<ScanReport> verify_range(Natural lo, Natural hi, std::span<const std::string> names,
                                     const ScanOptions& options) {
  require_positive(lo, "lo");
  if (hi < lo) throw InvalidInput("empty range");
  std::vector<const Suite*> selected;
  if (names.empty()) {
    for (const auto& s : suites()) selected.push_back(&s);
  } else {
    for (const auto& name : names) {
      auto it = std::find_if(suites().begin(), suites().end(), [&](const Suite& s) { return s.name == name; });
      if (it == suites().end()) throw InvalidInput("unknown verify suite '" + name + "'");
      selected.push_back(&*it);
    }
  }
  const auto start = std::chrono::steady_clock::now();
  const SpfSieve sieve(hi);

  struct ChunkResult {
    std::vector<std::vector<Natural>> bad;
    std::vector<std::size_t> checked;
  };
  const Natural chunk = std::max<Natural>(1, options.chunk);
  std::vector<ChunkResult> results(static_cast<std::size_t>((hi - lo) / chunk + 1));

  for_each_chunk(lo, hi, options, [&](std::size_t index, Natural c_lo, Natural c_hi) {
    ChunkResult r{std::vector<std::vector<Natural>>(selected.size()), std::vector<std::size_t>(selected.size())};
    for (Natural n = c_lo;; ++n) {
      Facts facts(n, sieve.odd_divisors(n));
      for (std::size_t i = 0; i < selected.size(); ++i) {
        std::optional<bool> ok;
        try {
          ok = selected[i]->check(facts);
        } catch (const std::exception&) {
          ok = false;
        }
        if (!ok) continue;
        ++r.checked[i];
        if (!*ok) r.bad[i].push_back(n);
      }
      if (n == c_hi) break;
    }
    results[index] = std::move(r);
  });

  std::vector<ScanReport> reports;
  const auto elapsed = std::chrono::steady_clock::now() - start;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    ScanReport rep;
    rep.lo = lo;
    rep.hi = hi;
    rep.property = selected[i]->name;
    for (const auto& r : results) {
      rep.checked += r.checked[i];
      rep.counterexample_total += r.bad[i].size();
      for (Natural n : r.bad[i]) {
        if (rep.counterexamples.size() < ScanReport::kCounterexampleCap) rep.counterexamples.push_back(n);
      }
    }
    rep.elapsed = elapsed;
    reports.push_back(std::move(rep));
  }
  return reports;
}

namespace {

const Witness& lookup_witness(std::string_view property) {
  for (const auto& w : witnesses()) {
    if (w.name == property) return w;
  }
  throw InvalidInput("unknown witness property '" + std::string(property) + "'");
}

}  // namespace

bool satisfies_witness(std::string_view property, Natural n) {
  const auto& w = lookup_witness(property);
  Facts facts(require_positive(n), odd_divisors(n));
  return w.predicate(facts);
}

ScanReport find_witness(std::string_view property, Natural max, const ScanOptions& options) {
  const auto& w = lookup_witness(property);
  require_positive(max, "max");
  const auto start = std::chrono::steady_clock::now();
  const SpfSieve sieve(max);
  std::atomic<Natural> best{kNaturalMax};

  for_each_chunk(
      1, max, options,
      [&](std::size_t, Natural c_lo, Natural c_hi) {
        for (Natural n = c_lo; n <= c_hi && n < best.load(); ++n) {
          Facts facts(n, sieve.odd_divisors(n));
          if (w.predicate(facts)) {
            Natural cur = best.load();
            while (n < cur && !best.compare_exchange_weak(cur, n)) {
            }
            break;
          }
        }
      },
      [&](Natural c_lo) { return c_lo >= best.load(); });

  ScanReport rep;
  rep.lo = 1;
  rep.hi = max;
  rep.property = w.name;
  // every n up to the witness (or the bound) was examined by some worker
  rep.checked = static_cast<std::size_t>(std::min(best.load(), max));
  if (best.load() != kNaturalMax) rep.witnesses[w.name] = best.load();
  rep.elapsed = std::chrono::steady_clock::now() - start;
  return rep;
}

}  // namespace consec
