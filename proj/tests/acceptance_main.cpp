// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "consec/arith.hpp"
#include "consec/classes.hpp"
#include "consec/cli.hpp"
#include "consec/inverse.hpp"
#include "consec/scan.hpp"
#include "consec/sieve.hpp"
#include "consec/spectrum.hpp"
#include "json.hpp"

namespace {

using consec::Natural;
using V = std::vector<Natural>;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) detail = what;
    pass = pass && cond;
  }
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;  // 0: none
  std::function<Outcome()> run;
};

std::string str(const V& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

Outcome table1() {
  Outcome o;
  std::ostringstream out, err;
  const std::vector<std::string> args{"spectrum", "45", "--json"};
  o.require(consec::run_cli(args, out, err) == consec::kExitOk, "exit code");
  const auto j = nlohmann::json::parse(out.str());
  o.require(j["spectrum"] == nlohmann::json({"1", "2", "3", "5", "6", "9"}), "spectrum of 45");
  struct Row {
    std::string factor, terms, length, parity;
  };
  const std::vector<Row> table = {{"1", "(45)", "1", "odd"},
                                  {"45", "(22, 23)", "2", "even"},
                                  {"3", "(14, 15, 16)", "3", "odd"},
                                  {"5", "(7, 8, 9, 10, 11)", "5", "odd"},
                                  {"15", "(5, 6, 7, 8, 9, 10)", "6", "even"},
                                  {"9", "(1, 2, 3, 4, 5, 6, 7, 8, 9)", "9", "odd"}};
  const auto& rows = j["decompositions"];
  o.require(rows.size() == table.size(), "row count");
  for (std::size_t i = 0; i < table.size() && i < rows.size(); ++i) {
    o.require(rows[i]["factor"] == table[i].factor && rows[i]["terms"] == table[i].terms &&
                  rows[i]["length"] == table[i].length && rows[i]["parity"] == table[i].parity,
              "row " + std::to_string(i + 1));
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t mismatches = 0;
  for (Natural n = 1; n <= 100000; ++n) mismatches += consec::lspec(n) != consec::lspec_oracle(n);
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  return o;
}

Outcome class_examples() {
  using namespace consec;
  Outcome o;
  o.require(class_enumerate(spectral_class(1), 10) == V{1, 2, 4, 8, 16, 32, 64, 128, 256, 512}, "L(1)");
  o.require(class_cardinality(spectral_class(1)) == Cardinality::Infinite, "L(1) infinite");
  o.require(class_enumerate(spectral_class(3), 5) == V{3, 5, 7, 11, 13}, "L(3)");
  o.require(spectral_class(9) == SpectralClass(FiniteClass{{9}}), "L(9)");
  const auto l21 = spectral_class(21);
  o.require(l21 == SpectralClass(PrimeScaledFamily{3, 6, {27}}), "L(21) form");
  o.require(class_enumerate(l21, 4) == V{21, 27, 33, 39}, "L(21) members");
  o.require(!class_contains(l21, 63), "63 not in L(21)");
  o.require(spectral_class(75) == SpectralClass(FiniteClass{{75}}), "L(75)");
  o.require(spectral_class(175) == SpectralClass(FiniteClass{{175, 245}}), "L(175)");
  return o;
}

Outcome exceptional_sets() {
  using consec::exceptional_set;
  using consec::lspec;
  Outcome o;
  const std::vector<std::pair<Natural, V>> cases = {
      {21, {9}}, {175, {25, 35}}, {3, {}}, {36125, {289, 425}}, {21434375, {6859, 9025}}};
  for (const auto& [n, expect] : cases) {
    const auto got = exceptional_set(lspec(n));
    o.require(got == expect, "E(lspec(" + std::to_string(n) + ")) = " + str(got));
  }
  return o;
}

Outcome witnesses() {
  Outcome o;
  const std::vector<std::tuple<std::string, Natural, Natural>> cases = {
      {"nonempty-E", 21, 1000},       {"excessive", 75, 1000},
      {"E-size-2", 175, 1000},        {"all-primes-divide-m", 2673, 10000},
      {"all-odd-primes-excessive", 9261, 20000}, {"beta-gt-1", 36125, 50000}};
  for (const auto& [name, expect, max] : cases) {
    const auto rep = consec::find_witness(name, max);
    const auto it = rep.witnesses.find(name);
    o.require(it != rep.witnesses.end() && it->second == expect,
              name + " = " + (it == rep.witnesses.end() ? std::string("none") : std::to_string(it->second)));
  }
  return o;
}

Outcome structural_scans() {
  Outcome o;
  const std::vector<std::string> small{"theorem-4", "eq4-structure"};
  const std::vector<std::string> large{"E-size", "trichotomy", "prop-20", "prop-22", "theorem-17"};
  auto check = [&](const std::vector<consec::ScanReport>& reps) {
    for (const auto& r : reps) {
      o.require(r.passed(), r.property + ": " + std::to_string(r.counterexample_total) + " counterexamples");
      o.require(r.checked > 0, r.property + " never applied");
    }
  };
  check(consec::verify_range(1, 100000, small));
  check(consec::verify_range(1, 1000000, large));
  return o;
}

Outcome round_trip() {
  Outcome o;
  std::size_t mismatches = 0;
  for (Natural n = 1; n <= 20000; ++n) {
    const auto r = consec::numbers_with_spectrum(consec::lspec(n).elements());
    mismatches += !(r.spectral_class && *r.spectral_class == consec::spectral_class(n));
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  return o;
}

Outcome soundness_completeness() {
  using namespace consec;
  Outcome o;
  constexpr Natural kN = 10000;
  constexpr Natural kMemberCap = 10000000;
  std::map<V, V> by_spectrum;
  for (Natural x = 1; x <= kN; ++x) by_spectrum[lspec(x).elements()].push_back(x);
  std::mt19937_64 rng(8);
  std::size_t members = 0, sampled = 0;
  for (Natural n = 1; n <= kN && o.pass; ++n) {
    const auto s = lspec(n);
    const auto c = spectral_class(n);
    for (Natural x : class_enumerate(c, 25)) {
      if (x > kMemberCap) break;
      ++members;
      o.require(lspec(x) == s, "member " + std::to_string(x) + " of L(" + std::to_string(n) + ")");
      if (rng() % 100 == 0) {
        ++sampled;
        o.require(lspec_oracle(x) == s, "oracle on member " + std::to_string(x));
      }
    }
    for (Natural x : by_spectrum[s.elements()]) {
      o.require(class_contains(c, x), std::to_string(x) + " missing from L(" + std::to_string(n) + ")");
    }
  }
  o.require(sampled > 0, "oracle sample empty");
  if (o.pass) o.detail = std::to_string(members) + " members, " + std::to_string(sampled) + " oracle-sampled";
  return o;
}

Outcome negative_inverse() {
  Outcome o;
  for (const std::vector<std::string>& args : {std::vector<std::string>{"inverse", "1", "2", "4"},
                                                std::vector<std::string>{"inverse", "2", "3"}}) {
    std::ostringstream out, err;
    const int code = consec::run_cli(args, out, err);
    o.require(code == consec::kExitNotASpectrum, "exit code " + std::to_string(code));
    o.require(out.str().find("not a spectrum") != std::string::npos, "message");
  }
  const consec::SpfSieve sieve(1000000);
  for (Natural n = 1; n <= 1000000; ++n) {
    const auto s = consec::lspec_from(n, sieve.odd_divisors(n)).elements();
    o.require(s != V{1, 2, 4} && s != V{2, 3}, "attained by " + std::to_string(n));
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Table 1 reproduction (spectrum 45)", 1.0, table1},
      {2, "lspec = lspec_oracle for n <= 1e5", 30.0, oracle_equivalence},
      {3, "class examples L(1), L(3), L(9), L(21), L(75), L(175)", 0, class_examples},
      {4, "exceptional sets of 21, 175, 3, 36125, 21434375", 0, exceptional_sets},
      {5, "witness scans 21, 75, 175, 2673, 9261, 36125", 120.0, witnesses},
      {6, "structural theorems as scans (1e5 / 1e6)", 300.0, structural_scans},
      {7, "round trip for n <= 2e4", 0, round_trip},
      {8, "class soundness and completeness for n <= 1e4", 0, soundness_completeness},
      {9, "negative inverse {1,2,4} and {2,3}", 0, negative_inverse},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
      o.pass = false;
      o.detail = "over the " + std::to_string(c.time_limit_s) + " s budget";
    }
    failed += !o.pass;
    std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                o.detail.empty() ? "" : " - ", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
