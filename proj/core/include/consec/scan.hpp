#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "consec/natural.hpp"

namespace consec {

struct ScanReport {
  Natural lo = 1;
  Natural hi = 1;
  std::string property;
  /// Ascending; capped at kCounterexampleCap entries. See counterexample_total.
  std::vector<Natural> counterexamples;
  std::size_t counterexample_total = 0;
  /// Numbers in range the property applied to (e.g. balanced ones only).
  std::size_t checked = 0;
  std::map<std::string, Natural> witnesses;
  std::chrono::duration<double> elapsed{};

  static constexpr std::size_t kCounterexampleCap = 1000;

  bool passed() const { return counterexample_total == 0; }
};

struct ScanOptions {
  unsigned jobs = 0;  // 0: hardware concurrency
  std::size_t chunk = 1 << 14;
};

/// Invariant suites accepted by verify_range, in their canonical order.
std::vector<std::string> verify_suite_names();

/// Witness predicates accepted by find_witness. Extended ones scan far
/// enough that they are only run on request.
std::vector<std::string> witness_names(bool include_extended = false);
bool is_extended_witness(std::string_view name);

/// Checks each named suite on every n in [lo, hi]; an empty list means all.
/// InvalidInput on an unknown suite name or an empty range.
std::vector<ScanReport> verify_range(Natural lo, Natural hi, std::span<const std::string> suites,
                                     const ScanOptions& options = {});

/// Smallest n in [1, max] satisfying `property`; the report's witness map
/// holds it under the property name when found.
ScanReport find_witness(std::string_view property, Natural max, const ScanOptions& options = {});

/// Predicate behind find_witness, on one number.
bool satisfies_witness(std::string_view property, Natural n);

}  // namespace consec
