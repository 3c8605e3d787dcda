#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "consec/classes.hpp"
#include "consec/inverse.hpp"
#include "consec/scan.hpp"
#include "consec/spectrum.hpp"

namespace consec {

/// Closed form such as "{27} ∪ {3p : p prime, p > 6}".
std::string describe_class(const SpectralClass& c);

std::string to_string(Cardinality c);

/// "{1, 2, 3}"
std::string format_set(std::span<const Natural> xs);

/// "(22, 23)" for short runs, "(first..last)" past `cap` terms.
std::string format_terms(const Decomposition& d, std::size_t cap);

/// Aligned factor / decomposition / length / parity table.
std::string format_decomposition_table(std::span<const Decomposition> ds, std::size_t cap);

std::string spectrum_text(Natural n, std::size_t cap);
std::string class_text(Natural n, std::size_t limit);
std::string inverse_text(const InverseResult& r, std::size_t limit);

// JSON renderings. Every number is emitted as a decimal string.
std::string spectrum_json(Natural n, std::size_t cap);
std::string class_json(Natural n, std::size_t limit);
std::string inverse_json(const InverseResult& r, std::size_t limit);
std::string reports_json(std::span<const ScanReport> reports);

}  // namespace consec
