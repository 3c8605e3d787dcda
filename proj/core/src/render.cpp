#include "consec/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace consec {

using nlohmann::json;

namespace {

std::string num(Natural x) { return std::to_string(x); }

json number_array(std::span<const Natural> xs) {
  json arr = json::array();
  for (Natural x : xs) arr.push_back(num(x));
  return arr;
}

std::string join(std::span<const Natural> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += num(xs[i]);
  }
  return out;
}

struct DescribeVisitor {
  std::string operator()(const FiniteClass& c) const { return format_set(c.members); }
  std::string operator()(const PowerOfTwoFamily& c) const {
    const std::string base = c.odd_part == 1 ? "2^e" : "2^e·" + num(c.odd_part);
    return "{" + base + " : e ≥ " + std::to_string(c.min_exponent) + "}";
  }
  std::string operator()(const PrimeScaledFamily& c) const {
    const std::string scaled = c.scale == 1 ? "p" : num(c.scale) + "p";
    std::string family = "{" + scaled + " : p prime, p > " + num(c.prime_threshold) + "}";
    if (c.extras.empty()) return family;
    return format_set(c.extras) + " ∪ " + family;
  }
};

struct ClassJsonVisitor {
  json operator()(const FiniteClass& c) const { return {{"kind", "finite"}, {"members", number_array(c.members)}}; }
  json operator()(const PowerOfTwoFamily& c) const {
    return {{"kind", "pow2"}, {"odd_part", num(c.odd_part)}, {"min_exponent", std::to_string(c.min_exponent)}};
  }
  json operator()(const PrimeScaledFamily& c) const {
    return {{"kind", "prime_scaled"},
            {"scale", num(c.scale)},
            {"prime_threshold", num(c.prime_threshold)},
            {"extras", number_array(c.extras)}};
  }
};

std::string members_line(const SpectralClass& c, std::size_t limit) {
  const auto members = class_enumerate(c, limit);
  std::string line = "members: " + join(members);
  if (class_cardinality(c) == Cardinality::Infinite) line += ", ...";
  return line;
}

json class_block(const SpectralClass& c, std::size_t limit) {
  json j = std::visit(ClassJsonVisitor{}, c);
  j["closed_form"] = describe_class(c);
  j["first_members"] = number_array(class_enumerate(c, limit));
  return j;
}

}  // namespace

std::string describe_class(const SpectralClass& c) { return std::visit(DescribeVisitor{}, c); }

std::string to_string(Cardinality c) {
  switch (c) {
    case Cardinality::One:
      return "1";
    case Cardinality::Two:
      return "2";
    case Cardinality::Infinite:
      return "infinite";
  }
  return "?";
}

std::string format_set(std::span<const Natural> xs) { return "{" + join(xs) + "}"; }

std::string format_terms(const Decomposition& d, std::size_t cap) {
  if (d.length > cap) return "(" + num(d.first) + ".." + num(d.last()) + ")";
  std::string out = "(";
  for (Natural i = 0; i < d.length; ++i) {
    if (i) out += ", ";
    out += num(d.first + i);
  }
  return out + ")";
}

std::string format_decomposition_table(std::span<const Decomposition> ds, std::size_t cap) {
  struct Row {
    std::string factor, terms, length, parity;
  };
  std::vector<Row> rows{{"factor", "decomposition", "length", "parity"}};
  for (const auto& d : ds) {
    rows.push_back({num(d.factor()), format_terms(d, cap), num(d.length), d.is_odd() ? "odd" : "even"});
  }
  std::size_t w0 = 0, w1 = 0, w2 = 0;
  for (const auto& r : rows) {
    w0 = std::max(w0, r.factor.size());
    w1 = std::max(w1, r.terms.size());
    w2 = std::max(w2, r.length.size());
  }
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(w, s.size()), ' ');
    return s;
  };
  std::string out;
  for (const auto& r : rows) {
    out += pad(r.factor, w0) + "  " + pad(r.terms, w1) + "  " + pad(r.length, w2) + "  " + r.parity + "\n";
  }
  return out;
}

std::string spectrum_text(Natural n, std::size_t cap) {
  const auto ds = decompositions(n);
  const auto s = lspec(n);
  std::string out = "spectrum(" + num(n) + ") = " + format_set(s.elements()) + "\n";
  out += "shape: " + to_string(shape_of(s)) + "\n\n";
  out += format_decomposition_table(ds, cap);
  return out;
}

std::string class_text(Natural n, std::size_t limit) {
  const auto c = spectral_class(n);
  std::string out = "L(" + num(n) + ") = " + describe_class(c) + "\n";
  out += "spectrum: " + format_set(lspec(n).elements()) + "\n";
  out += "cardinality: " + to_string(class_cardinality(c)) + "\n";
  out += members_line(c, limit) + "\n";
  return out;
}

std::string inverse_text(const InverseResult& r, std::size_t limit) {
  std::string out = "set: " + format_set(r.input.elements()) + "\n";
  if (!r.spectral_class) return out + "not a spectrum\n";
  const auto& c = *r.spectral_class;
  out += "numbers with this spectrum: " + describe_class(c) + "\n";
  out += "cardinality: " + to_string(class_cardinality(c)) + "\n";
  out += members_line(c, limit) + "\n";
  return out;
}

std::string spectrum_json(Natural n, std::size_t cap) {
  const auto s = lspec(n);
  const auto c = spectral_class_of(s, n);
  json j;
  j["n"] = num(n);
  j["spectrum"] = number_array(s.elements());
  j["shape"] = to_string(shape_of(s));
  j["class"] = std::visit(ClassJsonVisitor{}, c);
  j["cardinality"] = to_string(class_cardinality(c));
  json rows = json::array();
  for (const auto& d : decompositions(n)) {
    rows.push_back({{"factor", num(d.factor())},
                    {"first", num(d.first)},
                    {"last", num(d.last())},
                    {"length", num(d.length)},
                    {"parity", d.is_odd() ? "odd" : "even"},
                    {"terms", format_terms(d, cap)}});
  }
  j["decompositions"] = rows;
  return j.dump(2);
}

std::string class_json(Natural n, std::size_t limit) {
  const auto s = lspec(n);
  const auto c = spectral_class_of(s, n);
  json j;
  j["n"] = num(n);
  j["spectrum"] = number_array(s.elements());
  j["shape"] = to_string(shape_of(s));
  j["class"] = class_block(c, limit);
  j["cardinality"] = to_string(class_cardinality(c));
  return j.dump(2);
}

std::string inverse_json(const InverseResult& r, std::size_t limit) {
  json j;
  j["n"] = r.representative && r.spectral_class ? json(num(*r.representative)) : json(nullptr);
  j["spectrum"] = number_array(r.input.elements());
  j["is_spectrum"] = r.is_spectrum();
  if (r.spectral_class) {
    j["shape"] = to_string(shape_of(r.input));
    j["class"] = class_block(*r.spectral_class, limit);
    j["cardinality"] = to_string(class_cardinality(*r.spectral_class));
  } else {
    j["shape"] = nullptr;
    j["class"] = nullptr;
    j["cardinality"] = nullptr;
  }
  return j.dump(2);
}

std::string reports_json(std::span<const ScanReport> reports) {
  json arr = json::array();
  bool passed = true;
  for (const auto& r : reports) {
    json w = json::object();
    for (const auto& [k, v] : r.witnesses) w[k] = num(v);
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.3f", r.elapsed.count());
    arr.push_back({{"property", r.property},
                   {"lo", num(r.lo)},
                   {"hi", num(r.hi)},
                   {"checked", std::to_string(r.checked)},
                   {"counterexamples", number_array(r.counterexamples)},
                   {"counterexample_total", std::to_string(r.counterexample_total)},
                   {"witnesses", w},
                   {"elapsed_seconds", elapsed},
                   {"passed", r.passed()}});
    passed = passed && r.passed();
  }
  json j;
  j["passed"] = passed;
  j["reports"] = arr;
  return j.dump(2);
}

}  // namespace consec
