#include "consec/cli.hpp"

#include <ostream>
#include <vector>

#include "CLI11.hpp"
#include "consec/inverse.hpp"
#include "consec/render.hpp"
#include "consec/scan.hpp"

namespace consec {

namespace {

struct Options {
  bool json = false;
  bool extended = false;
  Natural n = 0;
  std::size_t cap = 20;
  std::size_t limit = 10;
  std::vector<Natural> set;
  Natural lo = 1;
  Natural hi = 1;
  std::vector<std::string> properties;
  std::string property;
  Natural max = 0;
  unsigned jobs = 0;
};

int run_parsed(const CLI::App& app, const Options& o, std::ostream& out, std::ostream& err) {
  if (app.got_subcommand("spectrum")) {
    require_positive(o.n);
    out << (o.json ? spectrum_json(o.n, o.cap) + "\n" : spectrum_text(o.n, o.cap));
    return kExitOk;
  }
  if (app.got_subcommand("class")) {
    require_positive(o.n);
    out << (o.json ? class_json(o.n, o.limit) + "\n" : class_text(o.n, o.limit));
    return kExitOk;
  }
  if (app.got_subcommand("inverse")) {
    const auto r = numbers_with_spectrum(o.set);
    out << (o.json ? inverse_json(r, o.limit) + "\n" : inverse_text(r, o.limit));
    return r.is_spectrum() ? kExitOk : kExitNotASpectrum;
  }
  if (app.got_subcommand("verify")) {
    const auto reports = verify_range(o.lo, o.hi, o.properties, {.jobs = o.jobs});
    out << reports_json(reports) << "\n";
    for (const auto& r : reports) {
      if (!r.passed()) return kExitCounterexamples;
    }
    return kExitOk;
  }
  if (app.got_subcommand("witness")) {
    if (is_extended_witness(o.property) && !o.extended) {
      err << "error: witness '" << o.property << "' scans a large range; pass --extended\n";
      return kExitInvalidInput;
    }
    const auto rep = find_witness(o.property, o.max, {.jobs = o.jobs});
    const auto found = rep.witnesses.find(rep.property);
    if (o.json) {
      out << reports_json(std::span(&rep, 1)) << "\n";
    } else if (found != rep.witnesses.end()) {
      out << rep.property << ": " << found->second << "\n";
    } else {
      out << rep.property << ": none up to " << o.max << "\n";
    }
    return found != rep.witnesses.end() ? kExitOk : kExitNoWitness;
  }
  err << app.help();
  return kExitInvalidInput;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sums of consecutive naturals: length spectra and spectral classes", "consec"};
  app.require_subcommand(1);
  Options o;

  auto* spectrum = app.add_subcommand("spectrum", "Decompositions and length spectrum of n");
  spectrum->add_option("n", o.n)->required();
  spectrum->add_option("--cap", o.cap, "Print every term only for runs up to this length")->capture_default_str();
  spectrum->add_flag("--json", o.json);

  auto* cls = app.add_subcommand("class", "Spectral class of n");
  cls->add_option("n", o.n)->required();
  cls->add_option("--limit", o.limit, "How many members to list")->capture_default_str()->check(CLI::PositiveNumber);
  cls->add_flag("--json", o.json);

  auto* inv = app.add_subcommand("inverse", "All numbers having the given set as spectrum");
  inv->add_option("elements", o.set);
  inv->add_option("--limit", o.limit, "How many members to list")->capture_default_str()->check(CLI::PositiveNumber);
  inv->add_flag("--json", o.json);

  auto* verify = app.add_subcommand("verify", "Check invariant suites over [lo, hi]");
  verify->add_option("lo", o.lo)->required();
  verify->add_option("hi", o.hi)->required();
  verify->add_option("properties", o.properties, "Suites to run (default: all)")
      ->check(CLI::IsMember(verify_suite_names()));
  verify->add_option("--jobs", o.jobs, "Worker threads (0: all cores)");
  verify->add_flag("--json", o.json, "Accepted for symmetry; output is always JSON");

  std::vector<std::string> all_witnesses = witness_names(true);
  auto* witness = app.add_subcommand("witness", "Smallest n satisfying a named property");
  witness->add_option("property", o.property)->required()->check(CLI::IsMember(all_witnesses));
  witness->add_option("--max", o.max, "Upper bound of the scan")->required();
  witness->add_option("--jobs", o.jobs, "Worker threads (0: all cores)");
  witness->add_flag("--extended", o.extended, "Allow the long scans");
  witness->add_flag("--json", o.json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalidInput;
  }

  try {
    return run_parsed(app, o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

}  // namespace consec
