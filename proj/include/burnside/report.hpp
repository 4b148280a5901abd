#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "burnside/tambara.hpp"

namespace burnside {

// A rendered result: one JSON document plus a text rendering derived from
// the same payload, so both carry identical numeric content.
struct ReportDocument {
  nlohmann::json json;

  std::string to_json_string() const { return json.dump(2) + "\n"; }
  std::string to_text() const;
  bool ok() const { return json.value("ok", false); }
};

ReportDocument build_marks_report(const BurnsideRing& ring);
ReportDocument build_idempotents_report(const BurnsideRing& ring, const PrimeSet& raw);
ReportDocument build_norm_report(const BurnsideRing& ring, NormPair resolved,
                                 const PrimeSet& raw);
ReportDocument build_theorem_a_report(const BurnsideRing& ring, const PrimeSet& raw);
ReportDocument build_indexing_report(const BurnsideRing& ring, const PrimeSet& raw);
ReportDocument build_splitting_report(const BurnsideRing& ring, const PrimeSet& raw);
ReportDocument build_full_report(const BurnsideRing& ring, const PrimeSet& raw);

// Command line front end ----------------------------------------------------

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string command;         // marks|idempotents|norm|theorem-a|indexing-systems|splitting|report
  std::string group_spec;
  std::string primes_text = "all";
  std::string format = "text";  // text | json
  std::string out_path;         // empty = stdout
  std::string from_spec;        // norm only
  std::string to_spec;          // norm only
  int max_order = 2000;
  std::string help_text;        // nonempty when --help was requested
};

// Parses argv into a Config; throws ConfigError on usage problems.
Config parse_config(int argc, const char* const* argv);

// Resolves two generator lists (1-based cycle notation) to the canonical
// representative of the pair class of (K <= H).  Throws ConfigError when a
// permutation is not a group element or the containment fails.
NormPair resolve_pair(const SubgroupLattice& lat, const std::string& from_text,
                      const std::string& to_text);

// Executes a config.  Exit codes: 0 success, 1 usage/input error, 2
// verification failure, 3 order cap exceeded, 4 internal assertion failure.
int run(const Config& cfg, std::ostream& out, std::ostream& err);

}  // namespace burnside
