#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "pg5/bigraph.hpp"
#include "pg5/obstructions.hpp"

namespace pg5 {

enum class Fate {
  REALIZED_UNIQUE,
  ELIMINATED,
  ELIMINATED_EXTERNAL,
  CYLINDER_FAMILY,
  OUT_OF_SCOPE_NORM,
  UNRESOLVED,
};

std::string to_string(Fate f);

struct CatalogEntry {
  std::string name;
  std::string plus, minus;  // graph strings, byte-exact
  Fate expected_fate;
  std::string expected_reason;  // eliminating check for ELIMINATED fates
  std::string source;

  BigraphPair pair() const { return parse_pair(plus, minus); }
};

/// The embedded dataset: the five realized pairs, the alternate presentation,
/// the candidate list G_1..G_15, the cylinder, and Gamma_5521.
const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry* find_entry(const std::string& name);

/// Names of the realized invariants (the canonical match targets).
const std::vector<std::string>& canonical_names();

struct ClassificationRecord {
  std::string name;
  nlohmann::json norm_plus, norm_minus;
  bool norm_exactly_5 = false;
  bool norm_advisory_ok = true;
  int supertransitivity_plus = 0;
  std::vector<Verdict> verdicts;
  Fate fate = Fate::UNRESOLVED;
  std::string reason;             // first eliminating check, when eliminated
  std::string matched_canonical;  // for survivors
  bool matched_via_opposite = false;
  nlohmann::json family;          // cylinder-family sub-report, when applicable

  nlohmann::json to_json() const;
};

/// Norm gate, 1-supertransitive screen, obstruction battery, Schou test, and
/// canonical matching, folded into a final fate.
ClassificationRecord classify_pair(const BigraphPair& p, const std::string& name = "");

/// Translated stable extensions of a cylinder with total added depth <= budget.
std::vector<BigraphPair> cylinder_family(const BigraphPair& p, int budget);

struct Report {
  std::vector<ClassificationRecord> records;
  std::vector<std::string> mismatches;  // computed vs expected fate diffs
  int survivor_pairs = 0;
  int invariant_count = 0;  // survivors counted with non-self-opposite duals
  bool ok = false;

  nlohmann::json to_json() const;
  std::string to_markdown() const;
};

/// Classifies every catalog entry against its recorded fate and checks that
/// the surviving set reproduces the seven invariants at index exactly 5.
Report reproduce_classification();
Report reproduce_with(const std::vector<CatalogEntry>& entries);

}  // namespace pg5
