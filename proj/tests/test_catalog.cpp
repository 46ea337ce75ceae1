#include <doctest.h>

#include <random>

#include "pg5/catalog.hpp"
#include "pg5/isomorphism.hpp"

using namespace pg5;

TEST_CASE("catalog lookups") {
  const CatalogEntry* g12 = find_entry("G_12");
  REQUIRE(g12 != nullptr);
  CHECK(g12->plus.find("duals1v1v1x2x3") != std::string::npos);
  CHECK(find_entry("no_such_pair") == nullptr);
  CHECK(canonical_names().size() == 5);  // the five displayed subgroup pairs
  CHECK(catalog_entries().size() == 23);
}

TEST_CASE("every entry builds a valid pair") {
  for (const auto& entry : catalog_entries()) {
    const BigraphPair p = entry.pair();
    CHECK_NOTHROW(p.plus.validate());
    CHECK_NOTHROW(p.minus.validate());
  }
}

TEST_CASE("classification of individual entries") {
  const ClassificationRecord g1 = classify_pair(find_entry("G_1")->pair(), "G_1");
  CHECK(g1.fate == Fate::ELIMINATED);
  CHECK(g1.reason == "dual_dimension_mismatch");

  const ClassificationRecord g5 = classify_pair(find_entry("G_5")->pair(), "G_5");
  CHECK(g5.fate == Fate::REALIZED_UNIQUE);
  CHECK(g5.matched_canonical == "S4-S5");

  const ClassificationRecord g8 = classify_pair(find_entry("G_8")->pair(), "G_8");
  CHECK(g8.fate == Fate::REALIZED_UNIQUE);
  CHECK(g8.matched_canonical == "A4-A5");

  // A valid pair whose squared norm is not 5 and which trips no obstruction.
  const BigraphPair a7 = parse_pair("bwd1v1v1duals1v1", "bwd1v1v1duals1v1");
  const ClassificationRecord out = classify_pair(a7);
  CHECK(out.fate == Fate::OUT_OF_SCOPE_NORM);
}

TEST_CASE("the alternate presentation matches the canonical one") {
  const auto iso =
      pair_isomorphic(find_entry("S4-S5-alt")->pair(), find_entry("S4-S5")->pair(), true);
  REQUIRE(iso.has_value());
}

TEST_CASE("reproduction of the classification") {
  const Report rep = reproduce_classification();
  CHECK(rep.ok);
  CHECK(rep.mismatches.empty());
  CHECK(rep.survivor_pairs == 5);
  CHECK(rep.invariant_count == 7);
}

TEST_CASE("a forged expectation fails with a diff naming the entry") {
  std::vector<CatalogEntry> forged = catalog_entries();
  for (auto& e : forged)
    if (e.name == "G_1") {
      e.expected_fate = Fate::REALIZED_UNIQUE;
      e.expected_reason.clear();
    }
  const Report rep = reproduce_with(forged);
  CHECK(!rep.ok);
  REQUIRE(!rep.mismatches.empty());
  CHECK(rep.mismatches.front().find("G_1") != std::string::npos);
}

TEST_CASE("dropping an eliminated entry leaves seven invariants") {
  std::vector<CatalogEntry> reduced;
  for (const auto& e : catalog_entries())
    if (e.name != "G_6") reduced.push_back(e);
  const Report rep = reproduce_with(reduced);
  CHECK(rep.ok);
  CHECK(rep.invariant_count == 7);
}

TEST_CASE("survivors are invariant under relabeling the catalog") {
  std::mt19937_64 rng(31337);
  for (const char* name : {"G_5", "G_8", "G_13", "G_3", "G_12", "Gamma_5521"}) {
    const CatalogEntry* entry = find_entry(name);
    const ClassificationRecord base = classify_pair(entry->pair(), name);
    const ClassificationRecord moved = classify_pair(random_relabel(entry->pair(), rng), name);
    CHECK(moved.fate == base.fate);
    CHECK(moved.reason == base.reason);
    CHECK(moved.matched_canonical == base.matched_canonical);
  }
}

TEST_CASE("exactly two survivors differ from their opposites") {
  int self_opposite = 0;
  std::vector<std::string> chiral;
  for (const auto& name : canonical_names()) {
    const BigraphPair p = find_entry(name)->pair();
    if (pair_isomorphic(p, opposite(p), false)) ++self_opposite;
    else chiral.push_back(name);
  }
  CHECK(self_opposite == 3);
  REQUIRE(chiral.size() == 2);
  CHECK(std::find(chiral.begin(), chiral.end(), "A4-A5") != chiral.end());
  CHECK(std::find(chiral.begin(), chiral.end(), "S4-S5") != chiral.end());
}

TEST_CASE("report json shape") {
  const Report rep = reproduce_classification();
  const auto j = rep.to_json();
  CHECK(j.at("summary").at("survivors") == 5);
  CHECK(j.at("summary").at("invariants_with_duals") == 7);
  CHECK(j.at("summary").at("total") == 23);
  CHECK(j.at("records").size() == 23);
  // Deterministic report: serialize twice.
  CHECK(rep.to_json().dump() == reproduce_classification().to_json().dump());
}
