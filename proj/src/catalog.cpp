#include "pg5/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "pg5/graph_ops.hpp"
#include "pg5/isomorphism.hpp"
#include "pg5/spectral.hpp"

namespace pg5 {
namespace {

using nlohmann::json;

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> t;
  auto add = [&](std::string name, std::string plus, std::string minus, Fate fate,
                 std::string reason, std::string source) {
    t.push_back({std::move(name), std::move(plus), std::move(minus), fate, std::move(reason),
                 std::move(source)});
  };
  const std::string z5 = "bwd1v1p1p1p1duals1v4x3x2x1";
  const std::string d10 = "bwd1v1p1v1x1v1duals1v1x2v1";
  const std::string affine = "bwd1v1v1p1p1v1x0x0p0x1x0p0x0x1duals1v1v2x1x3";
  add("Z5", z5, z5, Fate::REALIZED_UNIQUE, "", "subgroup 1 < Z/5");
  add("D10", d10, d10, Fate::REALIZED_UNIQUE, "", "subgroup Z/2 < D10");
  add("Z4-F5", affine, affine, Fate::REALIZED_UNIQUE, "",
      "subgroup Z/4 < F5 : F5x (affine group, the 2222 pair)");
  add("A4-A5", "bwd1v1v1v1p1p1v0x0x1p0x0x1duals1v1v1x2x3",
      "bwd1v1v1v1p1p1v0x1x0p0x0x1v1x0p0x1duals1v1v1x2x3v2x1", Fate::REALIZED_UNIQUE, "",
      "subgroup A4 < A5");
  add("S4-S5", "bwd1v1v1v1p1v1x0p0x1v1x1p0x1v0x1v1duals1v1v1x2v1x2v1",
      "bwd1v1v1v1p1v0x1p0x1v1x0p0x1p0x1v0x0x1v1duals1v1v1x2v1x2x3v1", Fate::REALIZED_UNIQUE,
      "", "subgroup S4 < S5");
  add("S4-S5-alt", "bwd1v1v1v1p1v1x0p0x1v1x0p1x1v1x0v1duals1v1v1x2v1x2v1",
      "bwd1v1v1v1p1v0x1p0x1v1x0p1x0p0x1v0x1x0v1duals1v1v1x2v1x2x3v1", Fate::REALIZED_UNIQUE,
      "", "alternate presentation of S4 < S5");

  const std::string g123 = "bwd1v1v1p1v1x0p1x0p1x0p0x1";
  add("G_1", g123 + "duals1v1v4x2x3x1", g123 + "duals1v1v4x2x3x1", Fate::ELIMINATED,
      "dual_dimension_mismatch", "candidate list");
  add("G_2", g123 + "duals1v1v4x3x2x1", g123 + "duals1v1v4x2x3x1", Fate::ELIMINATED,
      "dual_dimension_mismatch", "candidate list");
  add("G_3", g123 + "duals1v1v4x3x2x1", g123 + "duals1v1v4x3x2x1", Fate::ELIMINATED,
      "dual_dimension_mismatch", "candidate list");
  add("G_4",
      "bwd1v1v1p1v1x0p1x0p0x1v0x1x0p0x1x0p0x0x1v1x0x0p0x0x1p0x0x1v0x0x1duals1v1v3x2x1v3x2x1",
      "bwd1v1v1p1v1x0p1x0p0x1v0x1x0p0x0x1p0x1x0v1x0x0p0x1x0p0x1x0v0x0x1duals1v1v3x2x1v3x2x1",
      Fate::ELIMINATED, "subunit_vertex", "candidate list");
  add("G_5", "bwd1v1v1v1p1v1x0p1x0v1x0p1x0p0x1v1x0x0v1duals1v1v1x2v1x2x3v1",
      "bwd1v1v1v1p1v1x0p0x1v1x1p1x0v0x1v1duals1v1v1x2v1x2v1", Fate::REALIZED_UNIQUE, "",
      "candidate list");
  add("G_6", "bwd1v1v1v1p1p1v1x0x0p1x0x0duals1v1v1x2x3",
      "bwd1v1v1v1p1p1v1x0x0p1x0x0duals1v1v1x2x3", Fate::ELIMINATED, "connection_prerequisite",
      "candidate list");
  add("G_7", "bwd1v1v1v1p1p1v1x0x0p0x1x0v1x0p0x1duals1v1v1x2x3v1x2",
      "bwd1v1v1v1p1p1v1x0x0p0x1x0v1x0p0x1duals1v1v1x2x3v1x2", Fate::ELIMINATED,
      "invertible_group_obstruction", "candidate list");
  add("G_8", "bwd1v1v1v1p1p1v1x0x0p0x1x0v1x0p0x1duals1v1v1x2x3v2x1",
      "bwd1v1v1v1p1p1v1x0x0p1x0x0duals1v1v1x2x3", Fate::REALIZED_UNIQUE, "",
      "candidate list (A4 < A5)");
  add("G_9", "bwd1v1v1v1p1p1v0x1x0p0x1x0duals1v1v3x2x1",
      "bwd1v1v1v1p1p1v0x1x0p0x1x0duals1v1v3x2x1", Fate::ELIMINATED_EXTERNAL,
      "external_citation", "candidate list");
  add("G_10", "bwd1v1v1v1p1p1v1x0x0p0x0x1v1x0p0x1duals1v1v3x2x1v1x2",
      "bwd1v1v1v1p1p1v0x1x0p0x1x0duals1v1v3x2x1", Fate::ELIMINATED,
      "invertible_group_obstruction", "candidate list");
  add("G_11", "bwd1v1v1v1p1p1v1x0x0p0x0x1v1x0p0x1duals1v1v3x2x1v2x1",
      "bwd1v1v1v1p1p1v1x0x0p0x0x1v1x0p0x1duals1v1v3x2x1v2x1", Fate::ELIMINATED_EXTERNAL,
      "external_citation", "candidate list");
  add("G_12", "bwd1v1v1p1p1v1x0x0p0x1x0p0x0x1duals1v1v1x2x3",
      "bwd1v1v1p1p1v1x0x0p0x1x0p0x0x1duals1v1v1x2x3", Fate::ELIMINATED,
      "spoke_2n_obstruction", "candidate list");
  add("G_13", "bwd1v1v1p1p1v1x0x0p0x1x0p0x0x1duals1v1v3x2x1",
      "bwd1v1v1p1p1v1x0x0p0x1x0p0x0x1duals1v1v3x2x1", Fate::REALIZED_UNIQUE, "",
      "candidate list (affine pair with relabeled duals)");
  add("G_14", "bwd1v1v1p1p1v1x0x0p0x1x0v1x0p1x0duals1v1v1x2",
      "bwd1v1v1p1p1v1x0x0p0x1x0v1x0p1x0duals1v1v1x2", Fate::ELIMINATED, "subunit_vertex",
      "candidate list");
  add("G_15", "bwd1v1v1p1p1v1x0x0p0x1x0v1x0p0x1v1x0p0x1v1x0p0x1duals1v1v2x1v2x1",
      "bwd1v1v1p1p1v1x0x0p0x1x0v1x0p0x1v1x0p0x1v1x0p0x1duals1v1v2x1v2x1", Fate::ELIMINATED,
      "subunit_vertex", "candidate list");
  add("Gamma_4621", "bwd1v1v1v1v1p1p1v1x0x0p0x1x0v1x0v1v1v1duals1v1v1v1x2v1v1",
      "bwd1v1v1v1v1p1p1v1x0x0p0x1x0v1x0v1v1v1duals1v1v1v1x2v1v1", Fate::CYLINDER_FAMILY,
      "schou_star_obstruction", "cylinder S(4,6,2,1): generator of a stable-extension family");
  add("Gamma_5521", "bwd1v1v1v1v1v1p1p1v1x0x0p0x1x0v1x0v1v1duals1v1v1v1x2x3v1v1",
      "bwd1v1v1v1v1v1p1p1v1x0x0p0x1x0v1x0v1v1duals1v1v1v1x2x3v1v1", Fate::ELIMINATED,
      "schou_star_obstruction", "the 4-star S(5,5,2,1)");
  return t;
}

std::vector<std::string> canonical_names_sorted();

json spectral_json(const SpectralData& s) {
  json j{{"poly", s.char_poly.str("u")},
         {"isolating_interval", {to_string(s.interval_lo), to_string(s.interval_hi)}}};
  if (s.exact_target) j["exact"] = s.exact_target->str();
  else if (s.exact_root) j["exact"] = to_string(*s.exact_root);
  return j;
}

std::vector<std::string> canonical_names_sorted() {
  std::vector<std::string> names = canonical_names();
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace

std::string to_string(Fate f) {
  switch (f) {
    case Fate::REALIZED_UNIQUE: return "REALIZED_UNIQUE";
    case Fate::ELIMINATED: return "ELIMINATED";
    case Fate::ELIMINATED_EXTERNAL: return "ELIMINATED_EXTERNAL";
    case Fate::CYLINDER_FAMILY: return "CYLINDER_FAMILY";
    case Fate::OUT_OF_SCOPE_NORM: return "OUT_OF_SCOPE(norm)";
    case Fate::UNRESOLVED: return "UNRESOLVED";
  }
  return "?";
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* find_entry(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return &e;
  return nullptr;
}

const std::vector<std::string>& canonical_names() {
  static const std::vector<std::string> names{"Z5", "D10", "Z4-F5", "A4-A5", "S4-S5"};
  return names;
}

ClassificationRecord classify_pair(const BigraphPair& p, const std::string& name) {
  ClassificationRecord rec;
  rec.name = name;
  const SpectralData np = norm_squared(p.plus, BigInt(5));
  const SpectralData nm = norm_squared(p.minus, BigInt(5));
  rec.norm_plus = spectral_json(np);
  rec.norm_minus = spectral_json(nm);
  rec.norm_exactly_5 = np.exact_target.has_value() && nm.exact_target.has_value();
  rec.norm_advisory_ok = norms_agree(p);
  rec.supertransitivity_plus = supertransitivity(p.plus);
  rec.verdicts = run_battery(p);

  for (const auto& v : rec.verdicts) {
    if (v.outcome == Outcome::ELIMINATED) {
      rec.fate = Fate::ELIMINATED;
      rec.reason = v.check;
      return rec;
    }
  }
  for (const auto& v : rec.verdicts) {
    if (v.outcome == Outcome::ELIMINATED_EXTERNAL) {
      rec.fate = Fate::ELIMINATED_EXTERNAL;
      rec.reason = v.check;
      return rec;
    }
  }
  if (!rec.norm_exactly_5) {
    rec.fate = Fate::OUT_OF_SCOPE_NORM;
    return rec;
  }
  for (const auto& cname : canonical_names()) {
    const CatalogEntry* canon = find_entry(cname);
    if (const auto iso = pair_isomorphic(p, canon->pair(), true)) {
      rec.fate = Fate::REALIZED_UNIQUE;
      rec.matched_canonical = cname;
      rec.matched_via_opposite = iso->swapped;
      return rec;
    }
  }
  rec.fate = Fate::UNRESOLVED;
  return rec;
}

std::vector<BigraphPair> cylinder_family(const BigraphPair& p, int budget) {
  std::vector<BigraphPair> out;
  for (int t = 0; t <= budget; t += 2) {
    const BigraphPair base = translate(p, t);
    for (auto& ext : stable_extensions(base, budget - t)) out.push_back(std::move(ext));
  }
  return out;
}

nlohmann::json ClassificationRecord::to_json() const {
  json verdicts_json = json::array();
  for (const auto& v : verdicts) verdicts_json.push_back(v.to_json());
  json j{{"name", name},
         {"norm_sq", {{"plus", norm_plus}, {"minus", norm_minus}}},
         {"norm_exactly_5", norm_exactly_5},
         {"norms_agree", norm_advisory_ok},
         {"supertransitivity", supertransitivity_plus},
         {"verdicts", verdicts_json},
         {"fate", to_string(fate)}};
  if (!reason.empty()) j["reason"] = reason;
  if (!matched_canonical.empty()) {
    j["matched_canonical"] = matched_canonical;
    j["matched_via_opposite"] = matched_via_opposite;
  }
  if (!family.is_null()) j["family"] = family;
  return j;
}

Report reproduce_with(const std::vector<CatalogEntry>& entries) {
  Report report;
  std::vector<std::string> survivors;
  for (const auto& entry : entries) {
    const BigraphPair p = entry.pair();
    ClassificationRecord rec;
    if (entry.expected_fate == Fate::CYLINDER_FAMILY) {
      // Classify every translated stable extension within the depth budget.
      rec.name = entry.name;
      rec.supertransitivity_plus = supertransitivity(p.plus);
      const auto members = cylinder_family(p, 4);
      json fam = json::array();
      bool all_schou = !members.empty();
      for (const auto& member : members) {
        const ClassificationRecord mr = classify_pair(member);
        const auto prof = star_profile(member.plus);
        json mj{{"fate", to_string(mr.fate)}, {"reason", mr.reason}};
        if (prof) mj["star"] = prof->arms;
        fam.push_back(mj);
        if (!(mr.fate == Fate::ELIMINATED && mr.reason == entry.expected_reason))
          all_schou = false;
      }
      rec.family = json{{"budget", 4}, {"members", fam}};
      rec.fate = all_schou ? Fate::CYLINDER_FAMILY : Fate::UNRESOLVED;
      rec.reason = entry.expected_reason;
    } else {
      rec = classify_pair(p, entry.name);
    }
    const bool fate_ok = rec.fate == entry.expected_fate;
    const bool reason_ok = entry.expected_fate != Fate::ELIMINATED || rec.reason == entry.expected_reason;
    if (!fate_ok || !reason_ok) {
      std::ostringstream os;
      os << entry.name << ": computed " << to_string(rec.fate)
         << (rec.reason.empty() ? "" : " (" + rec.reason + ")") << ", expected "
         << to_string(entry.expected_fate)
         << (entry.expected_reason.empty() ? "" : " (" + entry.expected_reason + ")");
      report.mismatches.push_back(os.str());
    }
    if (rec.fate == Fate::REALIZED_UNIQUE) survivors.push_back(rec.matched_canonical);
    report.records.push_back(std::move(rec));
  }

  // The surviving set, counted with non-self-opposite duals, must total seven.
  std::vector<std::string> distinct = survivors;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  report.survivor_pairs = static_cast<int>(distinct.size());
  int invariants = 0;
  for (const auto& cname : distinct) {
    const CatalogEntry* canon = find_entry(cname);
    const BigraphPair cp = canon->pair();
    const bool self_opposite = pair_isomorphic(cp, opposite(cp), false).has_value();
    invariants += self_opposite ? 1 : 2;
  }
  report.invariant_count = invariants;
  if (distinct != canonical_names_sorted())
    report.mismatches.push_back("survivor set differs from the five realized pairs");
  if (invariants != 7)
    report.mismatches.push_back("invariant count " + std::to_string(invariants) + " != 7");
  report.ok = report.mismatches.empty();
  return report;
}

Report reproduce_classification() { return reproduce_with(catalog_entries()); }

nlohmann::json Report::to_json() const {
  json recs = json::array();
  int eliminated = 0, external = 0;
  for (const auto& r : records) {
    recs.push_back(r.to_json());
    if (r.fate == Fate::ELIMINATED) ++eliminated;
    if (r.fate == Fate::ELIMINATED_EXTERNAL) ++external;
  }
  return json{{"records", recs},
              {"summary",
               {{"survivors", survivor_pairs},
                {"eliminated", eliminated},
                {"external", external},
                {"total", records.size()},
                {"invariants_with_duals", invariant_count}}},
              {"ok", ok},
              {"mismatches", mismatches}};
}

std::string Report::to_markdown() const {
  std::ostringstream os;
  os << "| pair | norm^2 = 5 | st | fate | detail |\n";
  os << "|------|-----------|----|------|--------|\n";
  for (const auto& r : records) {
    std::string detail = r.reason;
    if (!r.matched_canonical.empty())
      detail = "= " + r.matched_canonical + (r.matched_via_opposite ? " (opposite)" : "");
    os << "| " << r.name << " | " << (r.norm_exactly_5 ? "yes" : "no") << " | "
       << r.supertransitivity_plus << " | " << to_string(r.fate) << " | " << detail << " |\n";
  }
  os << "\n" << survivor_pairs << " surviving pairs; " << invariant_count
     << " invariants counting non-self-opposite duals.\n";
  if (!mismatches.empty()) {
    os << "\nMISMATCHES:\n";
    for (const auto& m : mismatches) os << "  - " << m << "\n";
  }
  return os.str();
}

}  // namespace pg5
