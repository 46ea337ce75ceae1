#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "pg5/bigraph.hpp"
#include "pg5/spectral.hpp"

namespace pg5 {

enum class Outcome { ELIMINATED, PASSES, NOT_APPLICABLE, ELIMINATED_EXTERNAL };

std::string to_string(Outcome o);

/// Machine-checkable outcome of one obstruction: ELIMINATED always carries a
/// witness that re-verifies by recomputing the cited quantity from the pair.
struct Verdict {
  std::string check;
  Outcome outcome = Outcome::NOT_APPLICABLE;
  nlohmann::json witness;
  std::string ref;    // literature citation backing the rule
  std::string notes;

  bool eliminated() const {
    return outcome == Outcome::ELIMINATED || outcome == Outcome::ELIMINATED_EXTERNAL;
  }
  nlohmann::json to_json() const;
};

/// Some even vertex is dual to a vertex of a different exact dimension.
Verdict dual_dimension_mismatch(const BigraphPair& p);

/// Some vertex has exact dimension strictly below 1.
Verdict subunit_vertex(const BigraphPair& p);

/// The dimension-1 even vertices of the plus graph must form a group whose
/// self-inverse-element count matches some group of that order.
Verdict invertible_group_obstruction(const BigraphPair& p);

/// 2^n spoke graphs exist only for n = q-1 with q a prime power, and at q = 5
/// only with the dual data of the affine subgroup pair.
Verdict spoke_2n_obstruction(const BigraphPair& p);

/// Schou's classification of 4-stars admitting a biunitary connection.
Verdict schou_star_obstruction(const BigraphPair& p);

/// Narrow connection-existence prerequisite for the specific shape where a
/// 3-supertransitive triple point carries two pendants on one branch vertex.
Verdict connection_prerequisite(const BigraphPair& p);

/// Pairs whose elimination rests on a cited external result rather than a
/// computation reproducible here.
Verdict external_citation(const BigraphPair& p);

/// Screen for 1-supertransitive pairs at squared norm exactly 5: the depth-2
/// dimension multiset must be {1,1,1,1} or {2,2}, and survivors must match one
/// of the two known 1-supertransitive invariants.
Verdict one_supertransitive_screen(const BigraphPair& p);

bool schou_admissible(const std::vector<int>& sorted_arms);
bool is_prime_power(int q);

/// Runs every applicable check in a fixed documented order. When short_circuit
/// is set, checks after the first elimination are recorded as skipped.
std::vector<Verdict> run_battery(const BigraphPair& p, bool short_circuit = false);

}  // namespace pg5
