#pragma once

#include <optional>
#include <vector>

#include "pg5/bigraph.hpp"

namespace pg5 {

/// Arm-length profile of a star-shaped graph: a tree, all multiplicities 1,
/// exactly one vertex of valence >= 3 (the center).
struct StarProfile {
  std::vector<int> arms;  // sorted increasing
  int star_arm = 0;       // length of the arm containing the star vertex (0: star is the center)
  bool star_on_longest = false;

  int num_arms() const { return static_cast<int>(arms.size()); }
  bool is_4star() const { return num_arms() == 4; }
};

/// Star with n arms all of length 2, star at the end of one arm; q = n + 1.
struct SpokeParams {
  int n = 0;
  int q = 0;
};

std::optional<StarProfile> star_profile(const Bigraph& g);
std::optional<SpokeParams> spoke_2n_params(const Bigraph& g);

/// Prepends k initial path edges to both graphs (k even), raising the
/// supertransitivity by k; all previous depths shift by k.
BigraphPair translate(const BigraphPair& p, int k);

/// Literal stability predicate at depth n: every vertex at depth n connects to
/// at most one vertex at depth n+1 by at most one edge, and every vertex at
/// depth n+1 is connected to exactly one vertex at depth n.
bool stable_at_depth(const Bigraph& g, int n);

/// All pairs obtained by appending pendant chains at depths strictly beyond
/// the current maximum, stable at every new depth, with the two graphs
/// extended in lockstep (identical new-layer sizes; asymmetric extensions are
/// rejected). Appended even layers carry identity duals. Results are deduped
/// up to pair isomorphism and include the trivial extension.
std::vector<BigraphPair> stable_extensions(const BigraphPair& p, int extra_depths);

}  // namespace pg5
