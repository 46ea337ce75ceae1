#pragma once

#include <optional>
#include <random>
#include <vector>

#include "pg5/bigraph.hpp"

namespace pg5 {

/// Witness of a pair isomorphism: per-depth vertex permutations mapping the
/// source pair onto the target (or onto the target's opposite when `swapped`).
/// Permutations at odd depths agree between the two graphs by construction,
/// respecting the odd-vertex identification.
struct PairIso {
  std::vector<std::vector<int>> plus;   // depth -> (source index -> target index)
  std::vector<std::vector<int>> minus;
  bool swapped = false;
};

/// Relabels a graph by per-depth permutations (index maps old -> new).
/// perms[d] must be a permutation of layer d; depth 0 is the identity.
Bigraph relabel(const Bigraph& g, const std::vector<std::vector<int>>& perms);

/// Applies an isomorphism witness to the source pair; the result equals the
/// target pair (or its opposite when iso.swapped).
BigraphPair apply_iso(const BigraphPair& p, const PairIso& iso);

/// Depth-preserving isomorphism search: edge-, dual-, and odd-identification-
/// preserving. With allow_opposite also tries the target with plus and minus
/// swapped. Plain per-depth backtracking; catalog graphs are small.
std::optional<PairIso> pair_isomorphic(const BigraphPair& p, const BigraphPair& q,
                                       bool allow_opposite);

/// Random depth-preserving relabeling of a pair (shared permutations on odd
/// layers), for invariance property tests.
BigraphPair random_relabel(const BigraphPair& p, std::mt19937_64& rng);

}  // namespace pg5
