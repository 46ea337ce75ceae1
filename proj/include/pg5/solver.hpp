#pragma once

#include <json.hpp>

#include <complex>
#include <cstdint>
#include <vector>

#include "pg5/cells.hpp"

namespace pg5 {

struct SolveResult {
  CellAssignment best;
  double best_residual = 0.0;
  std::vector<double> restart_residuals;     // in restart order
  std::vector<CellAssignment> solutions;     // all restarts that reached < tol
  double tol = 0.0;
  std::uint64_t seed = 0;

  nlohmann::json to_json() const;
};

/// Least-squares descent (Levenberg-Marquardt, analytic Jacobian) on the
/// bi-unitarity residual from seeded random initializations. Deterministic
/// given the seed; non-convergence is data, not an error.
SolveResult solve(const CellComplex& c, int restarts, double tol, std::uint64_t seed);

/// Canonical gauge-invariant summary of an assignment: the sorted cell moduli
/// and the sorted multiset of 2x2 minor loop products from both block
/// families, folded to (real part, modulus) coordinates. Invariant under the
/// per-edge gauge action and under pair relabelings (sorting subsumes the
/// graph-automorphism quotient).
struct InvariantVector {
  std::vector<double> moduli;
  std::vector<std::complex<double>> loops;
};

InvariantVector gauge_invariants(const CellComplex& c, const CellAssignment& w);
double invariant_distance(const InvariantVector& x, const InvariantVector& y);

struct OrbitReport {
  int orbit_estimate = 0;
  bool continuum = false;
  int solutions_found = 0;
  int restarts = 0;
  double best_residual = 0.0;
  double invariant_diameter = 0.0;
  double median_nearest_neighbor = 0.0;
  std::vector<CellAssignment> representatives;

  nlohmann::json to_json() const;
};

/// Clusters sub-tolerance solutions by invariant vectors; the continuum flag
/// is set when the invariants spread along a 1-dimensional set (many
/// non-clustering points whose nearest-neighbor gaps are small against the
/// overall diameter).
OrbitReport count_gauge_orbits(const CellComplex& c, int restarts, double tol,
                               std::uint64_t seed = 1);

}  // namespace pg5
