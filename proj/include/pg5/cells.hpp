#pragma once

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <vector>

#include "pg5/bigraph.hpp"

namespace pg5 {

using CellAssignment = Eigen::VectorXcd;

/// Square-cell index set of a simply-laced graph pair, with the two block
/// families bi-unitarity constrains:
///   - unitarity blocks: for each (a, b) in even(plus) x even(minus), the
///     matrix of raw cell values indexed by odd vertices adjacent to both;
///   - renormalized blocks: for each ordered odd pair (m, n), the matrix
///     rho * conj(W) indexed by common even neighbors in plus (rows) and in
///     minus (columns), rho = sqrt(mu(a) mu(b) / (mu(m) mu(n))).
/// Weights mu are the Frobenius-Perron dimensions, star = 1 in each graph,
/// odd weights taken from the plus graph (the two agree on realizable pairs).
struct CellComplex {
  struct Cell {
    int a, m, b, n;  // indices into even_plus, odd, even_minus, odd
  };
  /// cell_ids.at(r).at(c) indexes into cells; -1 never occurs (blocks are full).
  struct Block {
    std::vector<std::vector<int>> cell_ids;
    int rows() const { return static_cast<int>(cell_ids.size()); }
    int cols() const { return cell_ids.empty() ? 0 : static_cast<int>(cell_ids[0].size()); }
  };

  BigraphPair pair;
  std::vector<VertexRef> even_plus, even_minus, odd;
  std::vector<double> mu_plus, mu_minus, mu_odd;
  std::vector<Cell> cells;
  // Kept in extended precision: the exact dimensions are known, and the
  // solver's polishing pass needs the constraint coefficients sharper than
  // double to pin nearly-flat directions.
  std::vector<long double> rho;  // per cell
  std::vector<Block> unitarity_blocks;  // entries: raw W
  std::vector<Block> renorm_blocks;     // entries: rho * conj(W)
  int max_unitarity_block = 0;
  int max_renorm_block = 0;
  /// Charge for renormalized blocks with a one-sided common neighborhood
  /// (possible only on pairs that admit no connection).
  double constant_penalty = 0.0;

  // Gauge data: one phase per edge of each graph; a cell touches plus edges
  // (a,m), (a,n) and minus edges (b,m), (b,n).
  std::vector<std::pair<int, int>> plus_edges, minus_edges;  // (even index, odd index)
  struct CellEdges {
    int am, an, bm, bn;
  };
  std::vector<CellEdges> cell_edges;

  int num_cells() const { return static_cast<int>(cells.size()); }
};

/// Builds the cell complex; throws on multiplicities > 1 or when the exact
/// norm does not lie in Q(sqrt5) (no catalog pair does either).
CellComplex build_cells(const BigraphPair& p);

/// Sum of squared deviations from unitarity over both block families: for each
/// block B, ||B B* - I||_F^2 + ||B* B - I||_F^2. Zero iff w is a bi-unitary
/// connection under the stated renormalization convention.
double residual(const CellComplex& c, const CellAssignment& w);

/// The connection on the role-swapped complex: w~ = rho * conj(w), with the
/// transposed complex carrying inverse weights, so the construction applied
/// twice returns the original assignment exactly.
CellComplex transposed(const CellComplex& c);
CellAssignment renorm_transpose(const CellComplex& c, const CellAssignment& w);

/// Per-edge unit-modulus gauge action:
///   W(a,m,b,n) -> g(a,m) conj(g(a,n)) conj(h(b,m)) h(b,n) W(a,m,b,n).
CellAssignment gauge_transform(const CellComplex& c, const CellAssignment& w,
                               const std::vector<std::complex<double>>& g_plus,
                               const std::vector<std::complex<double>>& h_minus);
CellAssignment random_gauge_transform(const CellComplex& c, const CellAssignment& w,
                                      std::mt19937_64& rng);

/// Modulus seed per cell from the renormalization identity on 1x1 blocks.
double modulus_seed(const CellComplex& c, int cell);

}  // namespace pg5
