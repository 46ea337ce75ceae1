#include "pg5/cells.hpp"

#include <map>
#include <stdexcept>

#include "pg5/spectral.hpp"

namespace pg5 {
namespace {

void require_simply_laced(const Bigraph& g, const char* label) {
  for (int d = 1; d <= g.max_depth(); ++d)
    for (int v = 0; v < g.layer_size(d); ++v)
      for (int m : g.row(d, v))
        if (m > 1)
          throw std::invalid_argument(std::string("build_cells: multiplicity > 1 in ") + label +
                                      " graph (unsupported)");
}

}  // namespace

CellComplex build_cells(const BigraphPair& p) {
  require_simply_laced(p.plus, "plus");
  require_simply_laced(p.minus, "minus");

  const auto delta = exact_delta(p.plus);
  if (!delta)
    throw std::invalid_argument("build_cells: exact norm not available in Q(sqrt5)");
  const DimensionVector dims_plus = dimension_vector(p.plus, *delta);
  const DimensionVector dims_minus = dimension_vector(p.minus, *delta);

  CellComplex c;
  c.pair = p;
  for (int d = 0; d <= p.plus.max_depth(); ++d)
    for (int v = 0; v < p.plus.layer_size(d); ++v)
      if (d % 2 == 0) c.even_plus.push_back({d, v});
  for (int d = 0; d <= p.minus.max_depth(); ++d)
    for (int v = 0; v < p.minus.layer_size(d); ++v)
      if (d % 2 == 0) c.even_minus.push_back({d, v});
  const int max_odd_depth = std::max(p.plus.max_depth(), p.minus.max_depth());
  for (int d = 1; d <= max_odd_depth; d += 2)
    for (int v = 0; v < p.plus.layer_size(d) || v < p.minus.layer_size(d); ++v)
      c.odd.push_back({d, v});

  for (auto v : c.even_plus) c.mu_plus.push_back(dims_plus.at(v).to_double());
  for (auto v : c.even_minus) c.mu_minus.push_back(dims_minus.at(v).to_double());
  for (auto v : c.odd) c.mu_odd.push_back(dims_plus.at(v).to_double());
  std::vector<long double> mu_plus_l, mu_minus_l, mu_odd_l;
  for (auto v : c.even_plus) mu_plus_l.push_back(dims_plus.at(v).to_long_double());
  for (auto v : c.even_minus) mu_minus_l.push_back(dims_minus.at(v).to_long_double());
  for (auto v : c.odd) mu_odd_l.push_back(dims_plus.at(v).to_long_double());

  auto adjacent = [](const Bigraph& g, VertexRef even, VertexRef odd) {
    if (odd.depth == even.depth + 1) return g.mult(odd.depth, odd.index, even.index) > 0;
    if (odd.depth == even.depth - 1) return g.mult(even.depth, even.index, odd.index) > 0;
    return false;
  };
  const int ne_plus = static_cast<int>(c.even_plus.size());
  const int ne_minus = static_cast<int>(c.even_minus.size());
  const int no = static_cast<int>(c.odd.size());
  std::vector<std::vector<bool>> adj_plus(ne_plus, std::vector<bool>(no, false));
  std::vector<std::vector<bool>> adj_minus(ne_minus, std::vector<bool>(no, false));
  std::map<std::pair<int, int>, int> plus_edge_id, minus_edge_id;
  for (int i = 0; i < ne_plus; ++i)
    for (int k = 0; k < no; ++k)
      if (c.odd[k].index < p.plus.layer_size(c.odd[k].depth) &&
          adjacent(p.plus, c.even_plus[i], c.odd[k])) {
        adj_plus[i][k] = true;
        plus_edge_id[{i, k}] = static_cast<int>(c.plus_edges.size());
        c.plus_edges.push_back({i, k});
      }
  for (int j = 0; j < ne_minus; ++j)
    for (int k = 0; k < no; ++k)
      if (c.odd[k].index < p.minus.layer_size(c.odd[k].depth) &&
          adjacent(p.minus, c.even_minus[j], c.odd[k])) {
        adj_minus[j][k] = true;
        minus_edge_id[{j, k}] = static_cast<int>(c.minus_edges.size());
        c.minus_edges.push_back({j, k});
      }

  std::map<std::array<int, 4>, int> cell_id;
  auto get_cell = [&](int a, int m, int b, int n) {
    return cell_id.at({a, m, b, n});
  };
  for (int a = 0; a < ne_plus; ++a)
    for (int b = 0; b < ne_minus; ++b) {
      std::vector<int> common;
      for (int k = 0; k < no; ++k)
        if (adj_plus[a][k] && adj_minus[b][k]) common.push_back(k);
      if (common.empty()) continue;
      CellComplex::Block block;
      for (int m : common) {
        std::vector<int> row;
        for (int n : common) {
          const int id = static_cast<int>(c.cells.size());
          cell_id[{a, m, b, n}] = id;
          c.cells.push_back({a, m, b, n});
          const long double r = sqrtl(mu_plus_l[a] * mu_minus_l[b] /
                                      (mu_odd_l[m] * mu_odd_l[n]));
          c.rho.push_back(r);
          c.cell_edges.push_back({plus_edge_id.at({a, m}), plus_edge_id.at({a, n}),
                                  minus_edge_id.at({b, m}), minus_edge_id.at({b, n})});
          row.push_back(id);
        }
        block.cell_ids.push_back(std::move(row));
      }
      c.max_unitarity_block = std::max(c.max_unitarity_block, block.rows());
      c.unitarity_blocks.push_back(std::move(block));
    }

  for (int m = 0; m < no; ++m)
    for (int n = 0; n < no; ++n) {
      std::vector<int> rows_a, cols_b;
      for (int a = 0; a < ne_plus; ++a)
        if (adj_plus[a][m] && adj_plus[a][n]) rows_a.push_back(a);
      for (int b = 0; b < ne_minus; ++b)
        if (adj_minus[b][m] && adj_minus[b][n]) cols_b.push_back(b);
      if (rows_a.empty() && cols_b.empty()) continue;
      if (rows_a.empty() || cols_b.empty()) {
        // One-sided common neighborhood: no cells, but the block's identity
        // target cannot be met; charge it as a constant.
        c.constant_penalty += static_cast<double>(std::max(rows_a.size(), cols_b.size()));
        continue;
      }
      CellComplex::Block block;
      for (int a : rows_a) {
        std::vector<int> row;
        for (int b : cols_b) row.push_back(get_cell(a, m, b, n));
        block.cell_ids.push_back(std::move(row));
      }
      c.max_renorm_block = std::max(c.max_renorm_block, std::max(block.rows(), block.cols()));
      c.renorm_blocks.push_back(std::move(block));
    }
  return c;
}

namespace {

double block_gram_residual(const Eigen::MatrixXcd& b) {
  const Eigen::MatrixXcd e1 =
      b * b.adjoint() - Eigen::MatrixXcd::Identity(b.rows(), b.rows());
  const Eigen::MatrixXcd e2 =
      b.adjoint() * b - Eigen::MatrixXcd::Identity(b.cols(), b.cols());
  return e1.squaredNorm() + e2.squaredNorm();
}

Eigen::MatrixXcd block_matrix(const CellComplex::Block& blk, const CellAssignment& w,
                              const std::vector<long double>* rho) {
  Eigen::MatrixXcd b(blk.rows(), blk.cols());
  for (int r = 0; r < blk.rows(); ++r)
    for (int col = 0; col < blk.cols(); ++col) {
      const int id = blk.cell_ids[r][col];
      b(r, col) = rho ? static_cast<double>((*rho)[id]) * std::conj(w[id]) : w[id];
    }
  return b;
}

}  // namespace

double residual(const CellComplex& c, const CellAssignment& w) {
  double total = c.constant_penalty;
  for (const auto& blk : c.unitarity_blocks)
    total += block_gram_residual(block_matrix(blk, w, nullptr));
  for (const auto& blk : c.renorm_blocks)
    total += block_gram_residual(block_matrix(blk, w, &c.rho));
  return total;
}

CellComplex transposed(const CellComplex& c) {
  CellComplex t = c;
  std::swap(t.unitarity_blocks, t.renorm_blocks);
  for (auto& r : t.rho) r = 1.0L / r;
  int mx = 0;
  for (const auto& blk : t.unitarity_blocks) mx = std::max(mx, std::max(blk.rows(), blk.cols()));
  t.max_unitarity_block = mx;
  return t;
}

CellAssignment renorm_transpose(const CellComplex& c, const CellAssignment& w) {
  CellAssignment out(w.size());
  for (int i = 0; i < w.size(); ++i) out[i] = static_cast<double>(c.rho[i]) * std::conj(w[i]);
  return out;
}

CellAssignment gauge_transform(const CellComplex& c, const CellAssignment& w,
                               const std::vector<std::complex<double>>& g_plus,
                               const std::vector<std::complex<double>>& h_minus) {
  CellAssignment out(w.size());
  for (int i = 0; i < c.num_cells(); ++i) {
    const auto& e = c.cell_edges[i];
    out[i] = g_plus[e.am] * std::conj(g_plus[e.an]) * std::conj(h_minus[e.bm]) *
             h_minus[e.bn] * w[i];
  }
  return out;
}

CellAssignment random_gauge_transform(const CellComplex& c, const CellAssignment& w,
                                      std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  auto phases = [&](std::size_t n) {
    std::vector<std::complex<double>> v(n);
    for (auto& z : v) z = std::polar(1.0, angle(rng));
    return v;
  };
  return gauge_transform(c, w, phases(c.plus_edges.size()), phases(c.minus_edges.size()));
}

double modulus_seed(const CellComplex& c, int cell) {
  // 1x1 unitarity block forces |W| = 1; a 1x1 renormalized block forces
  // |W| = 1/rho; otherwise scale to the block size.
  int ab_size = 0;
  for (const auto& blk : c.unitarity_blocks)
    for (const auto& row : blk.cell_ids)
      for (int id : row)
        if (id == cell) ab_size = blk.rows();
  if (ab_size == 1) return 1.0;
  bool mn_1x1 = false;
  for (const auto& blk : c.renorm_blocks)
    if (blk.rows() == 1 && blk.cols() == 1 && blk.cell_ids[0][0] == cell) mn_1x1 = true;
  if (mn_1x1) return static_cast<double>(1.0L / c.rho[cell]);
  return 1.0 / std::sqrt(static_cast<double>(std::max(1, ab_size)));
}

}  // namespace pg5
