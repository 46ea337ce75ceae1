#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pg5 {

/// Reference to a vertex of a depth-graded graph: depth and position in its layer.
struct VertexRef {
  int depth = 0;
  int index = 0;
  friend bool operator==(const VertexRef&, const VertexRef&) = default;
  friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

class ValidationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One depth-graded bipartite graph with dual data on even layers.
///
/// Depth 0 holds the single star vertex. For d >= 1, row(d, v) lists the edge
/// multiplicities from vertex v at depth d to each vertex at depth d-1. Each
/// even depth carries an involutive dual permutation of its layer (0-based).
class Bigraph {
 public:
  Bigraph() = default;
  Bigraph(std::vector<std::vector<std::vector<int>>> rows,
          std::vector<std::vector<int>> duals)
      : rows_(std::move(rows)), duals_(std::move(duals)) {}

  int max_depth() const { return static_cast<int>(rows_.size()); }
  int layer_size(int depth) const {
    if (depth == 0) return 1;
    if (depth < 0 || depth > max_depth()) return 0;
    return static_cast<int>(rows_[depth - 1].size());
  }
  int total_vertices() const {
    int n = 1;
    for (const auto& layer : rows_) n += static_cast<int>(layer.size());
    return n;
  }

  /// Multiplicity between vertex v at depth d (>=1) and vertex u at depth d-1.
  int mult(int depth, int v, int u) const { return rows_[depth - 1][v][u]; }
  const std::vector<int>& row(int depth, int v) const { return rows_[depth - 1][v]; }

  int num_even_layers() const { return static_cast<int>(duals_.size()); }
  /// Dual permutation of the even layer at depth 2*k (0-based entries).
  const std::vector<int>& dual_layer(int k) const { return duals_[k]; }
  int dual_of(int even_depth, int v) const { return duals_[even_depth / 2][v]; }

  const std::vector<std::vector<std::vector<int>>>& rows() const { return rows_; }
  const std::vector<std::vector<int>>& duals() const { return duals_; }

  int degree(VertexRef v) const;
  std::vector<VertexRef> neighbors(VertexRef v) const;
  int edge_count() const;

  /// Checks every structural invariant; throws ValidationError on the first failure.
  void validate() const;

  friend bool operator==(const Bigraph&, const Bigraph&) = default;

 private:
  std::vector<std::vector<std::vector<int>>> rows_;
  std::vector<std::vector<int>> duals_;
};

/// Full bipartite adjacency matrix (rows and columns over all vertices, star
/// first, then layers in depth order), templated so exact scalar types work.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> adjacency_matrix(const Bigraph& g) {
  const int n = g.total_vertices();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a(n, n);
  a.setConstant(Scalar(0));
  std::vector<int> offset(g.max_depth() + 1, 0);
  for (int d = 1; d <= g.max_depth(); ++d) offset[d] = offset[d - 1] + g.layer_size(d - 1);
  for (int d = 1; d <= g.max_depth(); ++d)
    for (int v = 0; v < g.layer_size(d); ++v)
      for (int u = 0; u < g.layer_size(d - 1); ++u) {
        const int m = g.mult(d, v, u);
        a(offset[d] + v, offset[d - 1] + u) = Scalar(m);
        a(offset[d - 1] + u, offset[d] + v) = Scalar(m);
      }
  return a;
}

Bigraph parse_bigraph(const std::string& text);
std::string serialize_bigraph(const Bigraph& g);

/// A principal graph pair; odd-depth vertices of the two graphs are identified
/// by position within their layer.
struct BigraphPair {
  Bigraph plus;
  Bigraph minus;
  friend bool operator==(const BigraphPair&, const BigraphPair&) = default;
};

/// Structural pair construction: validates both graphs, equal odd-layer counts,
/// and max depths differing by at most one. The exact norm-agreement advisory
/// lives in spectral.hpp (norms_agree) and is reported by callers, not here.
BigraphPair make_pair(Bigraph plus, Bigraph minus);

BigraphPair parse_pair(const std::string& plus_text, const std::string& minus_text);

/// Swaps the two graphs, preserving the odd identification.
BigraphPair opposite(const BigraphPair& p);

}  // namespace pg5
