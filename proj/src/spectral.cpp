#include "pg5/spectral.hpp"

#include <Eigen/Dense>

namespace pg5 {
namespace {

// Plain nested vectors for the exact integer matrices: boost's cpp_int has a
// constructor template that is not SFINAE-safe against Eigen expression types,
// so bignum matrices stay out of Eigen. Sizes here are at most ~16.
using IntMatrix = std::vector<std::vector<BigInt>>;

IntMatrix int_matmul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix out(n, std::vector<BigInt>(m, BigInt(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

/// Even-part Gram matrix M M^T, M the (even x odd) adjacency block.
IntMatrix even_gram(const Bigraph& g) {
  std::vector<VertexRef> evens, odds;
  for (int d = 0; d <= g.max_depth(); ++d)
    for (int v = 0; v < g.layer_size(d); ++v)
      (d % 2 == 0 ? evens : odds).push_back({d, v});
  IntMatrix m(evens.size(), std::vector<BigInt>(odds.size(), BigInt(0)));
  IntMatrix mt(odds.size(), std::vector<BigInt>(evens.size(), BigInt(0)));
  for (std::size_t i = 0; i < evens.size(); ++i)
    for (std::size_t j = 0; j < odds.size(); ++j) {
      const auto [ed, ev] = evens[i];
      const auto [od, ov] = odds[j];
      BigInt mult(0);
      if (od == ed + 1) mult = g.mult(od, ov, ev);
      else if (od == ed - 1) mult = g.mult(ed, ev, ov);
      m[i][j] = mult;
      mt[j][i] = mult;
    }
  return int_matmul(m, mt);
}

/// Integer Faddeev-LeVerrier characteristic polynomial of a square matrix.
Poly char_poly(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  IntMatrix m(n, std::vector<BigInt>(n, BigInt(0)));
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
    m = int_matmul(a, m);
    BigInt tr(0);
    for (int i = 0; i < n; ++i) tr += m[i][i];
    BigInt q, r;
    boost::multiprecision::divide_qr(-tr, BigInt(k), q, r);
    if (!r.is_zero()) throw std::logic_error("char_poly: non-exact LeVerrier division");
    c[n - k] = q;
  }
  std::vector<Rational> coeffs(n + 1);
  for (int i = 0; i <= n; ++i) coeffs[i] = Rational(c[i]);
  return Poly(std::move(coeffs));
}

}  // namespace

SpectralData norm_squared(const Bigraph& g, std::optional<BigInt> target) {
  SpectralData out;
  out.char_poly = char_poly(even_gram(g));
  const Poly& p = out.char_poly;

  const Rational width(1, BigInt(1) << 40);
  if (target) {
    const Rational t(*target);
    if (p.eval(t).is_zero() && p.roots_greater_than(t) == 0) {
      out.exact_target = *target;
      out.exact_root = t;
      out.multiplicity = p.root_multiplicity(t);
      // Pick an enclosure containing no other root, for the sign-change certificate.
      Rational d(1, 2);
      Poly rest;
      p.root_multiplicity(t, &rest);
      while (rest.degree() >= 1 &&
             (rest.roots_greater_than(t - d) - rest.roots_greater_than(t + d)) > 0)
        d /= 2;
      out.interval_lo = t - d;
      out.interval_hi = t + d;
      return out;
    }
  }
  RootEnclosure enc = isolate_largest_root(p, width);
  out.interval_lo = enc.lo;
  out.interval_hi = enc.hi;
  out.exact_root = enc.exact;
  out.multiplicity = enc.multiplicity;
  return out;
}

bool norms_agree(const BigraphPair& p) {
  const SpectralData sp = norm_squared(p.plus);
  const SpectralData sm = norm_squared(p.minus);
  if (sp.exact_root && sm.exact_root) return *sp.exact_root == *sm.exact_root;
  const Poly g = Poly::gcd(sp.char_poly, sm.char_poly);
  if (g.degree() < 1) return false;
  auto root_of_g_inside = [&g](const Rational& lo, const Rational& hi) {
    return g.roots_greater_than(lo) - g.roots_greater_than(hi) == 1;
  };
  // Each isolating interval holds exactly one root of its own polynomial, so a
  // gcd root inside it must be that root; a gcd root in both means the largest
  // roots are common roots, hence each bounds the other.
  return root_of_g_inside(sp.interval_lo, sp.interval_hi) &&
         root_of_g_inside(sm.interval_lo, sm.interval_hi);
}

DimensionVector dimension_vector(const Bigraph& g, const QSqrt5& delta) {
  using Mat = Eigen::Matrix<QSqrt5, Eigen::Dynamic, Eigen::Dynamic>;
  const int n = g.total_vertices();
  Mat a = adjacency_matrix<QSqrt5>(g);
  // System rows: delta * x_v - sum_u A(v,u) x_u = 0, with x_0 (star) = 1 moved
  // to the right-hand side. Unknowns are x_1..x_{n-1}.
  Mat sys(n, n);  // last column is the RHS: with B = delta*I - A, rhs = -B(:,0)
  for (int v = 0; v < n; ++v) {
    for (int u = 1; u < n; ++u) {
      QSqrt5 val = QSqrt5(0) - a(v, u);
      if (u == v) val += delta;
      sys(v, u - 1) = val;
    }
    QSqrt5 b0 = QSqrt5(0) - a(v, 0);
    if (v == 0) b0 += delta;
    sys(v, n - 1) = QSqrt5(0) - b0;
  }

  // Exact Gaussian elimination with simple nonzero pivoting.
  const int cols = n - 1;
  int rank = 0;
  for (int col = 0; col < cols && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r)
      if (!sys(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = col; c <= cols; ++c) std::swap(sys(pivot, c), sys(rank, c));
    const QSqrt5 pv = sys(rank, col);
    for (int c = col; c <= cols; ++c) sys(rank, c) /= pv;
    for (int r = 0; r < n; ++r) {
      if (r == rank || sys(r, col).is_zero()) continue;
      const QSqrt5 f = sys(r, col);
      for (int c = col; c <= cols; ++c) sys(r, c) -= f * sys(rank, c);
    }
    ++rank;
  }
  for (int r = rank; r < n; ++r)
    if (!sys(r, cols).is_zero())
      throw InconsistentSystemError(
          "dimension system inconsistent: delta is not the exact norm of the graph");
  if (rank != cols)
    throw std::logic_error("dimension system underdetermined (norm eigenvalue not simple?)");

  std::vector<QSqrt5> x(n);
  x[0] = QSqrt5(1);
  for (int r = 0; r < rank; ++r) {
    int lead = -1;
    for (int c = 0; c < cols; ++c)
      if (!sys(r, c).is_zero()) {
        lead = c;
        break;
      }
    x[lead + 1] = sys(r, cols);
  }

  std::vector<std::vector<QSqrt5>> by_depth(g.max_depth() + 1);
  int at = 0;
  for (int d = 0; d <= g.max_depth(); ++d) {
    by_depth[d].resize(g.layer_size(d));
    for (int v = 0; v < g.layer_size(d); ++v) by_depth[d][v] = x[at++];
  }
  for (const auto& layer : by_depth)
    for (const auto& val : layer)
      if (val.sign() <= 0)
        throw std::logic_error("dimension vector has a non-positive entry (internal error)");
  return DimensionVector(std::move(by_depth));
}

int supertransitivity(const Bigraph& g) {
  int n = 0;
  for (int d = 1; d <= g.max_depth(); ++d) {
    if (g.layer_size(d) != 1 || g.row(d, 0).size() != 1 || g.mult(d, 0, 0) != 1) break;
    n = d;
  }
  return n;
}

std::optional<QSqrt5> exact_delta(const Bigraph& g) {
  // A rational largest root of the monic integer polynomial is an integer,
  // and root isolation reports those exactly.
  const SpectralData s = norm_squared(g);
  if (!s.exact_root) return std::nullopt;
  return sqrt_in_qsqrt5(*s.exact_root);
}

}  // namespace pg5
