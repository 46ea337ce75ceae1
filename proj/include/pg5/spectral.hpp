#pragma once

#include <optional>
#include <vector>

#include "pg5/bigraph.hpp"
#include "pg5/polynomial.hpp"
#include "pg5/qsqrt5.hpp"

namespace pg5 {

/// Exact spectral certificate for the squared graph norm: the integer
/// characteristic polynomial of M M^T (M the even-to-odd adjacency block) in
/// mu = lambda^2, a rational enclosure of its largest root, and, when a target
/// was supplied and confirmed, that target as the exact largest root.
struct SpectralData {
  Poly char_poly;                     // integer coefficients, monic
  Rational interval_lo, interval_hi;  // enclosure of the largest root
  std::optional<BigInt> exact_target;
  std::optional<Rational> exact_root;  // set whenever the largest root is rational
  int multiplicity = 1;

  double norm_sq_estimate() const { return to_double((interval_lo + interval_hi) / 2); }
};

/// Computes the characteristic polynomial of M M^T exactly and isolates its
/// largest root. When `target` is given, exact_target is set iff target is a
/// root and no root exceeds it (checked by exact root counting).
SpectralData norm_squared(const Bigraph& g, std::optional<BigInt> target = std::nullopt);

/// Exact equality test of the largest roots of the two graphs' polynomials.
bool norms_agree(const BigraphPair& p);

/// Per-vertex Frobenius-Perron dimensions at eigenvalue delta, star = 1.
class DimensionVector {
 public:
  DimensionVector() = default;
  explicit DimensionVector(std::vector<std::vector<QSqrt5>> by_depth)
      : by_depth_(std::move(by_depth)) {}

  const QSqrt5& at(VertexRef v) const { return by_depth_[v.depth][v.index]; }
  const std::vector<QSqrt5>& layer(int depth) const { return by_depth_[depth]; }
  int num_layers() const { return static_cast<int>(by_depth_.size()); }

 private:
  std::vector<std::vector<QSqrt5>> by_depth_;
};

class InconsistentSystemError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact solve of delta * d(v) = sum over neighbors u of mult(u,v) * d(u),
/// normalized d(star) = 1. Throws InconsistentSystemError when delta^2 is not
/// the exact squared norm; exact arithmetic, no tolerance anywhere.
DimensionVector dimension_vector(const Bigraph& g, const QSqrt5& delta);

/// Largest n such that the truncation of g to depth n is a simple path from star.
int supertransitivity(const Bigraph& g);

/// sqrt(norm^2) inside Q(sqrt5) when it exists there (norm^2 must be rational).
std::optional<QSqrt5> exact_delta(const Bigraph& g);

}  // namespace pg5
