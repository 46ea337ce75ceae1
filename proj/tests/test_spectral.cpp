#include <doctest.h>

#include <random>

#include "pg5/catalog.hpp"
#include "pg5/isomorphism.hpp"
#include "pg5/spectral.hpp"

using namespace pg5;

namespace {

const QSqrt5 kSqrt5 = QSqrt5::sqrt5();

/// Independent oracle: a dimension claim is verified against the defining
/// eigen-equations directly, exactly, at every vertex.
void check_eigen_equations(const Bigraph& g, const DimensionVector& dims, const QSqrt5& delta) {
  for (int d = 0; d <= g.max_depth(); ++d)
    for (int v = 0; v < g.layer_size(d); ++v) {
      QSqrt5 acc(0);
      for (const VertexRef u : g.neighbors({d, v})) {
        const int m = u.depth == d + 1 ? g.mult(u.depth, u.index, v) : g.mult(d, v, u.index);
        acc += QSqrt5(m) * dims.at(u);
      }
      CHECK(delta * dims.at({d, v}) == acc);
    }
  CHECK(dims.at({0, 0}) == QSqrt5(1));
}

}  // namespace

TEST_CASE("characteristic polynomial of the A4 < A5 principal graph") {
  const Bigraph g = parse_bigraph("bwd1v1v1v1p1p1v0x0x1p0x0x1duals1v1v1x2x3");
  const SpectralData s = norm_squared(g, BigInt(5));
  // mu^2 * (mu^3 - 8 mu^2 + 17 mu - 10)
  std::vector<Rational> expect{0, 0, -10, 17, -8, 1};
  CHECK(s.char_poly.coeffs() == expect);
  REQUIRE(s.exact_target.has_value());
  CHECK(*s.exact_target == 5);
  CHECK(s.multiplicity == 1);
  // Sign change across the isolating interval with no other root inside.
  CHECK(sign(s.char_poly.eval(s.interval_lo)) * sign(s.char_poly.eval(s.interval_hi)) < 0);
}

TEST_CASE("norms of the small graphs") {
  const SpectralData one = norm_squared(parse_bigraph("bwd1duals1"));
  REQUIRE(one.exact_root.has_value());
  CHECK(*one.exact_root == Rational(1));

  const SpectralData five = norm_squared(parse_bigraph("bwd1v1p1p1p1duals1v4x3x2x1"), BigInt(5));
  REQUIRE(five.exact_target.has_value());
  CHECK(*five.exact_target == 5);
}

TEST_CASE("norm advisory agrees on every catalog pair") {
  for (const auto& entry : catalog_entries()) CHECK(norms_agree(entry.pair()));
}

TEST_CASE("dimension vector of the dihedral graph") {
  const Bigraph g = parse_bigraph("bwd1v1p1v1x1v1duals1v1x2v1");
  const DimensionVector dims = dimension_vector(g, kSqrt5);
  check_eigen_equations(g, dims, kSqrt5);
  CHECK(dims.at({0, 0}) == QSqrt5(1));
  CHECK(dims.at({1, 0}) == kSqrt5);
  CHECK(dims.at({2, 0}) == QSqrt5(2));
  CHECK(dims.at({2, 1}) == QSqrt5(2));
  CHECK(dims.at({3, 0}) == kSqrt5);
  CHECK(dims.at({4, 0}) == QSqrt5(1));
}

TEST_CASE("dimension spot values used by the eliminations") {
  const Bigraph g1 = parse_bigraph("bwd1v1v1p1v1x0p1x0p1x0p0x1duals1v1v4x2x3x1");
  const DimensionVector d1 = dimension_vector(g1, kSqrt5);
  check_eigen_equations(g1, d1, kSqrt5);
  CHECK(d1.at({4, 0}) == QSqrt5(2));
  CHECK(d1.at({4, 1}) == QSqrt5(2));
  CHECK(d1.at({4, 2}) == QSqrt5(2));
  CHECK(d1.at({4, 3}) == QSqrt5(1));

  const Bigraph g6 = parse_bigraph("bwd1v1v1v1p1p1v1x0x0p1x0x0duals1v1v1x2x3");
  const DimensionVector d6 = dimension_vector(g6, kSqrt5);
  check_eigen_equations(g6, d6, kSqrt5);
  CHECK(d6.at({2, 0}) == QSqrt5(4));
  CHECK(d6.at({4, 0}) == QSqrt5(5));  // the branch vertex carrying both pendants
  CHECK(d6.at({4, 1}) == QSqrt5(3));
  CHECK(d6.at({4, 2}) == QSqrt5(3));

  const Bigraph g14 = parse_bigraph("bwd1v1v1p1p1v1x0x0p0x1x0v1x0p1x0duals1v1v1x2");
  const DimensionVector d14 = dimension_vector(g14, kSqrt5);
  check_eigen_equations(g14, d14, kSqrt5);
  const QSqrt5 two_over_sqrt5 = QSqrt5(2) / kSqrt5;
  CHECK(d14.at({5, 0}) == two_over_sqrt5);
  CHECK(d14.at({5, 1}) == two_over_sqrt5);
  CHECK(two_over_sqrt5 < QSqrt5(1));
}

TEST_CASE("wrong delta is rejected exactly") {
  const Bigraph g = parse_bigraph("bwd1v1p1v1x1v1duals1v1x2v1");
  CHECK_THROWS_AS(dimension_vector(g, QSqrt5(2)), InconsistentSystemError);
}

TEST_CASE("odd-layer dimensions agree across realized pairs") {
  for (const auto& name : canonical_names()) {
    const BigraphPair p = find_entry(name)->pair();
    const DimensionVector dp = dimension_vector(p.plus, kSqrt5);
    const DimensionVector dm = dimension_vector(p.minus, kSqrt5);
    const int top = std::max(p.plus.max_depth(), p.minus.max_depth());
    for (int d = 1; d <= top; d += 2)
      for (int v = 0; v < p.plus.layer_size(d); ++v) CHECK(dp.at({d, v}) == dm.at({d, v}));
  }
}

TEST_CASE("supertransitivity") {
  CHECK(supertransitivity(parse_bigraph("bwd1v1p1p1p1duals1v4x3x2x1")) == 1);
  CHECK(supertransitivity(parse_bigraph("bwd1v1v1v1p1p1v0x0x1p0x0x1duals1v1v1x2x3")) == 3);
  CHECK(supertransitivity(
            parse_bigraph("bwd1v1v1v1v1v1p1p1v1x0x0p0x1x0v1x0v1v1duals1v1v1v1x2x3v1v1")) == 5);
  CHECK(supertransitivity(parse_bigraph("bwd1duals1")) == 1);
}

TEST_CASE("dimension residual is exactly zero after relabeling") {
  std::mt19937_64 rng(77);
  for (const char* name : {"G_4", "G_10", "S4-S5"}) {
    BigraphPair p = random_relabel(find_entry(name)->pair(), rng);
    const DimensionVector dims = dimension_vector(p.plus, kSqrt5);
    check_eigen_equations(p.plus, dims, kSqrt5);
  }
}

TEST_CASE("exact delta") {
  auto d5 = exact_delta(parse_bigraph("bwd1v1p1p1p1duals1v4x3x2x1"));
  REQUIRE(d5.has_value());
  CHECK(*d5 == kSqrt5);
  auto d1 = exact_delta(parse_bigraph("bwd1duals1"));
  REQUIRE(d1.has_value());
  CHECK(*d1 == QSqrt5(1));
  auto d2 = exact_delta(parse_bigraph("bwd1v1p1p1duals1v1x2x3"));  // 4-edge star, norm^2 = 4
  REQUIRE(d2.has_value());
  CHECK(*d2 == QSqrt5(2));
}
