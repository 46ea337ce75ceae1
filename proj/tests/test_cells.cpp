#include <doctest.h>

#include <random>

#include "pg5/catalog.hpp"
#include "pg5/cells.hpp"

using namespace pg5;

namespace {

BigraphPair entry_pair(const char* name) { return find_entry(name)->pair(); }

}  // namespace

TEST_CASE("cell complexes of the named pairs") {
  const CellComplex z5 = build_cells(entry_pair("Z5"));
  CHECK(z5.num_cells() == 25);
  CHECK(z5.max_unitarity_block == 1);

  const CellComplex affine = build_cells(entry_pair("Z4-F5"));
  CHECK(affine.max_unitarity_block == 4);  // both centers against all four odd vertices

  const CellComplex s45 = build_cells(entry_pair("S4-S5"));
  CHECK(s45.max_unitarity_block <= 3);
  CHECK(s45.max_renorm_block <= 3);
  CHECK(s45.num_cells() == 40);
  CHECK(s45.constant_penalty == 0.0);
}

TEST_CASE("multiplicities above one are rejected") {
  const BigraphPair doubled = parse_pair("bwd1v2duals1v1", "bwd1v2duals1v1");
  CHECK_THROWS_AS(build_cells(doubled), std::invalid_argument);
}

TEST_CASE("closed-form connection on the cyclic pair") {
  // All unitarity blocks are 1x1, forcing unit moduli; the renormalized block
  // is satisfied by discrete-Fourier phases over Z/5.
  const CellComplex c = build_cells(entry_pair("Z5"));
  CellAssignment w(c.num_cells());
  for (int i = 0; i < c.num_cells(); ++i) {
    const auto& cell = c.cells[i];
    const double angle = 2.0 * M_PI * (cell.a * cell.b) / 5.0;
    w[i] = std::polar(1.0, angle);
  }
  CHECK(residual(c, w) < 1e-12);

  // Breaking one modulus in a 1x1 block breaks unitarity.
  CellAssignment bad = w;
  bad[0] *= 2.0;
  CHECK(residual(c, bad) > 0.1);
}

TEST_CASE("gauge covariance of the residual") {
  std::mt19937_64 rng(4);
  for (const char* name : {"Z5", "Z4-F5", "S4-S5"}) {
    const CellComplex c = build_cells(entry_pair(name));
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    CellAssignment w(c.num_cells());
    for (int i = 0; i < c.num_cells(); ++i) w[i] = {unit(rng), unit(rng)};
    const double base = residual(c, w);
    for (int trial = 0; trial < 4; ++trial) {
      const CellAssignment moved = random_gauge_transform(c, w, rng);
      CHECK(std::abs(residual(c, moved) - base) <= 1e-12 * std::max(1.0, base));
    }
  }
}

TEST_CASE("renormalized transpose is an involution") {
  std::mt19937_64 rng(8);
  const CellComplex c = build_cells(entry_pair("S4-S5"));
  const CellComplex ct = transposed(c);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  CellAssignment w(c.num_cells());
  for (int i = 0; i < c.num_cells(); ++i) w[i] = {unit(rng), unit(rng)};

  const CellAssignment wt = renorm_transpose(c, w);
  const CellAssignment back = renorm_transpose(ct, wt);
  for (int i = 0; i < c.num_cells(); ++i) CHECK(std::abs(back[i] - w[i]) <= 1e-12);

  // The role swap identifies the two unitarity conditions.
  CHECK(residual(ct, wt) == doctest::Approx(residual(c, w)).epsilon(1e-12));
}

TEST_CASE("modulus seeds follow the renormalization identity") {
  const CellComplex z5 = build_cells(entry_pair("Z5"));
  for (int i = 0; i < z5.num_cells(); ++i)
    CHECK(modulus_seed(z5, i) == doctest::Approx(1.0));  // 1x1 unitarity blocks
}
