#include <doctest.h>

#include <random>

#include "pg5/bigraph.hpp"
#include "pg5/catalog.hpp"
#include "pg5/isomorphism.hpp"
#include "pg5/spectral.hpp"

using namespace pg5;

TEST_CASE("decode of the cyclic-group graph") {
  const Bigraph g = parse_bigraph("bwd1v1p1p1p1duals1v4x3x2x1");
  CHECK(g.max_depth() == 2);
  CHECK(g.layer_size(0) == 1);
  CHECK(g.layer_size(1) == 1);
  CHECK(g.layer_size(2) == 4);
  for (int v = 0; v < 4; ++v) CHECK(g.mult(2, v, 0) == 1);
  // depth-2 duals (1 4)(2 3)
  CHECK(g.dual_of(2, 0) == 3);
  CHECK(g.dual_of(2, 1) == 2);
  CHECK(g.dual_of(2, 2) == 1);
  CHECK(g.dual_of(2, 3) == 0);
}

TEST_CASE("minimal graph") {
  const Bigraph g = parse_bigraph("bwd1duals1");
  CHECK(g.max_depth() == 1);
  CHECK(g.total_vertices() == 2);
  CHECK(serialize_bigraph(g) == "bwd1duals1");
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_bigraph("bwd1v2x1duals1v1"), ValidationError);  // row-length mismatch
  CHECK_THROWS_AS(parse_bigraph("xyz1duals1"), ParseError);
  CHECK_THROWS_AS(parse_bigraph("bwd1v1p1"), ParseError);               // missing duals
  CHECK_THROWS_AS(parse_bigraph("bwd1vduals1"), ParseError);            // empty layer
  CHECK_THROWS_AS(parse_bigraph("bwd1duals2"), ValidationError);        // dual out of range
  CHECK_THROWS_AS(parse_bigraph("bwd1v1p1p1p1duals1v4x3x2x2"), ValidationError);  // not a permutation
  CHECK_THROWS_AS(parse_bigraph("bwd1v1p1p1p1duals1v2x3x4x1"), ValidationError);  // not an involution
  CHECK_THROWS_AS(parse_bigraph("bwd1v1p1p1p1duals1v4x3x2"), ValidationError);    // wrong dual length
}

TEST_CASE("round trip over every embedded string") {
  int embedded = 0;
  for (const auto& entry : catalog_entries()) {
    for (const std::string& s : {entry.plus, entry.minus}) {
      const Bigraph g = parse_bigraph(s);
      CHECK(serialize_bigraph(g) == s);
      ++embedded;
    }
  }
  CHECK(embedded >= 30);  // 23 pairs embed 46 graph strings
}

TEST_CASE("round trip of a named string") {
  const std::string s = "bwd1v1p1v1x1v1duals1v1x2v1";
  CHECK(serialize_bigraph(parse_bigraph(s)) == s);
}

TEST_CASE("pair construction") {
  const Bigraph z5 = parse_bigraph("bwd1v1p1p1p1duals1v4x3x2x1");
  const Bigraph d10 = parse_bigraph("bwd1v1p1v1x1v1duals1v1x2v1");
  CHECK_NOTHROW(make_pair(z5, z5));
  CHECK_THROWS_AS(make_pair(z5, d10), ValidationError);  // odd-layer counts differ

  const CatalogEntry* a45 = find_entry("A4-A5");
  const BigraphPair p = a45->pair();
  CHECK(norm_squared(p.plus, BigInt(5)).exact_target.has_value());
  CHECK(norm_squared(p.minus, BigInt(5)).exact_target.has_value());
  CHECK(norms_agree(p));
}

TEST_CASE("opposite") {
  const BigraphPair p = find_entry("A4-A5")->pair();
  CHECK(opposite(opposite(p)) == p);
  CHECK(!pair_isomorphic(p, opposite(p), false).has_value());
  CHECK(pair_isomorphic(p, opposite(p), true).has_value());
  const BigraphPair z5 = find_entry("Z5")->pair();
  CHECK(pair_isomorphic(z5, opposite(z5), false).has_value());
}

TEST_CASE("isomorphism against the affine pair") {
  const BigraphPair affine = find_entry("Z4-F5")->pair();
  const BigraphPair g13 = find_entry("G_13")->pair();
  const BigraphPair g12 = find_entry("G_12")->pair();
  const auto iso = pair_isomorphic(g13, affine, true);
  REQUIRE(iso.has_value());
  // Witness verifies: relabeling the source yields the target exactly.
  const BigraphPair target = iso->swapped ? opposite(affine) : affine;
  CHECK(apply_iso(g13, *iso) == target);
  CHECK(!pair_isomorphic(g12, affine, true).has_value());
}

TEST_CASE("identity isomorphism and relabeling invariance") {
  std::mt19937_64 rng(2024);
  for (const char* name : {"A4-A5", "S4-S5", "G_6", "G_10", "Z5"}) {
    const BigraphPair p = find_entry(name)->pair();
    const auto self_iso = pair_isomorphic(p, p, false);
    REQUIRE(self_iso.has_value());
    CHECK(apply_iso(p, *self_iso) == p);
    for (const auto& perms : {self_iso->plus, self_iso->minus})
      for (const auto& perm : perms)
        for (int i = 0; i < static_cast<int>(perm.size()); ++i) CHECK(perm[i] == i);
    for (int trial = 0; trial < 5; ++trial) {
      const BigraphPair q = random_relabel(p, rng);
      q.plus.validate();
      q.minus.validate();
      const auto iso = pair_isomorphic(p, q, false);
      REQUIRE(iso.has_value());
      CHECK(apply_iso(p, *iso) == q);
      // Symmetric direction also holds.
      CHECK(pair_isomorphic(q, p, false).has_value());
    }
  }
}
