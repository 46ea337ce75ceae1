#include <doctest.h>

#include <random>

#include "pg5/catalog.hpp"
#include "pg5/graph_ops.hpp"
#include "pg5/isomorphism.hpp"
#include "pg5/spectral.hpp"

using namespace pg5;

TEST_CASE("star profiles") {
  const auto p5521 = star_profile(find_entry("Gamma_5521")->pair().plus);
  REQUIRE(p5521.has_value());
  CHECK(p5521->arms == std::vector<int>{1, 2, 5, 5});
  CHECK(p5521->star_arm == 5);
  CHECK(p5521->star_on_longest);

  const auto p2222 = star_profile(find_entry("Z4-F5")->pair().plus);
  REQUIRE(p2222.has_value());
  CHECK(p2222->arms == std::vector<int>{2, 2, 2, 2});
  CHECK(p2222->star_arm == 2);

  // Contains a vertex with two parents: not a tree, so no star shape.
  CHECK(!star_profile(find_entry("S4-S5")->pair().plus).has_value());

  const auto p4621 = star_profile(find_entry("Gamma_4621")->pair().plus);
  REQUIRE(p4621.has_value());
  CHECK(p4621->arms == std::vector<int>{1, 2, 4, 6});
  CHECK(p4621->star_arm == 4);
  CHECK(!p4621->star_on_longest);
}

TEST_CASE("spoke detection") {
  const auto spoke = spoke_2n_params(find_entry("G_12")->pair().plus);
  REQUIRE(spoke.has_value());
  CHECK(spoke->n == 4);
  CHECK(spoke->q == 5);
  CHECK(!spoke_2n_params(find_entry("A4-A5")->pair().plus).has_value());
  // A 2^5 spoke.
  const Bigraph s5 = parse_bigraph(
      "bwd1v1v1p1p1p1v1x0x0x0p0x1x0x0p0x0x1x0p0x0x0x1duals1v1v1x2x3x4");
  const auto sp5 = spoke_2n_params(s5);
  REQUIRE(sp5.has_value());
  CHECK(sp5->n == 5);
  CHECK(sp5->q == 6);
}

TEST_CASE("translate") {
  const BigraphPair z5 = find_entry("Z5")->pair();
  CHECK(translate(z5, 0) == z5);
  const BigraphPair t2 = translate(z5, 2);
  CHECK(supertransitivity(t2.plus) == 3);
  CHECK(t2.plus.total_vertices() == z5.plus.total_vertices() + 2);
  t2.plus.validate();
  CHECK_THROWS_AS(translate(z5, 1), std::invalid_argument);
  CHECK_THROWS_AS(translate(z5, -2), std::invalid_argument);

  const BigraphPair g4621 = find_entry("Gamma_4621")->pair();
  const auto prof = star_profile(translate(g4621, 2).plus);
  REQUIRE(prof.has_value());
  CHECK(prof->arms == std::vector<int>{1, 2, 6, 6});

  // Composition law.
  CHECK(translate(translate(g4621, 2), 2) == translate(g4621, 4));
}

TEST_CASE("stability predicate") {
  const Bigraph g = find_entry("Gamma_4621")->pair().plus;
  CHECK(!stable_at_depth(g, 4));  // the center meets three depth-5 vertices
  CHECK(stable_at_depth(g, 5));
  CHECK(stable_at_depth(g, 8));
  const Bigraph path = parse_bigraph("bwd1v1v1duals1v1");
  for (int n = 0; n < path.max_depth(); ++n) CHECK(stable_at_depth(path, n));
}

TEST_CASE("stable extensions of the cylinder") {
  const BigraphPair g4621 = find_entry("Gamma_4621")->pair();
  const auto none = stable_extensions(g4621, 0);
  REQUIRE(none.size() == 1);
  CHECK(none[0] == g4621);

  const auto one = stable_extensions(g4621, 1);
  REQUIRE(one.size() == 2);  // unchanged, and the single deepest vertex sprouting
  bool found_4721 = false;
  for (const auto& member : one) {
    const auto prof = star_profile(member.plus);
    REQUIRE(prof.has_value());
    if (prof->arms == std::vector<int>{1, 2, 4, 7}) found_4721 = true;
  }
  CHECK(found_4721);

  // Every appended depth is stable, in both graphs.
  for (int budget : {2, 3}) {
    for (const auto& member : stable_extensions(g4621, budget)) {
      member.plus.validate();
      member.minus.validate();
      for (int n = g4621.plus.max_depth(); n < member.plus.max_depth(); ++n)
        CHECK(stable_at_depth(member.plus, n));
    }
  }
}

TEST_CASE("translated stable extensions are 4-stars S(a,b,2,1) with a,b > 2") {
  const BigraphPair g4621 = find_entry("Gamma_4621")->pair();
  const auto family = cylinder_family(g4621, 4);
  CHECK(family.size() == 9);
  for (const auto& member : family) {
    const auto prof = star_profile(member.plus);
    REQUIRE(prof.has_value());
    REQUIRE(prof->is_4star());
    CHECK(prof->arms[0] == 1);
    CHECK(prof->arms[1] == 2);
    CHECK(prof->arms[2] > 2);
    CHECK(prof->arms[3] > 2);
  }
}

TEST_CASE("extensions branch when the deepest layer has several vertices") {
  const BigraphPair affine = find_entry("Z4-F5")->pair();  // three deepest tips, duals (1 2)
  const auto exts = stable_extensions(affine, 1);
  // Sprouting subsets of tips on each side plus the chain matching, counted up
  // to the pair automorphism exchanging tips 1 and 2: 1 + 5 + 10 + 4.
  CHECK(exts.size() == 20);
  for (const auto& member : exts)
    for (int n = 4; n < member.plus.max_depth(); ++n) CHECK(stable_at_depth(member.plus, n));
}

TEST_CASE("star profile is relabeling invariant") {
  std::mt19937_64 rng(5);
  for (const char* name : {"Gamma_5521", "Z4-F5", "Gamma_4621"}) {
    const BigraphPair p = find_entry(name)->pair();
    const auto base = star_profile(p.plus);
    for (int trial = 0; trial < 4; ++trial) {
      const auto relabeled = star_profile(random_relabel(p, rng).plus);
      REQUIRE(relabeled.has_value());
      CHECK(relabeled->arms == base->arms);
      CHECK(relabeled->star_arm == base->star_arm);
    }
  }
}
