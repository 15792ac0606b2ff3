#include <gtest/gtest.h>

#include "sglue/constructions.hpp"
#include "sglue/enumerate.hpp"

using namespace sglue;

TEST(Constructions, NamedLattices) {
  EXPECT_EQ(chain(3).size(), 4u);
  EXPECT_EQ(chain(3).length(), 3);
  EXPECT_EQ(boolean(3).size(), 8u);
  EXPECT_EQ(boolean(0).size(), 1u);
  EXPECT_EQ(mn(4).size(), 6u);
  EXPECT_EQ(mn(4).atoms().size(), 4u);
  EXPECT_EQ(grid(2, 3).size(), 12u);
  const auto F = fano();
  EXPECT_EQ(F.size(), 16u);
  EXPECT_EQ(F.atoms().size(), 7u);
  EXPECT_EQ(F.coatoms().size(), 7u);
  EXPECT_EQ(F.length(), 3);
  EXPECT_TRUE(is_modular(F));
  // Any two points span exactly one line.
  for (Elem p : F.atoms())
    for (Elem q : F.atoms())
      if (p != q) {
        EXPECT_EQ(F.height(F.join(p, q)), 2);
      }
}

TEST(Constructions, ManifestsHold) {
  for (const auto& f : glued_fixtures()) {
    SCOPED_TRACE(f.name);
    const auto& m = f.expect;
    const auto v = validate(f.system);
    if (m.valid) {
      EXPECT_EQ(v.empty(), *m.valid);
    }
    if (m.violated_axiom) {
      ASSERT_FALSE(v.empty());
      EXPECT_EQ(std::string(to_string(v.front().axiom)), *m.violated_axiom);
    }
    if (!v.empty()) continue;
    const auto M = sum(f.system);
    if (m.strictly_monotone) {
      EXPECT_EQ(is_monotone_strict(f.system), *m.strictly_monotone);
    }
    if (m.zero_injective) {
      EXPECT_EQ(zero_one_maps(f.system).zero_injective, *m.zero_injective);
    }
    if (m.modular_sum) {
      EXPECT_EQ(is_modular(M), *m.modular_sum);
    }
    if (m.distributive_sum) {
      EXPECT_EQ(is_distributive(M), *m.distributive_sum);
    }
    if (m.simple_sum) {
      EXPECT_EQ(is_simple(M), *m.simple_sum);
    }
    if (m.sum_size) {
      EXPECT_EQ(static_cast<int>(M.size()), *m.sum_size);
    }
    if (m.sum_length) {
      EXPECT_EQ(M.length(), *m.sum_length);
    }
    if (m.sum_breadth) {
      EXPECT_EQ(breadth(M), *m.sum_breadth);
    }
    if (m.skeleton_length) {
      EXPECT_EQ(f.system.skeleton.length(), *m.skeleton_length);
    }
  }
}

TEST(Constructions, FixtureLookup) {
  EXPECT_TRUE(find_glued_fixture("squares_3x3").has_value());
  EXPECT_EQ(find_glued_fixture("unbounded_7")->system.skeleton.size(), 9u);
  EXPECT_EQ(find_glued_fixture("m3_chain_5")->system.blocks.size(), 5u);
  EXPECT_FALSE(find_glued_fixture("nothing").has_value());
  EXPECT_FALSE(find_glued_fixture("unbounded_x").has_value());
}

TEST(Constructions, DistributiveWithPrescribedSkeleton) {
  for (const auto& S : enumerate_lattices(5)) {
    const auto c = distributive_with_skeleton(S);
    EXPECT_TRUE(is_valid(c.system));
    EXPECT_TRUE(is_distributive(c.lattice));
    EXPECT_TRUE(isomorphic(skeleton_lattice(c.lattice), S));
  }
  EXPECT_THROW(distributive_with_skeleton(boolean(5)), LatticeError);
}

TEST(Constructions, SquareSublattice) {
  const auto c = square_sublattice(m3());
  EXPECT_TRUE(is_valid(c.system));
  EXPECT_TRUE(is_modular(c.lattice));
  EXPECT_TRUE(isomorphic(skeleton_lattice(c.lattice), m3()));
  EXPECT_EQ(c.skeleton_embedding.size(), 5u);
  EXPECT_THROW(square_sublattice(n5()), LatticeError);
}

TEST(Constructions, ProjectivePlaneExample) {
  const auto f = projective_glued();
  const auto M = sum(f.system);
  EXPECT_EQ(M.size(), 36u);
  EXPECT_EQ(M.length(), 6);
  EXPECT_EQ(breadth(M), 3);
  EXPECT_TRUE(is_modular(M));
  EXPECT_TRUE(is_simple(M));
  std::vector<Elem> gens;
  for (const auto& n : projective_generators()) gens.push_back(M.at(n));
  EXPECT_EQ(generated_sublattice(M, gens).size(), M.size());
  // Four generators are not enough.
  gens.pop_back();
  EXPECT_LT(generated_sublattice(M, gens).size(), M.size());
}
