#include <gtest/gtest.h>

#include "sglue/constructions.hpp"
#include "sglue/enumerate.hpp"
#include "sglue/oracles.hpp"
#include "sglue/skeleton.hpp"

using namespace sglue;

namespace {

std::vector<FiniteLattice> modular_corpus() {
  std::vector<FiniteLattice> out;
  for (const auto& L : enumerate_lattices(7))
    if (is_modular(L)) out.push_back(L);
  out.push_back(grid(3, 3));
  out.push_back(product(m3(), chain(2)));
  out.push_back(fano());
  out.push_back(boolean(4));
  return out;
}

std::vector<std::string> names(const FiniteLattice& L, const std::vector<Elem>& es) {
  std::vector<std::string> out;
  for (Elem e : es) out.push_back(L.name(e));
  return out;
}

}  // namespace

TEST(Skeleton, StarAndPlus) {
  const auto G = grid(2, 2);
  EXPECT_EQ(G.name(star(G, G.at("(0,0)"))), "(1,1)");
  EXPECT_EQ(G.name(plus(G, G.at("(2,2)"))), "(1,1)");
  EXPECT_EQ(G.name(star(G, G.top())), "(2,2)");
  EXPECT_EQ(G.name(plus(G, G.bottom())), "(0,0)");
  EXPECT_THROW(star(n5(), 0), LatticeError);
}

TEST(Skeleton, KnownSkeletons) {
  const auto G = grid(2, 2);
  EXPECT_EQ(names(G, skeleton_set(G)), (std::vector<std::string>{"(0,0)", "(0,1)", "(1,0)", "(1,1)"}));
  EXPECT_TRUE(isomorphic(skeleton_lattice(G), boolean(2)));
  EXPECT_EQ(skeleton_set(fano()).size(), 1u);
  EXPECT_EQ(skeleton_set(boolean(3)).size(), 1u);
  EXPECT_EQ(skeleton_set(chain(4)).size(), 4u);
  EXPECT_TRUE(isomorphic(skeleton_lattice(chain(4)), chain(3)));
  EXPECT_TRUE(isomorphic(skeleton_lattice(product(m3(), chain(2))), chain(1)));
  const auto one = chain(0);
  EXPECT_EQ(skeleton_set(one).size(), 1u);
}

TEST(Skeleton, MatchesAtomisticIntervalOracle) {
  for (const auto& M : modular_corpus()) EXPECT_EQ(skeleton_set(M), oracle::maximal_atomistic_minima(M));
}

TEST(Skeleton, StarPlusIdentities) {
  for (const auto& M : modular_corpus()) {
    const auto r = star_plus_suite(M);
    EXPECT_TRUE(r.ok()) << (r.ok() ? "" : r.failures.front());
  }
}

TEST(Skeleton, Duality) {
  for (const auto& M : modular_corpus()) {
    const auto r = skeleton_duality_suite(M);
    EXPECT_TRUE(r.ok()) << (r.ok() ? "" : r.failures.front());
    EXPECT_EQ(dual_skeleton(M).size(), skeleton_set(M).size());
  }
}

TEST(Skeleton, DecomposeGivesIntervalBlocks) {
  for (const auto& M : modular_corpus()) {
    const auto d = decompose(M);
    ASSERT_EQ(d.system.blocks.size(), d.skeleton_set.size());
    for (std::size_t i = 0; i < d.skeleton_set.size(); ++i) {
      const Elem x = d.skeleton_set[i];
      const auto& B = d.system.blocks[i];
      EXPECT_EQ(B.name(B.bottom()), M.name(x));
      EXPECT_EQ(B.name(B.top()), M.name(star(M, x)));
      EXPECT_TRUE(is_atomistic(B));
    }
    EXPECT_TRUE(is_valid(d.system));
    EXPECT_TRUE(is_monotone_strict(d.system));
    EXPECT_TRUE(roundtrip(M));
  }
}

TEST(Skeleton, DecomposeRejectsNonModular) {
  try {
    decompose(n5());
    FAIL();
  } catch (const LatticeError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotModular);
  }
}

TEST(Skeleton, BreadthAndDistributivityFollowTheBlocks) {
  for (const auto& M : modular_corpus())
    for (int n = 1; n <= 3; ++n) {
      const auto r = block_bound_suite(M, n);
      EXPECT_TRUE(r.ok()) << (r.ok() ? "" : r.failures.front());
    }
}

TEST(Skeleton, SumOfGluedFixturesKeepsItsSkeletonWhenStrict) {
  // Strictly monotone systems of atomistic blocks recover their skeleton.
  for (const auto& name : {"squares_3x3", "m3_chain_3", "projective"}) {
    const auto f = *find_glued_fixture(name);
    const auto M = sum(f.system);
    EXPECT_TRUE(isomorphic(skeleton_lattice(M), f.system.skeleton)) << name;
  }
}
