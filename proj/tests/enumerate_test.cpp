#include <gtest/gtest.h>

#include "sglue/enumerate.hpp"
#include "sglue/oracles.hpp"
#include "sglue/predicates.hpp"

using namespace sglue;

TEST(Enumerate, Counts) {
  const std::size_t expected[] = {0, 1, 1, 1, 2, 5, 15, 53};
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(enumerate_lattices_of_size(n).size(), expected[n]) << n;
  EXPECT_EQ(enumerate_lattices(7).size(), 78u);
  EXPECT_TRUE(enumerate_lattices_of_size(0).empty());
}

TEST(Enumerate, EightElements) { EXPECT_EQ(enumerate_lattices_of_size(8).size(), 222u); }

TEST(Enumerate, Limit) {
  EXPECT_THROW(enumerate_lattices(9), LatticeError);
  EXPECT_THROW(enumerate_lattices_of_size(9), LatticeError);
}

TEST(Enumerate, PairwiseNonIsomorphic) {
  for (int n = 1; n <= 7; ++n) {
    const auto L = enumerate_lattices_of_size(n);
    for (std::size_t i = 0; i < L.size(); ++i)
      for (std::size_t j = i + 1; j < L.size(); ++j) EXPECT_FALSE(isomorphic(L[i], L[j]));
  }
}

TEST(Enumerate, NaiveFilterAgrees) {
  for (int n = 1; n <= 5; ++n) {
    const auto naive = oracle::naive_lattices(n);
    const auto fast = enumerate_lattices_of_size(n);
    ASSERT_EQ(naive.size(), fast.size()) << n;
    for (const auto& L : naive)
      EXPECT_TRUE(std::any_of(fast.begin(), fast.end(), [&](const FiniteLattice& F) { return isomorphic(F, L); }));
  }
}

TEST(Enumerate, ModularAndDistributiveCounts) {
  // Up to 7 elements: 1,1,1,2,4,8,16 modular and 1,1,1,2,3,5,8 distributive.
  const std::size_t modular[] = {0, 1, 1, 1, 2, 4, 8, 16};
  const std::size_t distributive[] = {0, 1, 1, 1, 2, 3, 5, 8};
  for (int n = 1; n <= 7; ++n) {
    const auto L = enumerate_lattices_of_size(n);
    EXPECT_EQ(static_cast<std::size_t>(std::count_if(L.begin(), L.end(), is_modular)), modular[n]) << n;
    EXPECT_EQ(static_cast<std::size_t>(std::count_if(L.begin(), L.end(), is_distributive)), distributive[n]) << n;
  }
}
