#include <gtest/gtest.h>

#include "sglue/constructions.hpp"
#include "sglue/enumerate.hpp"
#include "sglue/oracles.hpp"
#include "sglue/predicates.hpp"

using namespace sglue;

namespace {

bool brute_modular(const FiniteLattice& L) {
  for (Elem a = 0; a < L.size(); ++a)
    for (Elem b = 0; b < L.size(); ++b)
      for (Elem c = 0; c < L.size(); ++c)
        if (L.leq(a, c) && L.join(a, L.meet(b, c)) != L.meet(L.join(a, b), c)) return false;
  return true;
}

bool brute_distributive(const FiniteLattice& L) {
  for (Elem a = 0; a < L.size(); ++a)
    for (Elem b = 0; b < L.size(); ++b)
      for (Elem c = 0; c < L.size(); ++c)
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) return false;
  return true;
}

}  // namespace

TEST(Predicates, NamedLattices) {
  EXPECT_TRUE(is_modular(m3()));
  EXPECT_FALSE(is_distributive(m3()));
  EXPECT_FALSE(is_modular(n5()));
  EXPECT_FALSE(is_semimodular(n5()));
  EXPECT_FALSE(is_dual_semimodular(n5()));
  EXPECT_TRUE(is_distributive(grid(2, 3)));
  EXPECT_TRUE(is_atomistic(fano()));
  EXPECT_TRUE(is_coatomistic(fano()));
  EXPECT_FALSE(is_atomistic(chain(2)));
  EXPECT_TRUE(is_atomistic(boolean(3)));
}

TEST(Predicates, AgreeWithBruteForceOnCorpus) {
  for (const auto& L : enumerate_lattices(7)) {
    EXPECT_EQ(is_modular(L), brute_modular(L));
    EXPECT_EQ(is_distributive(L), brute_distributive(L));
    EXPECT_EQ(is_modular(L), is_semimodular(L) && is_dual_semimodular(L));
  }
}

TEST(Predicates, SemimodularButNotModular) {
  // Atoms a, b and coatoms p, q, r with a < p, q and b < q, r.
  const auto L = FiniteLattice::from_covers(
      {"0", "a", "b", "p", "q", "r", "1"},
      {{"0", "a"}, {"0", "b"}, {"a", "p"}, {"a", "q"}, {"b", "q"}, {"b", "r"}, {"p", "1"}, {"q", "1"}, {"r", "1"}});
  EXPECT_FALSE(is_modular(L));
  EXPECT_TRUE(is_semimodular(L));
  EXPECT_FALSE(is_dual_semimodular(L));
}

TEST(Predicates, BreadthAgreesWithEmbeddingAndDefinition) {
  for (const auto& L : enumerate_lattices(7)) {
    const int b = breadth(L);
    EXPECT_EQ(b, breadth_by_embedding(L));
    EXPECT_EQ(b, oracle::breadth_by_definition(L));
  }
  EXPECT_EQ(breadth(boolean(4)), 4);
  EXPECT_EQ(breadth(mn(5)), 2);
  EXPECT_EQ(breadth(chain(4)), 1);
  EXPECT_EQ(breadth(fano()), 3);
  EXPECT_EQ(breadth_by_embedding(fano()), 3);
  EXPECT_EQ(breadth(product(m3(), chain(2))), 3);
  EXPECT_EQ(breadth_by_embedding(product(m3(), chain(2))), 3);
  EXPECT_EQ(breadth(chain(0)), 0);
}

TEST(Predicates, BooleanEmbedding) {
  const auto F = fano();
  const auto e = find_boolean_embedding(F, 3);
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(e->size(), 8u);
  for (std::uint32_t s = 0; s < 8; ++s)
    for (std::uint32_t t = 0; t < 8; ++t) EXPECT_EQ(F.leq((*e)[s], (*e)[t]), (s & t) == s);
  EXPECT_FALSE(find_boolean_embedding(F, 4).has_value());
}

TEST(Predicates, NDistributivity) {
  EXPECT_TRUE(is_n_distributive(boolean(3), 1));
  EXPECT_FALSE(is_n_distributive(m3(), 1));
  EXPECT_TRUE(is_n_distributive(m3(), 2));
  EXPECT_FALSE(is_n_distributive(fano(), 2));
  EXPECT_TRUE(is_n_distributive(fano(), 3));
  EXPECT_THROW(is_n_distributive(n5(), 2), LatticeError);
}

TEST(Predicates, NDistributivityMatchesForbiddenConfiguration) {
  std::vector<FiniteLattice> lattices;
  for (const auto& L : enumerate_lattices(7))
    if (is_modular(L)) lattices.push_back(L);
  lattices.push_back(fano());
  lattices.push_back(product(m3(), chain(1)));
  lattices.push_back(mn(4));
  for (const auto& L : lattices)
    for (int n = 1; n <= 3; ++n) EXPECT_EQ(is_n_distributive(L, n), !has_forbidden_n_config(L, n));
}

TEST(Predicates, ForbiddenConfigurationShape) {
  const auto F = fano();
  const auto c = find_forbidden_n_config(F, 2);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->atoms.size(), 3u);
  for (Elem a : c->atoms) {
    EXPECT_EQ(F.meet(a, c->w), c->bottom);
    EXPECT_EQ(F.join(a, c->w), c->top);
  }
}

TEST(Predicates, SimplicityMatchesNaiveCongruences) {
  for (const auto& L : enumerate_lattices(7)) EXPECT_EQ(is_simple(L), oracle::naive_is_simple(L));
  EXPECT_TRUE(is_simple(m3()));
  EXPECT_TRUE(is_simple(fano()));
  EXPECT_TRUE(is_simple(chain(1)));
  EXPECT_FALSE(is_simple(chain(2)));
  EXPECT_FALSE(is_simple(boolean(2)));
  EXPECT_FALSE(is_simple(n5()));
}

TEST(Predicates, PrincipalCongruence) {
  const auto L = n5();
  const auto th = principal_congruence(L, L.at("a"), L.at("b"));
  EXPECT_TRUE(th.same_block(L.at("a"), L.at("b")));
  EXPECT_FALSE(th.same_block(L.at("0"), L.at("1")));
  const auto N = oracle::naive_congruence(L, L.at("a"), L.at("b"));
  for (Elem x = 0; x < L.size(); ++x)
    for (Elem y = 0; y < L.size(); ++y) EXPECT_EQ(th.same_block(x, y), N[x][y]);
}

TEST(Predicates, Sublattices) {
  const auto B = boolean(3);
  const std::vector<Elem> gens{B.at("a"), B.at("b")};
  const auto g = generated_sublattice(B, gens);
  EXPECT_EQ(g.size(), 4u);
  EXPECT_TRUE(is_sublattice(B, g));
  const std::vector<Elem> not_closed{B.at("a"), B.at("b"), B.at("abc")};
  EXPECT_FALSE(is_sublattice(B, not_closed));
}
