#include <gtest/gtest.h>

#include "sglue/constructions.hpp"
#include "sglue/enumerate.hpp"
#include "sglue/lattice.hpp"

using namespace sglue;

namespace {

// Least upper bound straight from the order relation.
Elem brute_join(const FiniteLattice& L, Elem a, Elem b) {
  for (Elem u = 0; u < L.size(); ++u) {
    if (!L.leq(a, u) || !L.leq(b, u)) continue;
    bool least = true;
    for (Elem v = 0; v < L.size(); ++v)
      if (L.leq(a, v) && L.leq(b, v) && !L.leq(u, v)) least = false;
    if (least) return u;
  }
  return kNone;
}

LatticeError error_of(auto&& f) {
  try {
    f();
  } catch (const LatticeError& e) {
    return e;
  }
  return LatticeError(ErrorKind::Malformed, "no error");
}

}  // namespace

TEST(Lattice, BuildsFromCovers) {
  const auto L = n5();
  EXPECT_EQ(L.size(), 5u);
  EXPECT_EQ(L.name(L.bottom()), "0");
  EXPECT_EQ(L.name(L.top()), "1");
  EXPECT_EQ(L.length(), 3);
  EXPECT_TRUE(L.leq(L.at("a"), L.at("b")));
  EXPECT_FALSE(L.comparable(L.at("b"), L.at("c")));
  EXPECT_EQ(L.name(L.join(L.at("a"), L.at("c"))), "1");
  EXPECT_EQ(L.name(L.meet(L.at("b"), L.at("c"))), "0");
  EXPECT_EQ(L.atoms().size(), 2u);
  EXPECT_EQ(L.coatoms().size(), 2u);
}

TEST(Lattice, JoinAndMeetTablesMatchTheOrder) {
  for (const auto& L : enumerate_lattices(6))
    for (Elem a = 0; a < L.size(); ++a)
      for (Elem b = 0; b < L.size(); ++b) {
        EXPECT_EQ(L.join(a, b), brute_join(L, a, b));
        const auto D = dual(L);
        EXPECT_EQ(L.meet(a, b), D.at(D.name(brute_join(D, D.at(L.name(a)), D.at(L.name(b))))));
      }
}

TEST(Lattice, RejectsBadInput) {
  using V = std::vector<std::pair<std::string, std::string>>;
  EXPECT_EQ(error_of([] { FiniteLattice::from_covers({"a", "a"}, V{}); }).kind(), ErrorKind::DuplicateElement);
  EXPECT_EQ(error_of([] { FiniteLattice::from_covers({"a", "b"}, V{{"a", "z"}}); }).kind(), ErrorKind::UnknownElement);
  EXPECT_EQ(error_of([] { FiniteLattice::from_covers({"a", "b"}, V{{"a", "b"}, {"b", "a"}}); }).kind(),
            ErrorKind::CycleDetected);
  EXPECT_EQ(error_of([] {
              FiniteLattice::from_covers({"0", "a", "1"}, V{{"0", "a"}, {"a", "1"}, {"0", "1"}});
            }).kind(),
            ErrorKind::NotTransitiveReduction);
  EXPECT_EQ(error_of([] { FiniteLattice::from_covers({"a", "b"}, V{}); }).kind(), ErrorKind::NotBounded);
  // Two minimal upper bounds for a, b.
  EXPECT_EQ(error_of([] {
              FiniteLattice::from_covers({"0", "a", "b", "c", "d", "1"}, V{{"0", "a"},
                                                                           {"0", "b"},
                                                                           {"a", "c"},
                                                                           {"a", "d"},
                                                                           {"b", "c"},
                                                                           {"b", "d"},
                                                                           {"c", "1"},
                                                                           {"d", "1"}});
            }).kind(),
            ErrorKind::NoUniqueJoin);
}

TEST(Lattice, RelationAndCoversAgree) {
  const auto L = product(m3(), chain(2));
  std::vector<Bits> above(L.size(), Bits(L.size()));
  for (Elem a = 0; a < L.size(); ++a)
    for (Elem b = 0; b < L.size(); ++b)
      if (L.lt(a, b)) above[a].set(b);
  const auto R = FiniteLattice::from_relation(L.names(), above);
  EXPECT_TRUE(R.same_as(L));
  EXPECT_EQ(R.cover_count(), L.cover_count());
}

TEST(Lattice, IntervalsAndInducedOrders) {
  const auto B = boolean(3);
  const auto iv = interval(B, B.at("a"), B.top());
  EXPECT_EQ(iv.carrier.size(), 4u);
  EXPECT_TRUE(iv.contains(B.at("ab")));
  EXPECT_FALSE(iv.contains(B.at("b")));
  EXPECT_TRUE(isomorphic(iv.as_lattice(), boolean(2)));
  const std::vector<Elem> sub{B.at("0"), B.at("a"), B.at("ab"), B.at("abc")};
  EXPECT_TRUE(isomorphic(induced(B, sub), chain(3)));
}

TEST(Lattice, ProductDualAndRenaming) {
  const auto G = grid(2, 3);
  EXPECT_EQ(G.size(), 12u);
  EXPECT_EQ(G.length(), 5);
  EXPECT_EQ(G.name(G.join(G.at("(1,0)"), G.at("(0,2)"))), "(1,2)");
  const auto D = dual(n5());
  EXPECT_EQ(D.name(D.bottom()), "1");
  EXPECT_TRUE(isomorphic(D, n5()));
  const auto R = renamed(m3(), [](const std::string& n) { return "x" + n; });
  EXPECT_EQ(R.name(R.top()), "x1");
  EXPECT_TRUE(isomorphic(R, m3()));
  EXPECT_FALSE(R.same_as(m3()));
}

TEST(Lattice, Isomorphism) {
  EXPECT_FALSE(isomorphic(m3(), n5()));
  EXPECT_TRUE(isomorphic(grid(1, 1), boolean(2)));
  EXPECT_TRUE(isomorphic(product(product(chain(1), chain(1)), chain(1)), boolean(3)));
  EXPECT_FALSE(isomorphic(grid(1, 2), grid(1, 1)));
  const auto iso = find_isomorphism(grid(2, 1), grid(1, 2));
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(find_anti_automorphism(fano()).has_value());
  // C2 + C1 stacked on a square is not self-dual.
  const auto L = FiniteLattice::from_covers({"0", "a", "b", "c", "1"},
                                            {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"b", "c"}, {"c", "1"}});
  EXPECT_FALSE(find_anti_automorphism(L).has_value());
}

TEST(Lattice, MaximalChains) {
  const auto B = boolean(3);
  EXPECT_EQ(maximal_chains(B, B.bottom(), B.top()).size(), 6u);
  EXPECT_EQ(maximal_chains(B, B.bottom(), B.top(), 2).size(), 2u);
  EXPECT_TRUE(maximal_chains(B, B.at("a"), B.at("b")).empty());
  const auto G = grid(2, 2);
  EXPECT_EQ(maximal_chains(G, G.bottom(), G.top()).size(), 6u);
}

TEST(Lattice, LinearOrderExtendsTheOrder) {
  const auto L = fano();
  const auto& order = L.linear_order();
  std::vector<std::size_t> pos(L.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  for (auto [a, b] : L.covers()) EXPECT_LT(pos[a], pos[b]);
}
