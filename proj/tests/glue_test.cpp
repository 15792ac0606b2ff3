#include <gtest/gtest.h>

#include <set>

#include "sglue/constructions.hpp"
#include "sglue/glue.hpp"
#include "sglue/oracles.hpp"

using namespace sglue;

namespace {

FiniteLattice lat(std::vector<std::string> names, std::vector<std::pair<std::string, std::string>> covers) {
  return FiniteLattice::from_covers(std::move(names), covers);
}

std::set<std::string> axioms(const GluedSystem& sys) {
  std::set<std::string> out;
  for (const auto& v : validate(sys)) out.insert(std::string(to_string(v.axiom)));
  return out;
}

}  // namespace

TEST(Glue, SquaresGlueToTheThreeByThreeGrid) {
  const auto f = squares_3x3();
  ASSERT_TRUE(is_valid(f.system));
  const auto M = sum(f.system);
  EXPECT_TRUE(isomorphic(M, grid(2, 2)));
  EXPECT_TRUE(check_sum_structure(f.system, M));
  EXPECT_TRUE(is_monotone_strict(f.system));
}

TEST(Glue, EachAxiomIsDetected) {
  EXPECT_EQ(axioms(nonsystem_filter().system), std::set<std::string>{"A1"});
  EXPECT_EQ(axioms(nonsystem_overlap().system), std::set<std::string>{"A4"});

  GluedSystem disagree;
  disagree.skeleton = chain(1);
  disagree.blocks = {lat({"p", "a", "b"}, {{"p", "a"}, {"a", "b"}}), lat({"b", "a", "q"}, {{"b", "a"}, {"a", "q"}})};
  EXPECT_TRUE(axioms(disagree).count("A2"));

  GluedSystem apart;
  apart.skeleton = chain(1);
  apart.blocks = {lat({"p", "q"}, {{"p", "q"}}), lat({"r", "s"}, {{"r", "s"}})};
  EXPECT_EQ(axioms(apart), std::set<std::string>{"A3"});
}

TEST(Glue, ViolationsNameTheWitnesses) {
  const auto v = validate(nonsystem_filter().system);
  ASSERT_FALSE(v.empty());
  EXPECT_FALSE(v.front().x.empty());
  EXPECT_FALSE(v.front().y.empty());
  EXPECT_FALSE(v.front().witness.empty());
}

TEST(Glue, ShapeErrors) {
  GluedSystem s;
  s.skeleton = chain(1);
  s.blocks = {chain(1)};
  EXPECT_THROW(validate(s), LatticeError);
}

TEST(Glue, FormulasMatchClosureOrder) {
  for (const auto& f : glued_fixtures()) {
    if (!is_valid(f.system)) continue;
    const auto oracle = oracle::closure_order(f.system);
    const FormulaArithmetic fa(f.system);
    const auto& idx = fa.index();
    for (Elem a = 0; a < idx.size(); a += 3)
      for (Elem b = 0; b < idx.size(); b += 2) {
        const auto ia = oracle.index(idx.name(a)), ib = oracle.index(idx.name(b));
        EXPECT_EQ(idx.name(fa.sup(a, b)), oracle.names[oracle.sup(ia, ib)]) << f.name;
        EXPECT_EQ(idx.name(fa.inf(a, b)), oracle.names[oracle.inf(ia, ib)]) << f.name;
      }
  }
}

TEST(Glue, FormulasByName) {
  const auto f = squares_3x3();
  const auto M = sum(f.system);
  for (Elem a = 0; a < M.size(); ++a)
    for (Elem b = 0; b < M.size(); ++b) {
      EXPECT_EQ(sup_via_formulas(f.system, M.name(a), M.name(b)), M.name(M.join(a, b)));
      EXPECT_EQ(inf_via_formulas(f.system, M.name(a), M.name(b)), M.name(M.meet(a, b)));
    }
  EXPECT_THROW(sup_via_formulas(f.system, "nope", M.name(0)), LatticeError);
}

TEST(Glue, ZeroOneMaps) {
  const auto strict = zero_one_maps(squares_3x3().system);
  EXPECT_TRUE(strict.zero_preserves_joins);
  EXPECT_TRUE(strict.one_preserves_meets);
  EXPECT_TRUE(strict.zero_injective);
  EXPECT_TRUE(strict.one_injective);

  const auto ov = overlap_fixture();
  const auto loose = zero_one_maps(ov.system);
  EXPECT_FALSE(loose.zero_injective);
  EXPECT_EQ(loose.zero[0], loose.zero[1]);
  EXPECT_FALSE(is_monotone_strict(ov.system));
}

TEST(Glue, OneSidedMonotonicityIsWeaker) {
  // The lower block is swallowed by the upper one.
  GluedSystem s;
  s.skeleton = chain(1);
  s.blocks = {lat({"a", "b"}, {{"a", "b"}}), lat({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}})};
  ASSERT_TRUE(is_valid(s));
  EXPECT_TRUE(detail::is_monotone_one_sided(s));
  EXPECT_FALSE(is_monotone_strict(s));
  EXPECT_FALSE(detail::is_monotone_one_sided(shrinking_skeleton().system));
}

TEST(Glue, LengthBound) {
  int last = 0;
  for (int n = 1; n <= 6; ++n) {
    const auto lb = length_bound(unbounded_family(n).system);
    EXPECT_GT(lb.sum_length, last);
    EXPECT_EQ(lb.skeleton_length, 2);
    EXPECT_TRUE(lb.holds());
    last = lb.sum_length;
  }
  EXPECT_TRUE(length_bound_check(squares_3x3().system));
}

TEST(Glue, HallDilworthIsAChain) {
  const auto M = sum(hall_dilworth().system);
  EXPECT_TRUE(isomorphic(M, chain(2)));
}
