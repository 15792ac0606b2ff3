#include <gtest/gtest.h>

#include "sglue/connect.hpp"
#include "sglue/constructions.hpp"

using namespace sglue;

namespace {

std::vector<std::string> conditions(const std::vector<ConnectViolation>& v) {
  std::vector<std::string> out;
  for (const auto& c : v) out.push_back(c.condition);
  return out;
}

bool has(const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

}  // namespace

TEST(PartialIso, BuildComposeInvert) {
  const std::vector<std::pair<Elem, Elem>> ab{{0, 1}, {2, 0}};
  const auto p = PartialIso::from_pairs(0, 1, 3, 2, ab);
  EXPECT_EQ(p.apply(0), 1u);
  EXPECT_EQ(p.invert(0), 2u);
  EXPECT_FALSE(p.in_domain(1));
  EXPECT_EQ(p.domain_size(), 2u);
  const std::vector<std::pair<Elem, Elem>> bc{{1, 4}};
  const auto q = PartialIso::from_pairs(1, 2, 2, 5, bc);
  const auto r = compose(q, p);
  EXPECT_EQ(r.apply(0), 4u);
  EXPECT_FALSE(r.in_domain(2));
  EXPECT_EQ(r.domain_size(), 1u);
  EXPECT_THROW(compose(p, q), std::logic_error);
  const std::vector<std::pair<Elem, Elem>> clash{{0, 1}, {1, 1}};
  EXPECT_THROW(PartialIso::from_pairs(0, 1, 2, 2, clash), LatticeError);
  EXPECT_TRUE(PartialIso::empty(0, 1, 2, 2).is_empty());
}

TEST(Connect, HallDilworthQuotient) {
  const auto cs = hall_dilworth_connected();
  EXPECT_TRUE(validate_connected(cs).empty());
  const auto q = connected_sum(cs);
  EXPECT_EQ(q.class_count, 3u);
  EXPECT_EQ(q.projection[1][cs.blocks[1].at("v")], "0:u");
  EXPECT_EQ(q.projection[1][cs.blocks[1].at("b")], "1:b");
  EXPECT_TRUE(isomorphic(sum(q.glued), chain(2)));
}

TEST(Connect, CriteriaCoincide) {
  const auto cs = elevate(projective_example());
  const auto& S = cs.skeleton;
  for (Elem x = 0; x < S.size(); ++x)
    for (Elem y = 0; y < S.size(); ++y)
      for (Elem a = 0; a < cs.blocks[x].size(); ++a)
        for (Elem b = 0; b < cs.blocks[y].size(); ++b) {
          const auto c = equivalence_criteria(cs, x, a, y, b);
          EXPECT_TRUE(c[0] == c[1] && c[1] == c[2] && c[2] == c[3]);
          EXPECT_EQ(equivalent(cs, x, a, y, b), c[0]);
        }
}

TEST(Connect, GluedSystemsSurviveTheRoundTrip) {
  for (const auto& f : glued_fixtures()) {
    if (!is_valid(f.system)) continue;
    const auto cs = to_connected(f.system);
    EXPECT_TRUE(validate_connected(cs).empty()) << f.name;
    EXPECT_TRUE(isomorphic(sum(connected_sum(cs).glued), sum(f.system))) << f.name;
    if (is_modular(f.system.skeleton)) {
      EXPECT_EQ(elevate(to_local(f.system)).maps, cs.maps) << f.name;
    }
  }
}

TEST(Connect, ViolationsAreTagged) {
  auto cs = hall_dilworth_connected();
  cs.maps.clear();
  EXPECT_TRUE(has(conditions(validate_connected(cs)), "nonempty"));

  // Domain {a} is not a filter of the first chain.
  auto bad = hall_dilworth_connected();
  const std::vector<std::pair<Elem, Elem>> low{{bad.blocks[0].at("a"), bad.blocks[1].at("v")}};
  bad.set(PartialIso::from_pairs(0, 1, 2, 2, low));
  EXPECT_TRUE(has(conditions(validate_connected(bad)), "filter-ideal"));
  EXPECT_THROW(connected_sum(bad), LatticeError);

  // The long map of the grid no longer factors through the middle.
  auto grid = to_connected(squares_3x3().system);
  const auto& S = grid.skeleton;
  grid.maps.erase({S.at("1"), S.at("4")});
  EXPECT_TRUE(has(conditions(validate_connected(grid)), "composite"));
}

TEST(Connect, LocalSystems) {
  const auto lcs = projective_example();
  EXPECT_TRUE(validate_local(lcs).empty());
  const auto two = elevate(lcs, ChainCheck::TwoChains);
  const auto all = elevate(lcs, ChainCheck::Exhaustive);
  EXPECT_EQ(two.maps, all.maps);
  const auto q = connected_sum(two);
  EXPECT_EQ(sum(q.glued).size(), 36u);

  // Shrink one side of the square so it no longer commutes.
  auto broken = to_local(squares_3x3().system);
  const auto& S = broken.skeleton;
  const Elem x = S.at("1"), y = S.at("2");
  const std::vector<std::pair<Elem, Elem>> top_to_bottom{{broken.blocks[x].top(), broken.blocks[y].bottom()}};
  broken.set(PartialIso::from_pairs(x, y, broken.blocks[x].size(), broken.blocks[y].size(), top_to_bottom));
  EXPECT_TRUE(has(conditions(validate_local(broken)), "square"));
  EXPECT_THROW(elevate(broken), LatticeError);

  LocalConnectedSystem pentagon;
  pentagon.skeleton = n5();
  pentagon.blocks.assign(5, chain(1));
  try {
    validate_local(pentagon);
    FAIL() << "non-modular skeleton accepted";
  } catch (const LatticeError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotModularSkeleton);
  }
}
