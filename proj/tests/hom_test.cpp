#include <gtest/gtest.h>

#include "sglue/constructions.hpp"
#include "sglue/hom.hpp"

using namespace sglue;

namespace {

HomFamily into(const GluedSystem& sys, const FiniteLattice& host) {
  HomFamily fam;
  for (const auto& B : sys.blocks) {
    LatticeHom h{B, host, std::vector<Elem>(B.size())};
    for (Elem a = 0; a < B.size(); ++a) h.map[a] = host.at(B.name(a));
    fam.push_back(std::move(h));
  }
  return fam;
}

}  // namespace

TEST(Hom, Basics) {
  const auto B = boolean(2);
  const auto C = chain(1);
  LatticeHom proj{B, C, std::vector<Elem>(B.size())};
  for (Elem a = 0; a < B.size(); ++a) proj.map[a] = B.name(a).find('a') != std::string::npos ? C.at("1") : C.at("0");
  EXPECT_TRUE(is_homomorphism(proj));
  EXPECT_FALSE(is_injective(proj));
  LatticeHom bad = proj;
  bad.map[B.at("b")] = C.at("1");
  EXPECT_FALSE(is_homomorphism(bad));
}

TEST(Hom, InclusionFamilyGluesToTheIdentity) {
  const auto f = squares_3x3();
  const auto M = sum(f.system);
  const auto fam = into(f.system, M);
  EXPECT_TRUE(check_star(f.system, fam));
  const auto h = glue_homs(f.system, fam);
  EXPECT_TRUE(is_injective(h));
  for (Elem a = 0; a < h.domain.size(); ++a) EXPECT_EQ(M.name(h(a)), h.domain.name(a));
}

TEST(Hom, DisagreementOnAnOverlapIsRejected) {
  const auto f = squares_3x3();
  const auto M = sum(f.system);
  auto fam = into(f.system, M);
  fam[1].map[f.system.blocks[1].at("b")] = M.at("a");
  try {
    glue_homs(f.system, fam);
    FAIL();
  } catch (const LatticeError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OverlapDisagreement);
  }
}

TEST(Hom, ZeroOneConditionOverPentagon) {
  const auto con = distributive_with_skeleton(n5());
  auto fam = into(con.system, con.lattice);
  EXPECT_TRUE(check_star(con.system, fam));
  EXPECT_TRUE(is_homomorphism(glue_homs(con.system, fam)));
  const Elem top = con.system.skeleton.top();
  std::fill(fam[top].map.begin(), fam[top].map.end(), con.lattice.top());
  EXPECT_FALSE(check_star(con.system, fam));
  EXPECT_THROW(glue_homs(con.system, fam), LatticeError);
}

TEST(Hom, SquareConstructionIsASublattice) {
  for (const auto& S : {m3(), chain(3), boolean(2), product(m3(), chain(1))}) {
    const auto con = square_sublattice(S);
    const auto P = product(S, S);
    EXPECT_TRUE(sum_is_sublattice_of(con.system, P));
    const auto h = glue_homs(con.system, into(con.system, P));
    EXPECT_TRUE(is_injective(h));
  }
  // A host missing an element.
  EXPECT_FALSE(sum_is_sublattice_of(square_sublattice(chain(2)).system, chain(2)));
}

TEST(Hom, ConnectedFamilies) {
  const auto cs = hall_dilworth_connected();
  const auto C = chain(2);
  HomFamily fam{{cs.blocks[0], C, {C.at("0"), C.at("1")}}, {cs.blocks[1], C, {C.at("1"), C.at("2")}}};
  const auto h = glue_connected_homs(cs, fam);
  EXPECT_TRUE(is_homomorphism(h));
  EXPECT_TRUE(is_injective(h));
  fam[1].map = {C.at("2"), C.at("2")};
  EXPECT_THROW(glue_connected_homs(cs, fam), LatticeError);
}

TEST(Hom, SimplicityOfSums) {
  EXPECT_TRUE(simplicity_transfer_check(m3_chain(2).system));
  EXPECT_TRUE(simplicity_transfer_check(m3_chain(4).system));
  EXPECT_TRUE(simplicity_transfer_check(fano_pair().system));
  // One shared point is not enough.
  EXPECT_FALSE(simplicity_transfer_check(m3_point_pair().system));
  EXPECT_THROW(simplicity_transfer_check(squares_3x3().system), LatticeError);
}

TEST(Hom, FamilyShapeIsChecked) {
  const auto f = squares_3x3();
  auto fam = into(f.system, sum(f.system));
  fam.pop_back();
  EXPECT_THROW(check_star(f.system, fam), LatticeError);
}
