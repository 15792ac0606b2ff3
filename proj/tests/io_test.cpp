#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "sglue/constructions.hpp"
#include "sglue/io.hpp"

using namespace sglue;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const LatticeError& e) {
    return e.kind();
  }
  return ErrorKind::LimitExceeded;
}

}  // namespace

TEST(Io, LatticeRoundTrip) {
  for (const auto& L : {n5(), fano(), grid(2, 3), chain(0)}) {
    const auto back = lattice_from_json(Json::parse(to_json(L).dump()));
    EXPECT_TRUE(back.same_as(L));
  }
}

TEST(Io, GluedRoundTrip) {
  for (const auto& f : glued_fixtures()) {
    const auto back = glued_from_json(Json::parse(to_json(f.system).dump()));
    ASSERT_EQ(back.blocks.size(), f.system.blocks.size());
    EXPECT_TRUE(back.skeleton.same_as(f.system.skeleton));
    for (std::size_t i = 0; i < back.blocks.size(); ++i) EXPECT_TRUE(back.blocks[i].same_as(f.system.blocks[i]));
  }
}

TEST(Io, ConnectedRoundTrip) {
  const auto lcs = projective_example();
  const Json j = to_json(lcs);
  EXPECT_TRUE(is_local_json(j));
  const auto back = local_from_json(j);
  EXPECT_EQ(back.maps, lcs.maps);
  const auto cs = hall_dilworth_connected();
  const Json k = to_json(cs);
  EXPECT_FALSE(is_local_json(k));
  EXPECT_EQ(connected_from_json(k).maps, cs.maps);
}

TEST(Io, MalformedInput) {
  EXPECT_EQ(kind_of([] { lattice_from_json(Json::parse(R"([1, 2])")); }), ErrorKind::Malformed);
  EXPECT_EQ(kind_of([] { lattice_from_json(Json::parse(R"({"elements": [1, 2]})")); }), ErrorKind::Malformed);
  EXPECT_EQ(kind_of([] { lattice_from_json(Json::parse(R"({"elements": ["a"], "covers": [["a"]]})")); }),
            ErrorKind::Malformed);
  EXPECT_EQ(kind_of([] { lattice_from_json(Json::parse(R"({"elements": ["a", "b"], "covers": [["a", "c"]]})")); }),
            ErrorKind::UnknownElement);
  EXPECT_EQ(kind_of([] {
              glued_from_json(Json::parse(
                  R"({"skeleton": {"elements": ["x"], "covers": []}, "blocks": {"y": {"elements": ["a"]}}})"));
            }),
            ErrorKind::UnknownElement);
  EXPECT_EQ(kind_of([] {
              glued_from_json(Json::parse(R"({"skeleton": {"elements": ["x", "y"], "covers": [["x", "y"]]},
                                              "blocks": {"x": {"elements": ["a"]}}})"));
            }),
            ErrorKind::Malformed);
  EXPECT_EQ(kind_of([] { read_json_file("/nonexistent/file.json"); }), ErrorKind::Malformed);
}

TEST(Io, DownwardMapIsRejected) {
  Json j = to_json(hall_dilworth_connected());
  j["maps"][0]["from"] = "1";
  j["maps"][0]["to"] = "0";
  EXPECT_EQ(kind_of([&] { connected_from_json(j); }), ErrorKind::InvalidSystem);
}

TEST(Io, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "sglue_io_test.json";
  write_json_file(path.string(), to_json(m3()));
  EXPECT_TRUE(lattice_from_json(read_json_file(path.string())).same_as(m3()));
  std::filesystem::remove(path);
}

TEST(Io, Dot) {
  const auto L = chain(1);
  Bits mark(L.size());
  mark.set(0);
  const auto dot = to_dot(L, &mark);
  EXPECT_NE(dot.find("\"0\" -> \"1\""), std::string::npos);
  EXPECT_NE(dot.find("filled"), std::string::npos);
  EXPECT_NE(dot.find("rankdir=BT"), std::string::npos);
}

TEST(Io, ViolationJson) {
  const auto v = validate(nonsystem_filter().system);
  ASSERT_FALSE(v.empty());
  const Json j = to_json(v.front());
  EXPECT_EQ(j["axiom"], "A1");
  EXPECT_TRUE(j["witness"].is_array());
}
