#include "idemrep/json_io.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "generators.hpp"
#include "idemrep/config.hpp"

namespace idemrep {
namespace {

using json_io::Json;
constexpr auto B = SemifieldTag::Boolean;
constexpr auto T = SemifieldTag::TropicalRational;

TEST(ValueJson, Encodings) {
  EXPECT_EQ(json_io::to_json(Value::boolean(true)).dump(), "1");
  EXPECT_EQ(json_io::to_json(Value::neg_inf()).dump(), R"({"t":"ninf"})");
  EXPECT_EQ(json_io::to_json(Value::tropical(-3, 6)).dump(), R"({"t":"q","num":-1,"den":2})");
  EXPECT_EQ(json_io::value_from_json(Json::parse(R"({"t":"q","num":4,"den":1})"), T), Value::tropical(4));
  EXPECT_THROW(json_io::value_from_json(Json::parse(R"({"t":"q","num":2,"den":4})"), T), ParseError);
  EXPECT_THROW(json_io::value_from_json(Json::parse(R"({"t":"q","num":2,"den":0})"), T), ParseError);
  EXPECT_THROW(json_io::value_from_json(Json::parse("2"), B), ParseError);
  EXPECT_THROW(json_io::value_from_json(Json::parse("1"), T), ParseError);
  EXPECT_THROW(json_io::value_from_json(Json::parse(R"({"t":"x"})"), T), ParseError);
}

TEST(ValueJson, RoundTrip) {
  auto rng = testing::engine(61);
  for (auto tag : testing::kTags)
    for (int i = 0; i < 300; ++i) {
      const auto v = testing::random_value(rng, tag);
      EXPECT_EQ(json_io::value_from_json(json_io::parse(json_io::to_json(v).dump()), tag), v);
    }
}

TEST(GroupJson, RoundTripAndValidation) {
  for (const auto& name : zoo_group_names()) {
    const auto g = named_group(name);
    const auto back = json_io::group_from_json(json_io::to_json(g));
    EXPECT_EQ(back, g);
    EXPECT_EQ(back.label(), g.label());
  }
  auto j = json_io::to_json(named_group("C2"));
  j["table"] = Json::parse("[[0,1],[1,1]]");
  EXPECT_THROW(json_io::group_from_json(j), ValidationError);
  EXPECT_THROW(json_io::group_from_json(Json::parse(R"({"order":2})")), ParseError);
}

TEST(MonomialJson, RoundTrip) {
  auto rng = testing::engine(62);
  for (auto tag : testing::kTags)
    for (int i = 0; i < 100; ++i) {
      const auto m = testing::random_monomial(rng, tag, 1 + rng() % 5);
      EXPECT_EQ(json_io::monomial_from_json(json_io::to_json(m), tag), m);
      EXPECT_EQ(json_io::matrix_from_json(json_io::to_json(m.to_matrix()), tag), m.to_matrix());
    }
  EXPECT_EQ(json_io::to_json(MonomialMap::permutation(B, {1, 0})).dump(), R"({"perm":[1,0],"scalars":[1,1]})");
  EXPECT_THROW(json_io::monomial_from_json(Json::parse(R"({"perm":[0,0],"scalars":[1,1]})"), B), ValidationError);
  EXPECT_THROW(json_io::monomial_from_json(Json::parse(R"({"perm":[0]})"), B), ParseError);
}

TEST(RepresentationJson, RoundTrip) {
  auto rng = testing::engine(63);
  for (const auto& name : zoo_group_names()) {
    const auto g = named_group(name);
    for (auto tag : testing::kTags) {
      const auto reg = regular_representation(g, tag);
      const auto v = change_of_basis(reg, testing::random_monomial(rng, tag, reg.dim()));
      const auto j = json_io::to_json(v);
      EXPECT_EQ(j["dim"], g.order());
      EXPECT_EQ(json_io::representation_from_json(json_io::parse(j.dump())), v);
    }
  }
  auto j = json_io::to_json(regular_representation(named_group("C2"), B));
  j["images"]["1"] = json_io::to_json(MonomialMap::identity(B, 2));
  j["images"]["0"] = json_io::to_json(MonomialMap::permutation(B, {1, 0}));
  EXPECT_THROW(json_io::representation_from_json(j), ValidationError);
  j["tag"] = "Z";
  EXPECT_THROW(json_io::representation_from_json(j), ParseError);
}

TEST(LatticeJson, RoundTrip) {
  for (const auto& name : {"B", "diamond", "N5", "M3", "chain4", "cube3"}) {
    const auto m = named_lattice(name);
    const auto doc = json_io::lattice_from_json(json_io::to_json(m));
    EXPECT_EQ(doc.module, m) << name;
    EXPECT_FALSE(doc.bg_module);
  }
  const auto bg = free_module(named_group("C2"), 2);
  const auto doc = json_io::lattice_from_json(json_io::parse(json_io::to_json(bg).dump()));
  ASSERT_TRUE(doc.bg_module);
  EXPECT_EQ(doc.bg_module->action(), bg.action());
  EXPECT_EQ(doc.bg_module->group(), bg.group());
  EXPECT_EQ(doc.module, bg.module());

  EXPECT_THROW(json_io::lattice_from_json(Json::parse(R"({"size":2,"leq":[[1,1],[1,1]]})")), ValidationError);
  EXPECT_THROW(json_io::lattice_from_json(Json::parse(R"({"size":2})")), ParseError);
  EXPECT_THROW(json_io::lattice_from_json(Json::parse(R"({"size":3,"leq":[[1,1],[0,1]]})")), ParseError);
}

TEST(LatticeJson, MinimalDocument) {
  const auto doc = json_io::lattice_from_json(Json::parse(R"({"size":3,"leq":[[1,1,1],[0,1,1],[0,0,1]]})"));
  EXPECT_EQ(doc.module.size(), 3u);
}

TEST(ReportJson, TimingOptional) {
  oracle::OracleReport r{"claim", "inst", false, "why", 7, 1.5};
  const auto with = json_io::to_json(r, true);
  const auto without = json_io::to_json(r, false);
  EXPECT_EQ(without.dump(), R"({"claim":"claim","instance":"inst","verdict":"fail","counterexample":"why","search_size":7})");
  EXPECT_TRUE(with.contains("elapsed_ms"));
}

TEST(Parse, Errors) {
  EXPECT_THROW(json_io::parse("{"), ParseError);
  EXPECT_THROW(json_io::read_file("/nonexistent/file.json"), ParseError);
}

TEST(Caps, ParsingAndResolution) {
  EXPECT_EQ(caps_from_json_text("{}"), Caps{});
  const auto c = caps_from_json_text(R"({"order_cap": 10, "random_lattices": 3})");
  EXPECT_EQ(c.order_cap, 10u);
  EXPECT_EQ(c.random_lattices, 3u);
  EXPECT_THROW(caps_from_json_text(R"({"bogus": 1})"), ParseError);
  EXPECT_THROW(caps_from_json_text(R"({"order_cap": "x"})"), ParseError);
  EXPECT_THROW(caps_from_json_text(R"({"order_cap": -1})"), ParseError);
  EXPECT_EQ(caps_from_json_text(caps_to_json_text(c)), c);

  const auto dir = std::filesystem::temp_directory_path() / "idemrep_caps_test";
  std::filesystem::create_directories(dir);
  const auto a = dir / "a.json", b = dir / "b.json";
  std::ofstream(a) << R"({"order_cap": 11})";
  std::ofstream(b) << R"({"order_cap": 22})";
  ::unsetenv(kConfigEnvVar);
  EXPECT_EQ(resolve_caps(std::nullopt), Caps{});
  ::setenv(kConfigEnvVar, b.c_str(), 1);
  EXPECT_EQ(resolve_caps(std::nullopt).order_cap, 22u);
  EXPECT_EQ(resolve_caps(a.string()).order_cap, 11u);
  ::unsetenv(kConfigEnvVar);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace idemrep
