#include "idemrep/oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"

namespace idemrep {
namespace {

using oracle::BoolMatrix;

TEST(Oracle, BoolProduct) {
  const BoolMatrix a{{true, true}, {false, true}};
  const BoolMatrix id{{true, false}, {false, true}};
  EXPECT_EQ(oracle::bool_product(a, id), a);
  EXPECT_EQ(oracle::bool_product(a, a), a);
}

TEST(Oracle, InvertibleMatrices) {
  EXPECT_EQ(oracle::enumerate_invertible_matrices(1).size(), 1u);
  const auto two = oracle::enumerate_invertible_matrices(2);
  ASSERT_EQ(two.size(), 2u);
  std::vector<std::string> rendered{oracle::to_string(two[0]), oracle::to_string(two[1])};
  std::sort(rendered.begin(), rendered.end());
  EXPECT_EQ(rendered, (std::vector<std::string>{"[[0,1],[1,0]]", "[[1,0],[0,1]]"}));
  EXPECT_EQ(oracle::enumerate_invertible_matrices(3).size(), 6u);
  EXPECT_THROW(oracle::enumerate_invertible_matrices(4), CapExceeded);
}

TEST(Oracle, EquivariantMaps) {
  const auto c2 = named_group("C2");
  const auto reg = regular_representation(c2, SemifieldTag::Boolean);
  EXPECT_EQ(oracle::enumerate_equivariant_maps(reg, reg).size(), 4u);
  const auto triv = trivial_representation(c2, SemifieldTag::Boolean, 2);
  EXPECT_EQ(oracle::enumerate_equivariant_maps(triv, triv).size(), 16u);
  const auto s3 = regular_representation(named_group("S3"), SemifieldTag::Boolean);
  EXPECT_THROW(oracle::enumerate_equivariant_maps(s3, s3), CapExceeded);
}

TEST(Oracle, ModuleHoms) {
  const auto b = named_lattice("B");
  EXPECT_EQ(oracle::enumerate_all_module_homs(b, b).homs.size(), 2u);
  // Join-preserving maps from the diamond to B are determined by the atoms.
  EXPECT_EQ(oracle::enumerate_all_module_homs(named_lattice("diamond"), b).homs.size(), 4u);
  EXPECT_EQ(oracle::enumerate_all_module_homs(chain(3), chain(3)).homs.size(), 6u);
  EXPECT_THROW(oracle::enumerate_all_module_homs(boolean_cube(4), boolean_cube(4), 1000), CapExceeded);
}

TEST(Oracle, SubgroupClassesAndGSets) {
  EXPECT_EQ(oracle::brute_force_subgroup_class_count(named_group("S3")), 4u);
  EXPECT_EQ(oracle::brute_force_subgroup_class_count(named_group("D4")), 8u);
  EXPECT_THROW(oracle::brute_force_subgroup_class_count(named_group("S4")), CapExceeded);
  const auto c2 = named_group("C2");
  EXPECT_TRUE(oracle::gsets_isomorphic_bruteforce(GSet::regular(c2), GSet::regular(c2)));
  EXPECT_FALSE(oracle::gsets_isomorphic_bruteforce(GSet::regular(c2), GSet::trivial(c2, 2)));
  EXPECT_FALSE(oracle::gsets_isomorphic_bruteforce(GSet::regular(c2), GSet::trivial(c2, 3)));
}

TEST(Oracle, Scans) {
  const auto z = oracle::exhaustive_zero_divisor_scan(named_group("C3"), 1);
  EXPECT_TRUE(z.pass);
  EXPECT_FALSE(z.counterexample);
  EXPECT_EQ(z.search_size, 49u);
  const auto r = oracle::exhaustive_zero_divisor_scan(named_group("D4"), 1, 500);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.search_size, 500u);
  const auto t = oracle::tropical_torsion_scan(3, 500, 12);
  EXPECT_TRUE(t.pass);
  EXPECT_FALSE(t.counterexample);
}

TEST(Oracle, RawMatrix) {
  const auto m = MonomialMap::permutation(SemifieldTag::Boolean, {1, 2, 0});
  EXPECT_EQ(oracle::to_string(oracle::raw_matrix(m)), "[[0,0,1],[1,0,0],[0,1,0]]");
}

}  // namespace
}  // namespace idemrep
