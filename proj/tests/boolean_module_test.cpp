#include "idemrep/boolean_module.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"
#include "idemrep/lattice_catalog.hpp"
#include "idemrep/oracle.hpp"

namespace idemrep {
namespace {

using Relation = std::vector<std::vector<bool>>;

std::size_t idx(const FiniteBModule& m, const std::string& label) {
  const auto it = std::find(m.labels().begin(), m.labels().end(), label);
  if (it == m.labels().end()) throw std::logic_error("no label " + label);
  return static_cast<std::size_t>(it - m.labels().begin());
}

/// Elements with exactly one lower cover, computed from the order relation.
std::vector<std::size_t> reference_join_irreducibles(const FiniteBModule& m) {
  const auto r = m.order_relation();
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < m.size(); ++x) {
    std::size_t covers = 0;
    for (std::size_t y = 0; y < m.size(); ++y) {
      if (y == x || !r[y][x]) continue;
      bool cover = true;
      for (std::size_t z = 0; z < m.size() && cover; ++z) cover = !(z != x && z != y && r[y][z] && r[z][x]);
      covers += cover;
    }
    if (covers == 1) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> reference_meet_irreducibles(const FiniteBModule& m) {
  const auto r = m.order_relation();
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < m.size(); ++x) {
    std::size_t covers = 0;
    for (std::size_t y = 0; y < m.size(); ++y) {
      if (y == x || !r[x][y]) continue;
      bool cover = true;
      for (std::size_t z = 0; z < m.size() && cover; ++z) cover = !(z != x && z != y && r[x][z] && r[z][y]);
      covers += cover;
    }
    if (covers == 1) out.push_back(x);
  }
  return out;
}

/// All lattices of at most 5 elements plus named and random larger ones.
std::vector<FiniteBModule> test_lattices() {
  auto out = all_small_lattices(5);
  for (const auto& n : {"B", "diamond", "N5", "M3", "chain4", "cube3"}) out.push_back(named_lattice(n));
  auto rng = testing::engine(41);
  for (int i = 0; i < 40; ++i) out.push_back(random_lattice(rng, 2, 12));
  return out;
}

TEST(FromOrder, Examples) {
  const auto b = FiniteBModule::from_order({{true, true}, {false, true}});
  EXPECT_EQ(b.size(), 2u);
  EXPECT_TRUE(lattices_isomorphic(b, named_lattice("B")));
  const Relation diamond{{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}};
  EXPECT_TRUE(lattices_isomorphic(FiniteBModule::from_order(diamond), boolean_cube(2)));
  // 0 < a < c < 1, 0 < b < 1 with indices 0, a, b, c, 1.
  const Relation n5{{1, 1, 1, 1, 1}, {0, 1, 0, 1, 1}, {0, 0, 1, 0, 1}, {0, 0, 0, 1, 1}, {0, 0, 0, 0, 1}};
  const auto m = FiniteBModule::from_order(n5);
  EXPECT_EQ(m.join(1, 2), 4u);
  EXPECT_EQ(m.join(1, 3), 3u);
  EXPECT_EQ(m.order_relation(), n5);
  EXPECT_EQ(m.order_relation(), named_lattice("N5").order_relation());
}

TEST(FromOrder, Errors) {
  EXPECT_THROW(FiniteBModule::from_order({}), ValidationError);
  EXPECT_THROW(FiniteBModule::from_order({{1, 1}, {1, 1}}), ValidationError);
  EXPECT_THROW(FiniteBModule::from_order({{1, 0}, {0, 1}}), ValidationError);
  EXPECT_THROW(FiniteBModule::from_order({{0}}), ValidationError);
  EXPECT_THROW(FiniteBModule::from_order({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}), ValidationError);
  // a and b have two minimal upper bounds c and d.
  const Relation bowtie{{1, 1, 1, 1, 1}, {0, 1, 0, 1, 1}, {0, 0, 1, 1, 1}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}};
  EXPECT_THROW(FiniteBModule::from_order(bowtie), ValidationError);
}

TEST(FromJoinClosed, Errors) {
  EXPECT_THROW(FiniteBModule::from_join_closed({Bits::from_mask(2, 1), Bits::from_mask(2, 2)}), ValidationError);
  EXPECT_THROW(FiniteBModule::from_join_closed({Bits::from_mask(2, 1), Bits::from_mask(2, 1)}), ValidationError);
  EXPECT_THROW(FiniteBModule::from_join_closed({Bits::from_mask(2, 1), Bits::from_mask(3, 1)}), ValidationError);
  EXPECT_NO_THROW(FiniteBModule::from_join_closed({Bits::from_mask(2, 1), Bits::from_mask(2, 3)}));
}

TEST(NamedLattices, Shapes) {
  EXPECT_EQ(named_lattice("M3").size(), 5u);
  EXPECT_EQ(named_lattice("chain5").size(), 5u);
  EXPECT_EQ(named_lattice("cube4").size(), 16u);
  EXPECT_THROW(named_lattice("hexagon"), ParseError);
  EXPECT_THROW(boolean_cube(21), CapExceeded);
  EXPECT_THROW(chain(0), ValidationError);
}

TEST(Dual, Examples) {
  const auto b = named_lattice("B");
  EXPECT_TRUE(lattices_isomorphic(dual(b).module, b));
  EXPECT_TRUE(lattices_isomorphic(dual(chain(3)).module, chain(3)));
  const auto n5 = named_lattice("N5");
  const auto d = dual(n5);
  EXPECT_TRUE(lattices_isomorphic(d.module, n5));
  // psi reverses the order, so the long side a < c maps to psi(c) < psi(a).
  EXPECT_TRUE(d.module.leq(d.psi[idx(n5, "c")], d.psi[idx(n5, "a")]));
  EXPECT_FALSE(d.module.leq(d.psi[idx(n5, "a")], d.psi[idx(n5, "c")]));
}

TEST(DoubleDual, Examples) {
  for (const auto& name : {"B", "diamond"}) EXPECT_TRUE(double_dual_canonical(named_lattice(name)).is_isomorphism());
  auto rng = testing::engine(42);
  const auto m = random_lattice(rng, 8, 8);
  ASSERT_EQ(m.size(), 8u);
  EXPECT_TRUE(double_dual_canonical(m).is_isomorphism());
}

TEST(JoinIrreducibles, Examples) {
  const auto d = named_lattice("diamond");
  EXPECT_EQ(join_irreducibles(d), (std::vector<std::size_t>{idx(d, "a"), idx(d, "b")}));
  const auto c = chain(3);
  EXPECT_EQ(join_irreducibles(c), (std::vector<std::size_t>{idx(c, "a"), idx(c, "b")}));
  const auto n5 = named_lattice("N5");
  EXPECT_EQ(join_irreducibles(n5), (std::vector<std::size_t>{idx(n5, "a"), idx(n5, "b"), idx(n5, "c")}));
}

TEST(QuasiBasis, Examples) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto r = quasi_basis_search(boolean_cube(n));
    ASSERT_TRUE(std::holds_alternative<QuasiBasis>(r));
    EXPECT_EQ(std::get<QuasiBasis>(r).rank(), n);
  }
  const auto c = quasi_basis_search(chain(3));
  ASSERT_TRUE(std::holds_alternative<NotQuasiFree>(c));
  EXPECT_EQ(std::get<NotQuasiFree>(c).witness, "b = a + b");
  const auto n5 = quasi_basis_search(named_lattice("N5"));
  ASSERT_TRUE(std::holds_alternative<NotQuasiFree>(n5));
  EXPECT_EQ(std::get<NotQuasiFree>(n5).witness, "c = a + c");
}

TEST(CyclicModule, Examples) {
  const auto c2 = named_group("C2");
  const auto triv = BGModule::trivial_action(named_lattice("diamond"), c2);
  const auto sub = cyclic_bg_module(triv, 1);
  EXPECT_EQ(sub.module().size(), 2u);

  const auto reg = free_module(c2, 1);
  EXPECT_EQ(reg.module().size(), 4u);
  const auto e0 = *reg.module().index_of(Bits::from_mask(2, 1));
  const auto whole = cyclic_bg_module(reg, e0);
  EXPECT_EQ(whole.module().size(), 4u);
  const auto qb = quasi_basis_search(whole.module());
  ASSERT_TRUE(std::holds_alternative<QuasiBasis>(qb));
  EXPECT_EQ(std::get<QuasiBasis>(qb).rank(), 2u);

  const auto s3 = named_group("S3");
  const auto big = cyclic_submodule_of_free(s3, 1, Bits::from_mask(6, 1));
  EXPECT_EQ(big.module().size(), 64u);
  const auto qb6 = quasi_basis_search(big.module());
  ASSERT_TRUE(std::holds_alternative<QuasiBasis>(qb6));
  EXPECT_EQ(std::get<QuasiBasis>(qb6).rank(), 6u);

  EXPECT_THROW(cyclic_bg_module(reg, 99), ValidationError);
  EXPECT_THROW(cyclic_submodule_of_free(s3, 1, Bits::from_mask(5, 1)), ValidationError);
  EXPECT_THROW(free_module(s3, 3), CapExceeded);
}

TEST(OrbitAntichain, Examples) {
  const auto c2 = named_group("C2");
  EXPECT_TRUE(orbit_antichain_check(BGModule::trivial_action(chain(4), c2)).holds);
  EXPECT_TRUE(orbit_antichain_check(free_module(c2, 1)).holds);
  const auto d4 = named_group("D4");
  auto rng = testing::engine(43);
  for (const auto& h : all_subgroups(d4)) {
    if (h.size() != 2) continue;
    const auto coords = GSet::on_cosets(d4, h);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Bits> seeds;
      const auto seed = Bits::from_mask(4, rng() % 16);
      for (Element x = 0; x < d4.order(); ++x) {
        Bits moved(4);
        for (std::size_t i = 0; i < 4; ++i)
          if (seed.test(i)) moved.set(coords.act(x, i));
        seeds.push_back(moved);
      }
      const auto m = BGModule::from_coordinate_action(closure_module(seeds, Bits(4)), coords);
      EXPECT_TRUE(orbit_antichain_check(m).holds);
    }
  }
}

TEST(ChainLength, Examples) {
  const auto c2 = named_group("C2");
  EXPECT_EQ(max_chain_length_join_irreducibles(free_module(c2, 1)), 1u);
  EXPECT_EQ(max_chain_length_join_irreducibles(BGModule::trivial_action(chain(3), c2)), 2u);
  const auto cyc = cyclic_submodule_of_free(c2, 2, Bits::from_mask(4, 0b0111));
  EXPECT_LE(max_chain_length_join_irreducibles(cyc), generator_count(cyc));
}

TEST(GeneratorCount, Examples) {
  const auto c2 = named_group("C2");
  EXPECT_EQ(generator_count(cyclic_submodule_of_free(c2, 2, Bits::from_mask(4, 0b0110))), 1u);
  EXPECT_EQ(generator_count(BGModule::trivial_action(named_lattice("diamond"), c2)), 2u);
  EXPECT_EQ(generator_count(free_module(c2, 2)), 2u);
  EXPECT_THROW(generator_count(BGModule::trivial_action(chain(1), c2)), ValidationError);
  EXPECT_THROW(generator_count(BGModule::trivial_action(boolean_cube(13), c2)), CapExceeded);
}

TEST(Embedding, Examples) {
  const auto c2 = named_group("C2");
  const auto b = BGModule::trivial_action(named_lattice("B"), c2);
  const auto e = embed_into_regular_power(b);
  EXPECT_EQ(e.copies, 1u);
  EXPECT_TRUE(e.images[b.module().bottom()].none());
  EXPECT_EQ(e.images[b.module().top()], Bits::from_mask(2, 3));

  const auto s3 = named_group("S3");
  const auto reg = free_module(s3, 1);
  EXPECT_EQ(embed_into_regular_power(reg).copies, 1u);

  const auto h = testing::subgroup_of_order(s3, 2);
  Bits gen(6);
  for (Element x : h.elements()) gen.set(x);
  const auto cosets = cyclic_submodule_of_free(s3, 1, gen);
  EXPECT_EQ(cosets.module().size(), 8u);
  const auto ce = embed_into_regular_power(cosets);
  EXPECT_EQ(ce.copies, 1u);
  EXPECT_TRUE(verify_embedding(cosets, ce).ok());
  // Images are constant on left cosets of one conjugate of H, fixed by the
  // chosen meet-irreducible representative.
  bool some_conjugate = false;
  for (Element c = 0; c < 6 && !some_conjugate; ++c) {
    const auto k = h.conjugate_by(c);
    bool constant = true;
    for (const auto& img : ce.images)
      for (Element x = 0; x < 6; ++x)
        for (Element y : k.elements()) constant = constant && img.test(x) == img.test(s3.mul(x, y));
    some_conjugate = constant;
  }
  EXPECT_TRUE(some_conjugate);
}

TEST(BGModuleCreate, Validates) {
  const auto c2 = named_group("C2");
  const auto d = named_lattice("diamond");
  // Swapping a and b is a valid action; moving bottom is not.
  const auto a = idx(d, "a"), b = idx(d, "b");
  std::vector<std::size_t> swap(8);
  for (std::size_t x = 0; x < 4; ++x) {
    swap[x] = x;
    swap[4 + x] = x == a ? b : x == b ? a : x;
  }
  EXPECT_NO_THROW(BGModule::create(d, c2, swap));
  std::vector<std::size_t> bad = swap;
  std::swap(bad[4 + d.bottom()], bad[4 + a]);
  EXPECT_THROW(BGModule::create(d, c2, bad), ValidationError);
  EXPECT_THROW(BGModule::create(d, c2, {0, 1, 2, 3}), ValidationError);
  // A chain admits no nontrivial order automorphism.
  const auto c3 = chain(3);
  EXPECT_THROW(BGModule::create(c3, c2, {0, 1, 2, 0, 2, 1}), ValidationError);
}

// Properties over the test lattices.

TEST(LatticeProperties, ReflexiveAndHomCount) {
  const auto b = named_lattice("B");
  for (const auto& m : test_lattices()) {
    const auto d = dual(m);
    EXPECT_EQ(d.module.size(), m.size());
    for (std::size_t x = 0; x < m.size(); ++x)
      for (std::size_t y = 0; y < m.size(); ++y) EXPECT_EQ(m.leq(x, y), d.module.leq(d.psi[y], d.psi[x]));
    const auto dd = double_dual_canonical(m);
    EXPECT_TRUE(dd.is_isomorphism());
    EXPECT_TRUE(dd.is_monomorphism());
    EXPECT_EQ(oracle::enumerate_all_module_homs(m, b).homs.size(), m.size());
  }
}

TEST(LatticeProperties, IrreduciblesMatchCoverCounts) {
  for (const auto& m : test_lattices()) {
    EXPECT_EQ(join_irreducibles(m), reference_join_irreducibles(m));
    EXPECT_EQ(meet_irreducibles(m), reference_meet_irreducibles(m));
    // Every element is the join of the join-irreducibles below it.
    const auto ji = join_irreducibles(m);
    for (std::size_t x = 0; x < m.size(); ++x) {
      std::size_t acc = m.bottom();
      for (std::size_t j : ji)
        if (m.leq(j, x)) acc = m.join(acc, j);
      EXPECT_EQ(acc, x);
    }
  }
}

TEST(LatticeProperties, JoinIsLeastUpperBound) {
  for (const auto& m : test_lattices()) {
    for (std::size_t a = 0; a < m.size(); ++a) {
      EXPECT_TRUE(m.leq(m.bottom(), a));
      EXPECT_TRUE(m.leq(a, m.top()));
      for (std::size_t b = 0; b < m.size(); ++b) {
        const auto j = m.join(a, b);
        EXPECT_EQ(j, m.join(b, a));
        EXPECT_TRUE(m.leq(a, j) && m.leq(b, j));
        for (std::size_t u = 0; u < m.size(); ++u)
          if (m.leq(a, u) && m.leq(b, u)) {
            EXPECT_TRUE(m.leq(j, u));
          }
      }
    }
  }
}

TEST(LatticeProperties, QuasiFreeIffAtomistic) {
  for (const auto& m : test_lattices()) {
    const auto r = quasi_basis_search(m);
    EXPECT_EQ(std::holds_alternative<QuasiBasis>(r), is_atomistic(m));
    if (const auto* nq = std::get_if<NotQuasiFree>(&r)) {
      std::size_t acc = m.bottom();
      for (std::size_t x : nq->rhs) acc = m.join(acc, x);
      EXPECT_EQ(acc, nq->lhs);
      EXPECT_NE(nq->rhs, std::vector<std::size_t>{nq->lhs});
    }
  }
}

TEST(BGModuleProperties, CyclicModulesAreQuasiFreeOfOrbitRank) {
  auto rng = testing::engine(44);
  for (const auto& name : zoo_group_names()) {
    const auto g = named_group(name);
    for (std::size_t k = 1; k <= 2; ++k) {
      if (k * g.order() > 24) continue;
      for (int trial = 0; trial < 15; ++trial) {
        Bits gen(k * g.order());
        while (gen.none())
          for (std::size_t i = 0; i < gen.width(); ++i) gen.set(i, rng() % 2);
        const auto m = cyclic_submodule_of_free(g, k, gen);
        const auto r = quasi_basis_search(m.module());
        ASSERT_TRUE(std::holds_alternative<QuasiBasis>(r)) << name << " " << gen.to_string();
        const auto x = *m.module().index_of(gen);
        EXPECT_EQ(std::get<QuasiBasis>(r).rank() * element_stabilizer(m, x).size(), g.order());
      }
    }
  }
}

TEST(BGModuleProperties, AntichainChainBoundAndEmbedding) {
  auto rng = testing::engine(45);
  for (const std::string name : {"C2", "C3", "C4", "C2xC2", "S3", "D4"}) {
    const auto g = named_group(name);
    for (int trial = 0; trial < 12; ++trial) {
      const auto m = testing::random_bg_module(rng, g);
      EXPECT_TRUE(orbit_antichain_check(m).holds);
      if (m.module().size() > 1 && join_irreducibles(m.module()).size() <= kDefaultGeneratorCountCap) {
        EXPECT_LE(max_chain_length_join_irreducibles(m), generator_count(m));
      }
      const auto e = embed_into_regular_power(m);
      EXPECT_TRUE(verify_embedding(m, e).ok()) << name;
      // Equivariance checked here directly on every element.
      for (Element x = 0; x < g.order(); ++x)
        for (std::size_t y = 0; y < m.module().size(); ++y) {
          Bits moved(e.images[y].width());
          for (std::size_t c = 0; c < moved.width(); ++c)
            if (e.images[y].test(c)) {
              const std::size_t copy = c / g.order(), h = c % g.order();
              moved.set(copy * g.order() + g.mul(x, static_cast<Element>(h)));
            }
          EXPECT_EQ(e.images[m.act(x, y)], moved);
        }
      const auto d = dual_bg_module(m);
      EXPECT_EQ(d.group(), g.opposite());
      EXPECT_TRUE(orbit_antichain_check(d).holds);
    }
  }
}

TEST(BitsBasics, Operations) {
  auto a = Bits::from_mask(10, 0b1010);
  EXPECT_EQ(a.count(), 2u);
  EXPECT_EQ(a.to_string(), "{1,3}");
  Bits wide(130);
  wide.set(129);
  wide.set(0);
  EXPECT_EQ(wide.count(), 2u);
  EXPECT_TRUE(Bits(130).subset_of(wide));
  EXPECT_FALSE(wide.subset_of(Bits(130)));
  EXPECT_LT(Bits::from_mask(4, 7), Bits::from_mask(4, 8));
  EXPECT_THROW(a.set(10), std::out_of_range);
  EXPECT_THROW(a |= wide, std::invalid_argument);
}

}  // namespace
}  // namespace idemrep
