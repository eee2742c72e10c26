#include <gtest/gtest.h>

#include <random>

#include "posettop/families.hpp"
#include "posettop/oracles.hpp"
#include "posettop/poset.hpp"
#include "support.hpp"

using namespace posettop;

namespace {

Poset b2_by_subsets() {
  return Poset::from_covers({"0", "1", "2", "12"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

}  // namespace

TEST(Poset, SingletonHasLengthZero) {
  auto p = Poset::from_covers({"a"}, {});
  EXPECT_EQ(p.size(), 1u);
  EXPECT_EQ(poset_length(p), 0);
  EXPECT_TRUE(check_invariants(p));
}

TEST(Poset, CycleIsRejected) {
  try {
    Poset::from_covers({"a", "b", "c"}, {{0, 1}, {1, 2}, {2, 0}});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("cycle"), std::string::npos);
  }
}

TEST(Poset, RelationsAreTransitivelyReduced) {
  auto p = Poset::from_covers({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(p.cover_count(), 2u);
  EXPECT_TRUE(p.less(0, 2));
}

TEST(Poset, SubsetConstructionIsB2) {
  auto p = b2_by_subsets();
  auto b = boolean_lattice(2);
  EXPECT_EQ(p.cover_count(), b.cover_count());
  EXPECT_EQ(mobius_invariant(p), 1);
  EXPECT_TRUE(is_lattice(p));
}

TEST(Mobius, BooleanAndDivisor) {
  auto b3 = boolean_lattice(3);
  EXPECT_EQ(b3.mobius(0, 7), -1);
  auto d12 = divisor_lattice(12);
  EXPECT_EQ(mobius_invariant(d12), 0);
  for (Element x = 0; x < d12.size(); ++x) EXPECT_EQ(d12.mobius(x, x), 1);
}

TEST(Mobius, SmallInvariants) {
  EXPECT_EQ(mobius_invariant(boolean_lattice(2)), 1);
  EXPECT_EQ(mobius_invariant(partition_lattice(3).poset), 2);
  EXPECT_EQ(mobius_invariant(chain_poset(1)), -1);
}

TEST(Mobius, ThrowsOffInterval) {
  auto p = antichain_poset(2);
  EXPECT_THROW(p.mobius(0, 1), Error);
}

TEST(Mobius, BooleanFormulaAllPairs) {
  auto b = boolean_lattice(4);
  for (Element x = 0; x < 16; ++x)
    for (Element y = 0; y < 16; ++y) {
      if ((x & ~y) != 0) continue;
      int k = __builtin_popcountl(y & ~x);
      EXPECT_EQ(b.mobius(x, y), k % 2 ? -1 : 1);
    }
}

TEST(Mobius, MatchesChainCountingOnRandomPosets) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto p = ref::random_poset(rng, 7, 0.35);
    for (Element x = 0; x < p.size(); ++x)
      for (Element y = 0; y < p.size(); ++y)
        if (p.leq(x, y)) ASSERT_EQ(p.mobius(x, y), ref::mobius_by_chains(p, x, y));
  }
}

TEST(Mobius, RowSumsVanish) {
  // sum_{x <= z <= y} mu(x, z) = 0 for x < y.
  auto p = partition_lattice(4).poset;
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y) {
      if (!p.less(x, y)) continue;
      Integer s = 0;
      for (Element z = 0; z < p.size(); ++z)
        if (p.leq(x, z) && p.leq(z, y)) s += p.mobius(x, z);
      EXPECT_EQ(s, 0);
    }
}

TEST(Product, B1TimesB1IsDiamond) {
  auto d = direct_product(boolean_lattice(1), boolean_lattice(1));
  EXPECT_EQ(d.size(), 4u);
  EXPECT_EQ(d.cover_count(), 4u);
  EXPECT_EQ(mobius_invariant(d), 1);
  auto c = direct_product(chain_poset(1), chain_poset(1));
  EXPECT_EQ(mobius_invariant(c), 1);
}

TEST(Product, MobiusIsMultiplicative) {
  auto b2 = boolean_lattice(2);
  EXPECT_EQ(mobius_invariant(direct_product(b2, b2)), 1);
  auto pi3 = partition_lattice(3).poset;
  auto c2 = chain_poset(2);
  EXPECT_EQ(mobius_invariant(direct_product(pi3, c2)), mobius_invariant(pi3) * mobius_invariant(c2));
}

TEST(Join, AntichainsAndEmpty) {
  auto j = ordinal_join(antichain_poset(2), antichain_poset(2));
  EXPECT_EQ(j.cover_count(), 4u);
  Poset empty = antichain_poset(0);
  auto p = partition_lattice(3).poset;
  EXPECT_EQ(ordinal_join(p, empty).cover_count(), p.cover_count());
  EXPECT_EQ(maximal_chains(j).size(), 4u);
}

TEST(Derived, ProperPartAndBoundedExtension) {
  EXPECT_EQ(proper_part(boolean_lattice(3)).poset.size(), 6u);
  auto p = boolean_lattice(2);
  auto ext = bounded_extension(p);
  EXPECT_EQ(ext.poset.size(), 6u);
  EXPECT_EQ(ext.parent.front(), kNoElement);
  EXPECT_EQ(ext.parent.back(), kNoElement);
  auto back = proper_part(ext.poset);
  EXPECT_EQ(back.poset.size(), p.size());
  EXPECT_EQ(back.poset.cover_count(), p.cover_count());
}

TEST(Derived, DualIsInvolution) {
  auto p = partition_lattice(4).poset;
  auto dd = dual(dual(p).poset).poset;
  EXPECT_EQ(dd.covers(), p.covers());
}

TEST(Derived, IntervalsHaveExpectedSizes) {
  auto b = boolean_lattice(4);
  EXPECT_EQ(closed_interval(b, 0, 15).poset.size(), 16u);
  EXPECT_EQ(open_interval(b, 1, 15).poset.size(), 6u);
  EXPECT_EQ(upper_set(b, 3, true).poset.size(), 3u);
  EXPECT_EQ(lower_set(b, 7, false).poset.size(), 8u);
}

TEST(Structure, PartitionLatticeFour) {
  auto s = structure(partition_lattice(4).poset);
  EXPECT_TRUE(s.is_lattice);
  EXPECT_EQ(s.length, 3);
  EXPECT_EQ(s.atoms.size(), 6u);
  EXPECT_EQ(s.coatoms.size(), 7u);
  EXPECT_EQ(s.maximal_chains.size(), 18u);
}

TEST(Structure, BooleanIsPure) {
  for (int n = 0; n <= 5; ++n) {
    auto b = boolean_lattice(n);
    EXPECT_TRUE(is_pure(b));
    EXPECT_EQ(poset_length(b), n);
    EXPECT_EQ(count_maximal_chains(b), factorial(n));
  }
}

TEST(Structure, BowtieIsNotLattice) {
  auto p = Poset::from_covers({"a", "b", "c", "d"}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  EXPECT_FALSE(is_lattice(p));
  EXPECT_FALSE(meet(p, 2, 3).has_value());
}

TEST(Structure, MaximalChainsAreLexicographic) {
  auto chains = maximal_chains(boolean_lattice(3));
  ASSERT_EQ(chains.size(), 6u);
  for (std::size_t i = 1; i < chains.size(); ++i) EXPECT_LT(chains[i - 1].elements, chains[i].elements);
}

TEST(Structure, RankFunctionOfPartitionLatticeIsBlockCount) {
  auto pi = partition_lattice(5);
  auto r = rank_function(pi.poset);
  for (Element x = 0; x < pi.poset.size(); ++x)
    EXPECT_EQ(r[x], 5 - static_cast<long>(pi.partitions[x].size()));
}

TEST(Invariants, RandomPosetsAreConsistent) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) EXPECT_TRUE(check_invariants(ref::random_poset(rng, 9, 0.3)));
}
