#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "posettop/families.hpp"
#include "posettop/homology.hpp"
#include "posettop/identities.hpp"
#include "posettop/oracles.hpp"
#include "posettop/series.hpp"
#include "support.hpp"

using namespace posettop;

namespace {

std::vector<Element> rank_one_of_proper_boolean(const Derived& proper) {
  std::vector<Element> out;
  for (Element i = 0; i < proper.poset.size(); ++i)
    if (__builtin_popcountl(proper.parent[i]) == 1) out.push_back(i);
  return out;
}

std::vector<Element> permutation_action(int n, const Derived& proper, const std::vector<int>& g) {
  // g acts on subsets of [n] (bitmasks) and so on the proper part.
  std::map<Element, Element> by_mask;
  for (Element i = 0; i < proper.poset.size(); ++i) by_mask[proper.parent[i]] = i;
  std::vector<Element> out(proper.poset.size());
  for (Element i = 0; i < proper.poset.size(); ++i) {
    Element mask = proper.parent[i], image = 0;
    for (int b = 0; b < n; ++b)
      if (mask >> b & 1) image |= Element{1} << g[static_cast<std::size_t>(b)];
    out[i] = by_mask.at(image);
  }
  return out;
}

}  // namespace

TEST(Hall, FrozenExamples) {
  auto pi4 = proper_part(partition_lattice(4).poset).poset;
  auto h = philip_hall_check(pi4);
  EXPECT_TRUE(h.equal);
  EXPECT_EQ(h.mobius, -6);
  auto empty = philip_hall_check(antichain_poset(0));
  EXPECT_EQ(empty.mobius, -1);
  EXPECT_EQ(empty.reduced_euler, -1);
}

TEST(Hall, RandomPosetsAgainstChainCounts) {
  std::mt19937_64 rng(20240611);
  for (int t = 0; t < 100; ++t) {
    auto p = ref::random_poset(rng, 8, 0.3);
    auto h = philip_hall_check(p);
    ASSERT_TRUE(h.equal);
    auto ext = bounded_extension(p).poset;
    EXPECT_EQ(h.mobius, ref::mobius_by_chains(ext, 0, ext.size() - 1));
  }
}

TEST(EulerPoincare, Corpus) {
  for (const auto& c : {matching_complex(6), chessboard_complex(4, 4), SimplicialComplex::void_complex(0),
                        skeleton(SimplicialComplex::simplex(5), 2)}) {
    EXPECT_TRUE(euler_poincare_check(c));
    EXPECT_TRUE(boundary_squared_zero(chain_complex(c)));
  }
}

TEST(AlexanderDuality, GraphPosets) {
  auto ambient = proper_part(boolean_lattice(6));
  // Graph bitmask on the 6 edges of K_4 is the boolean id.
  std::vector<Element> sub;
  for (Element i = 0; i < ambient.poset.size(); ++i)
    if (!graph_connected(4, static_cast<std::uint32_t>(ambient.parent[i]))) sub.push_back(i);
  auto r = alexander_duality_check(ambient.poset, sub);
  EXPECT_TRUE(r.ok) << r.detail;
  EXPECT_EQ(r.lhs, (BettiMap{{1, 6}}));
  EXPECT_EQ(r.rhs, (BettiMap{{1, 6}}));
}

TEST(AlexanderDuality, RankOneOfBoolean) {
  auto ambient = proper_part(boolean_lattice(4));
  auto r = alexander_duality_check(ambient.poset, rank_one_of_proper_boolean(ambient));
  EXPECT_TRUE(r.ok) << r.detail;
  EXPECT_EQ(r.lhs, (BettiMap{{0, 3}}));
}

TEST(Kunneth, FrozenExamples) {
  auto a2 = antichain_poset(2);
  auto j = kunneth_check(a2, a2, KunnethKind::join);
  EXPECT_TRUE(j.ok);
  EXPECT_EQ(j.lhs, (BettiMap{{1, 1}}));
  auto pi3 = proper_part(partition_lattice(3).poset).poset;
  auto jj = kunneth_check(pi3, pi3, KunnethKind::join);
  EXPECT_TRUE(jj.ok);
  EXPECT_EQ(jj.lhs, (BettiMap{{1, 4}}));
  auto b2 = boolean_lattice(2);
  auto db = kunneth_check(b2, b2, KunnethKind::doubly_bounded_product);
  EXPECT_TRUE(db.ok);
  EXPECT_EQ(db.lhs, (BettiMap{{2, 1}}));
}

TEST(Kunneth, AllKindsOnPairs) {
  std::vector<Poset> ps{boolean_lattice(2), partition_lattice(3).poset, antichain_poset(2), chain_poset(2),
                        boolean_lattice(3)};
  for (const auto& p : ps)
    for (const auto& q : ps) {
      EXPECT_TRUE(kunneth_check(p, q, KunnethKind::join).ok);
      EXPECT_TRUE(kunneth_check(p, q, KunnethKind::ordinary_product).ok);
      if (p.bottom() && q.bottom()) EXPECT_TRUE(kunneth_check(p, q, KunnethKind::reduced_product).ok);
      if (is_bounded(p) && is_bounded(q)) EXPECT_TRUE(kunneth_check(p, q, KunnethKind::doubly_bounded_product).ok);
    }
}

TEST(Fiber, IdentityAndComponents) {
  auto p = proper_part(partition_lattice(4).poset).poset;
  std::vector<Element> id(p.size());
  std::iota(id.begin(), id.end(), 0);
  PosetMap f{p, p, id};
  EXPECT_TRUE(is_order_preserving(f));
  EXPECT_EQ(quillen_fiber_check(f).status, FiberStatus::holds);
  EXPECT_EQ(fiber_below(f, 0, false).size(), lower_set(p, 0, false).poset.size());
}

TEST(Fiber, NonMonotoneMapRejected) {
  auto c = chain_poset(1);
  PosetMap f{c, c, {1, 0}};
  EXPECT_FALSE(is_order_preserving(f));
}

TEST(Inflation, FormulaMatchesDirectHomology) {
  auto tri = skeleton(SimplicialComplex::simplex(3), 1);
  for (auto m : std::vector<std::vector<int>>{{1, 1, 1}, {2, 1, 3}, {2, 2, 2}}) {
    auto r = inflation_betti_check(tri, m);
    EXPECT_TRUE(r.ok) << r.detail;
    EXPECT_EQ(r.lhs, betti_map(homology(inflation(tri, m))));
  }
  auto r = inflation_betti_check(SimplicialComplex::simplex(2), {2, 2});
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.lhs, (BettiMap{{1, 1}}));
}

TEST(Whitney, DualOfEvenBlocks) {
  BlockSizeSpec s;
  s.kind = BlockSizeSpec::Kind::zero_mod_d;
  s.d = 2;
  auto even = block_restricted_partition_poset(4, s);
  auto d = dual(even.poset).poset;
  EXPECT_TRUE(is_semipure(d));
  auto b = whitney_betti(d);
  EXPECT_EQ(b, (BettiMap{{0, 2}}));
  // B_3 without its top: the hexagon with a bottom.
  auto b3 = boolean_lattice(3);
  auto no_top = induced_subposet(b3, {0, 1, 2, 3, 4, 5, 6}).poset;
  EXPECT_EQ(whitney_betti(no_top), (BettiMap{{1, 1}}));
  EXPECT_TRUE(whitney_betti(b3).empty());
}

TEST(Lefschetz, BooleanCycleHasMinusOne) {
  for (int n = 2; n <= 5; ++n) {
    auto proper = proper_part(boolean_lattice(n));
    std::vector<int> cycle(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
    auto g = permutation_action(n, proper, cycle);
    ASSERT_TRUE(is_automorphism(proper.poset, g));
    auto r = fixed_point_lefschetz(proper.poset, g);
    EXPECT_TRUE(r.equal);
    EXPECT_EQ(r.rhs, -1);
  }
}

TEST(Lefschetz, IdentityGivesEulerCharacteristic) {
  auto proper = proper_part(boolean_lattice(4));
  std::vector<Element> id(proper.poset.size());
  std::iota(id.begin(), id.end(), 0);
  auto r = fixed_point_lefschetz(proper.poset, id);
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.rhs, mobius_invariant(boolean_lattice(4)));
}

TEST(Crosscut, BooleanIsSphere) {
  auto c = crosscut_complex(boolean_lattice(3));
  EXPECT_EQ(c, skeleton(SimplicialComplex::simplex(3), 1));
  EXPECT_TRUE(crosscut_check(boolean_lattice(3)).ok);
  auto r = crosscut_check(partition_lattice(4).poset);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.lhs, (BettiMap{{1, 6}}));
}

TEST(Closure, IdentityIsClosure) {
  auto p = proper_part(boolean_lattice(3)).poset;
  std::vector<Element> id(p.size());
  std::iota(id.begin(), id.end(), 0);
  EXPECT_TRUE(is_closure_operator(p, id));
  EXPECT_TRUE(closure_check(p, id).ok);
}

TEST(Generating, EvenBlockSeriesMatchesPoset) {
  for (int steps = 2; steps <= 3; ++steps) {
    BettiGfRequest req;
    req.family = BlockFamily::zero_mod_d;
    req.n = steps;
    req.d = 2;
    BlockSizeSpec s;
    s.kind = BlockSizeSpec::Kind::zero_mod_d;
    s.d = 2;
    auto f = block_restricted_partition_poset(2 * steps, s);
    EXPECT_EQ(betti_gf(req), betti_map(poset_homology(proper_part(f.poset).poset)));
  }
}
