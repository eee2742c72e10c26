#include <gtest/gtest.h>

#include "posettop/families.hpp"
#include "posettop/homology.hpp"
#include "posettop/identities.hpp"
#include "posettop/oracles.hpp"
#include "support.hpp"

using namespace posettop;

namespace {

SimplicialComplex hollow_triangle() { return SimplicialComplex::from_facets(3, {{0, 1}, {1, 2}, {0, 2}}); }

SimplicialComplex rp2() {
  return SimplicialComplex::from_facets(6, {{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                                            {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}});
}

std::map<long, long> to_long(const BettiMap& b) {
  std::map<long, long> out;
  for (auto& [i, v] : b) out[i] = v.get_si();
  return out;
}

}  // namespace

TEST(ChainComplex, EdgeBoundaryAndAugmentation) {
  auto cc = chain_complex(SimplicialComplex::simplex(2));
  const auto& d1 = cc.boundary(1);
  EXPECT_EQ(d1.rows, 2u);
  EXPECT_EQ(d1.cols, 1u);
  EXPECT_EQ(d1.at(0, 0), -1);
  EXPECT_EQ(d1.at(1, 0), 1);
  const auto& d0 = cc.boundary(0);
  for (std::size_t c = 0; c < d0.cols; ++c) EXPECT_EQ(d0.at(0, c), 1);
}

TEST(ChainComplex, TriangleBoundaryRank) {
  auto cc = chain_complex(hollow_triangle());
  EXPECT_EQ(cc.boundary(1).rows, 3u);
  EXPECT_EQ(cc.boundary(1).cols, 3u);
  EXPECT_EQ(rank(cc.boundary(1)), 2u);
}

TEST(ChainComplex, DegenerateThrows) { EXPECT_THROW(chain_complex(SimplicialComplex::degenerate()), Error); }

TEST(Homology, FrozenExamples) {
  auto pi4 = homology(order_complex(proper_part(partition_lattice(4).poset).poset));
  EXPECT_EQ(pi4.betti(1), 6);
  EXPECT_TRUE(pi4.torsion_free());
  EXPECT_EQ(homology(hollow_triangle()).betti(1), 1);
  auto m55 = homology(chessboard_complex(5, 5));
  EXPECT_EQ(m55.betti(2), 0);
  EXPECT_EQ(m55.torsion(2), (std::vector<Integer>{3}));
}

TEST(Homology, ProjectivePlaneHasTwoTorsion) {
  auto h = homology(rp2());
  EXPECT_EQ(h.betti(1), 0);
  EXPECT_EQ(h.torsion(1), (std::vector<Integer>{2}));
  EXPECT_EQ(h.betti(2), 0);
  auto co = cohomology(rp2());
  EXPECT_EQ(co.torsion(2), (std::vector<Integer>{2}));
  EXPECT_TRUE(co.torsion(1).empty());
}

TEST(Homology, VoidComplexHasMinusOneClass) {
  auto h = homology(SimplicialComplex::void_complex(0));
  EXPECT_EQ(h.betti(-1), 1);
  EXPECT_EQ(h.dims.size(), 1u);
  EXPECT_TRUE(homology(SimplicialComplex::simplex(4)).dims.empty());
}

TEST(Homology, RationalRanksMatchDenseReference) {
  std::vector<SimplicialComplex> corpus{hollow_triangle(), rp2(), matching_complex(5), matching_complex(6),
                                        chessboard_complex(3, 4), order_complex(proper_part(boolean_lattice(4)).poset),
                                        order_complex(proper_part(partition_lattice(4).poset).poset)};
  for (const auto& c : corpus) {
    auto h = rational_homology(c);
    EXPECT_EQ(to_long(betti_map(h)), ref::rational_betti(c));
    EXPECT_EQ(betti_map(h), betti_map(homology(c)));
  }
}

TEST(Homology, PosetHomologyUsesOrderComplex) {
  auto p = proper_part(boolean_lattice(4)).poset;
  EXPECT_EQ(poset_homology(p), homology(order_complex(p)));
  EXPECT_EQ(to_long(betti_map(poset_homology(p))), ref::rational_betti(ref::chains_complex(p)));
}

TEST(Interval, SpecialCases) {
  auto b = boolean_lattice(4);
  EXPECT_EQ(betti_open_interval(b, 0, 15).betti(2), 1);
  EXPECT_EQ(betti_open_interval(b, 3, 3).betti(-2), 1);
  EXPECT_EQ(betti_open_interval(b, 1, 3).betti(-1), 1);
}

TEST(Interval, EulerCharacteristicIsMobius) {
  auto p = partition_lattice(5).poset;
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y) {
      if (!p.less(x, y)) continue;
      auto h = betti_open_interval(p, x, y);
      Integer chi = 0;
      for (auto& [i, g] : h.dims) chi += (i % 2 == 0 ? g.betti : Integer(-g.betti));
      EXPECT_EQ(chi, p.mobius(x, y));
    }
}

TEST(Laplacian, BettiMatchesKernelDimension) {
  EXPECT_EQ(laplacian_betti(hollow_triangle(), 1), 1);
  EXPECT_EQ(laplacian_betti(matching_complex(5), 1), 6);
  auto pi4 = order_complex(proper_part(partition_lattice(4).poset).poset);
  EXPECT_EQ(laplacian_betti(pi4, 1), 6);
  for (long i = -1; i <= 1; ++i) EXPECT_EQ(laplacian_betti(matching_complex(6), i), homology(matching_complex(6)).betti(i));
}

TEST(Laplacian, IsSymmetric) {
  auto l = laplacian_matrix(matching_complex(5), 1);
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = 0; j < l.size(); ++j) EXPECT_EQ(l[i][j], l[j][i]);
}

TEST(CohenMacaulay, Examples) {
  EXPECT_TRUE(cm_checks(skeleton(SimplicialComplex::simplex(4), 2)).cohen_macaulay);
  auto two_edges = SimplicialComplex::from_facets(4, {{0, 1}, {2, 3}});
  EXPECT_FALSE(cm_checks(two_edges).cohen_macaulay);
  auto k63 = block_restricted_partition_poset(6, [] {
    BlockSizeSpec s;
    s.kind = BlockSizeSpec::Kind::k_equal;
    s.k = 3;
    return s;
  }());
  auto r = cm_checks(order_complex(proper_part(k63.poset).poset));
  EXPECT_TRUE(r.sequentially_cohen_macaulay);
  EXPECT_FALSE(r.cohen_macaulay);
}

TEST(SplittingBasis, CyclesSpanPartitionHomology) {
  auto pi = partition_lattice(4);
  auto proper = proper_part(pi.poset);
  std::vector<Element> to_proper(pi.poset.size(), kNoElement);
  for (Element i = 0; i < proper.poset.size(); ++i) to_proper[proper.parent[i]] = i;
  std::vector<ChainVector> cycles;
  std::vector<int> sigma{1, 2, 3};
  do {
    auto perm = sigma;
    perm.push_back(4);
    std::vector<Element> sub;
    for (Element e : splitting_subposet(pi, perm))
      if (to_proper[e] != kNoElement) sub.push_back(to_proper[e]);
    cycles.push_back(fundamental_cycle(proper.poset, sub));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  EXPECT_EQ(cycles.size(), 6u);
  EXPECT_TRUE(independent_in_homology(proper.poset, cycles));
  EXPECT_EQ(homology_rank(proper.poset, cycles), 6u);
}

TEST(SplittingBasis, SingleChainIsNotASphere) {
  auto p = proper_part(boolean_lattice(3)).poset;
  auto chain = maximal_chains(p).front().elements;
  EXPECT_THROW(fundamental_cycle(p, chain), Error);
}
