#include <gtest/gtest.h>

#include "posettop/families.hpp"
#include "posettop/homology.hpp"
#include "posettop/identities.hpp"
#include "posettop/oracles.hpp"
#include "support.hpp"

using namespace posettop;

namespace {

BlockSizeSpec spec(BlockSizeSpec::Kind kind, int d, int k) {
  BlockSizeSpec s;
  s.kind = kind;
  s.d = d;
  s.k = k;
  return s;
}

BettiMap proper_betti(const Poset& p) { return betti_map(poset_homology(proper_part(p).poset)); }

std::size_t noncrossing_count_bruteforce(int n) {
  std::size_t count = 0;
  for (const auto& p : set_partitions(n)) {
    bool ok = true;
    for (std::size_t i = 0; i < p.size() && ok; ++i)
      for (std::size_t j = 0; j < p.size() && ok; ++j) {
        if (i == j) continue;
        for (int a : p[i])
          for (int b : p[i])
            for (int c : p[j])
              for (int d : p[j])
                if (a < c && c < b && b < d) ok = false;
      }
    count += ok;
  }
  return count;
}

}  // namespace

TEST(Partitions, SizesAreBellNumbers) {
  for (int n = 0; n <= 7; ++n) EXPECT_EQ(Integer(set_partitions(n).size()), ref::bell(n));
  auto pi4 = partition_lattice(4);
  EXPECT_EQ(pi4.poset.size(), 15u);
  EXPECT_EQ(mobius_invariant(pi4.poset), -6);
}

TEST(Partitions, RankSizesAreStirlingNumbers) {
  auto pi = partition_lattice(6);
  std::map<std::size_t, Integer> by_blocks;
  for (auto& p : pi.partitions) by_blocks[p.size()] += 1;
  for (int k = 1; k <= 6; ++k) EXPECT_EQ(by_blocks[static_cast<std::size_t>(k)], ref::stirling2(6, k));
}

TEST(Partitions, MobiusIsSignedFactorial) {
  for (int n = 1; n <= 6; ++n) {
    Integer expect = factorial(n - 1);
    if ((n - 1) % 2) expect = -expect;
    EXPECT_EQ(mobius_invariant(partition_lattice(n).poset), expect);
  }
}

TEST(Partitions, RefinesAndLabels) {
  SetPartition fine{{1}, {2}, {3}};
  SetPartition coarse{{1, 2}, {3}};
  EXPECT_TRUE(refines(fine, coarse, 3));
  EXPECT_FALSE(refines(coarse, fine, 3));
  EXPECT_EQ(partition_label(coarse, 3), "12|3");
}

TEST(Noncrossing, SizeIsCatalanAndMobius) {
  for (int n = 1; n <= 6; ++n) {
    auto nc = noncrossing_partition_lattice(n);
    EXPECT_EQ(nc.poset.size(), noncrossing_count_bruteforce(n));
    EXPECT_EQ(Integer(nc.poset.size()), catalan(n));
  }
  auto nc4 = noncrossing_partition_lattice(4);
  EXPECT_EQ(nc4.poset.size(), 14u);
  EXPECT_EQ(mobius_invariant(nc4.poset), -5);
}

TEST(Bruhat, S3OpenIntervalIsHexagon) {
  auto b = bruhat_order(3);
  EXPECT_EQ(b.poset.size(), 6u);
  auto open = proper_part(b.poset).poset;
  EXPECT_EQ(open.size(), 4u);
  EXPECT_EQ(mobius_invariant(b.poset), -1);
  EXPECT_EQ(poset_homology(open).betti(1), 1);
}

TEST(Bruhat, MobiusIsSignOfLength) {
  // Bruhat intervals are Eulerian: mu(u, w) = (-1)^{l(w) - l(u)}.
  auto b = bruhat_order(4);
  auto r = rank_function(b.poset);
  for (Element x = 0; x < b.poset.size(); ++x)
    for (Element y = 0; y < b.poset.size(); ++y)
      if (b.poset.leq(x, y)) EXPECT_EQ(b.poset.mobius(x, y), (r[y] - r[x]) % 2 ? -1 : 1);
}

TEST(BlockFamilies, FrozenBettiNumbers) {
  EXPECT_EQ(proper_betti(block_restricted_partition_poset(4, spec(BlockSizeSpec::Kind::zero_mod_d, 2, 0)).poset),
            (BettiMap{{0, 2}}));
  auto odd = block_restricted_partition_poset(5, spec(BlockSizeSpec::Kind::k_mod_d, 2, 1));
  auto odd_proper = proper_part(odd.poset).poset;
  EXPECT_EQ(odd_proper.size(), 10u);
  EXPECT_EQ(odd_proper.cover_count(), 0u);
  EXPECT_EQ(proper_betti(odd.poset), (BettiMap{{0, 9}}));
  auto k63 = block_restricted_partition_poset(6, spec(BlockSizeSpec::Kind::k_equal, 1, 3));
  EXPECT_EQ(proper_betti(k63.poset), (BettiMap{{1, 10}, {2, 10}}));
}

TEST(BlockFamilies, KEqualMatchesBrokenHookFormula) {
  for (int n = 3; n <= 7; ++n)
    for (int k = n == 7 ? 3 : 2; k <= n; ++k) {
      auto f = block_restricted_partition_poset(n, spec(BlockSizeSpec::Kind::k_equal, 1, k));
      BettiMap expect;
      for (auto& [i, v] : kequal_betti(n, k))
        if (v != 0) expect[i] = v;
      EXPECT_EQ(proper_betti(f.poset), expect) << "n=" << n << " k=" << k;
    }
}

TEST(BlockFamilies, AllowsPredicate) {
  auto s = spec(BlockSizeSpec::Kind::k_mod_d, 3, 1);
  EXPECT_TRUE(s.allows(1));
  EXPECT_TRUE(s.allows(4));
  EXPECT_FALSE(s.allows(3));
  auto e = spec(BlockSizeSpec::Kind::k_equal, 1, 3);
  EXPECT_TRUE(e.allows(1));
  EXPECT_TRUE(e.allows(5));
  EXPECT_FALSE(e.allows(2));
}

TEST(TypeB, SizesAndHomology) {
  // Dowling numbers for the group of order 2.
  std::vector<std::size_t> sizes{1, 2, 6, 24, 116};
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(type_b_partition_lattice(n).poset.size(), sizes[static_cast<std::size_t>(n)]);
  for (int n = 2; n <= 4; ++n)
    EXPECT_EQ(proper_betti(type_b_partition_lattice(n).poset), (BettiMap{{n - 2, double_factorial(2 * n - 1)}}));
}

TEST(Subspaces, CountsAreGaussianBinomials) {
  auto v = subspace_lattice(3, 2);
  std::map<int, Integer> by_dim;
  for (int d : v.dims) by_dim[d] += 1;
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(by_dim[k], gaussian_binomial(3, k, 2));
  // mu(V_n(q)) = (-1)^n q^{n choose 2}
  EXPECT_EQ(mobius_invariant(v.poset), -8);
  EXPECT_EQ(mobius_invariant(subspace_lattice(2, 3).poset), 3);
}

TEST(CrossPolytope, SquareFaceLattice) {
  auto l = cross_polytope_face_lattice(2);
  EXPECT_EQ(l.size(), 10u);
  // Eulerian of rank 3.
  EXPECT_EQ(mobius_invariant(l), -1);
  EXPECT_TRUE(is_lattice(l));
  // Octahedron: f = (6, 12, 8) plus bottom and top.
  EXPECT_EQ(cross_polytope_face_lattice(3).size(), 28u);
}

TEST(Words, InjectiveAndNormal) {
  auto i44 = word_poset(4, 4, WordKind::injective);
  EXPECT_EQ(i44.poset.size(), 65u);
  EXPECT_EQ(proper_betti(i44.poset), (BettiMap{{3, 9}}));
  auto n33 = word_poset(3, 3, WordKind::normal);
  EXPECT_EQ(proper_betti(n33.poset), (BettiMap{{2, 8}}));
  auto w32 = word_poset(3, 2, WordKind::all);
  EXPECT_EQ(proper_betti(w32.poset).at(1), 4);
}

TEST(Graphs, PredicatesOnSmallGraphs) {
  // Path 0-1-2-3.
  std::uint32_t path = 0;
  path |= 1u << edge_index(4, 0, 1);
  path |= 1u << edge_index(4, 1, 2);
  path |= 1u << edge_index(4, 2, 3);
  EXPECT_TRUE(graph_connected(4, path));
  EXPECT_FALSE(graph_k_connected(4, path, 2));
  EXPECT_TRUE(graph_d_edge_connected(4, path, 1));
  EXPECT_FALSE(graph_d_edge_connected(4, path, 2));
  EXPECT_TRUE(graph_has_perfect_matching(4, path));
  EXPECT_EQ(graph_edges(4).size(), 6u);
}

TEST(Graphs, FamilyHomology) {
  auto ncg = graph_property_poset(4, GraphPredicate::disconnected);
  EXPECT_EQ(proper_betti(ncg.poset), (BettiMap{{1, 6}}));
  auto cg = graph_property_poset(4, GraphPredicate::connected);
  EXPECT_EQ(proper_betti(cg.poset), (BettiMap{{2, 6}}));
}

TEST(Graphs, NoPerfectMatchingSpheres) {
  // Graphs on 4 nodes without a perfect matching: the boundary of the octahedron.
  auto npm = graph_property_poset(4, GraphPredicate::no_perfect_matching);
  EXPECT_EQ(proper_betti(npm.poset), (BettiMap{{2, 1}}));
  // On 6 nodes, as a complex on the 15 edges: 9 spheres of dimension 5.
  auto edges = graph_edges(6);
  std::vector<Face> faces;
  for (std::uint32_t g = 0; g < (1u << edges.size()); ++g)
    if (!graph_has_perfect_matching(6, g)) {
      Face f;
      for (std::uint32_t e = 0; e < edges.size(); ++e)
        if (g >> e & 1) f.push_back(e);
      faces.push_back(f);
    }
  auto c = generated(edges.size(), faces);
  EXPECT_EQ(betti_map(homology(c)), (BettiMap{{5, 9}}));
}

TEST(Complexes, MatchingAndChessboard) {
  auto m5 = matching_complex(5);
  EXPECT_EQ(m5.vertex_count(), 10u);
  EXPECT_EQ(homology(m5).betti(1), 6);
  auto c23 = chessboard_complex(2, 3);
  EXPECT_EQ(c23.vertex_count(), 6u);
  EXPECT_TRUE(c23.is_pure());
  EXPECT_EQ(betti_map(homology(c23)), (BettiMap{{1, 1}}));
}

TEST(Complexes, MatchingVertexCountsAndFacets) {
  for (int n = 2; n <= 7; ++n) {
    auto m = matching_complex(n);
    EXPECT_EQ(Integer(m.vertex_count()), binomial(n, 2));
    // Maximal matchings of K_n: (n-1)!! for even n, n!! for odd n.
    EXPECT_EQ(Integer(m.facets().size()), n % 2 ? double_factorial(n) : double_factorial(n - 1));
  }
}

TEST(Complexes, InflationOfAnEdge) {
  auto edge = SimplicialComplex::simplex(2);
  auto inf = inflation(edge, {2, 2});
  EXPECT_EQ(inf.vertex_count(), 4u);
  EXPECT_EQ(betti_map(homology(inf)), (BettiMap{{1, 1}}));
  auto tri = skeleton(SimplicialComplex::simplex(3), 1);
  EXPECT_EQ(inflation(tri, {1, 1, 1}), tri);
}

TEST(Complexes, ColoredChessboardWithOneColorIsChessboard) {
  EXPECT_EQ(homology(colored_chessboard_complex(3, 4, 1)), homology(chessboard_complex(3, 4)));
}

TEST(Labelings, GeometricLabelingOnPartitionLatticeIsEl) {
  auto pi = partition_lattice(4).poset;
  auto at = atoms(pi);
  std::sort(at.begin(), at.end());
  auto lab = geometric_labeling(pi, at);
  EXPECT_EQ(lab.size(), pi.cover_count());
}
