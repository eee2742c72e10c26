#include <gtest/gtest.h>

#include <algorithm>

#include "posettop/families.hpp"
#include "posettop/homology.hpp"
#include "posettop/identities.hpp"
#include "posettop/oracles.hpp"
#include "posettop/shelling.hpp"

using namespace posettop;

namespace {

Poset two_component_poset() {
  std::vector<std::string> labels{"0", "a", "b", "c", "d", "x", "y", "1"};
  return Poset::from_covers(labels, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 5}, {3, 6}, {4, 6}, {5, 7}, {6, 7}});
}

BlockSizeSpec k_equal_spec(int k) {
  BlockSizeSpec s;
  s.kind = BlockSizeSpec::Kind::k_equal;
  s.k = k;
  return s;
}

}  // namespace

TEST(Shelling, EveryOrderOfTetrahedronBoundary) {
  auto c = skeleton(SimplicialComplex::simplex(4), 2);
  auto order = c.facets();
  std::sort(order.begin(), order.end());
  int count = 0;
  do {
    auto r = is_shelling(c, order);
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.homology_facet_counts, (std::map<long, long>{{2, 1}}));
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  EXPECT_EQ(count, 24);
}

TEST(Shelling, DisjointEdges) {
  auto c = SimplicialComplex::from_facets(4, {{0, 1}, {2, 3}});
  EXPECT_FALSE(is_shelling(c, {{0, 1}, {2, 3}}).ok);
  EXPECT_FALSE(is_shelling(c, {{2, 3}, {0, 1}}).ok);
  EXPECT_EQ(find_shelling(c).status, SearchStatus::none);
}

TEST(Shelling, SingleFacetAndCones) {
  auto s = SimplicialComplex::simplex(3);
  EXPECT_TRUE(is_shelling(s, s.facets()).ok);
  auto apex = SimplicialComplex::simplex(1);
  auto cone = join(skeleton(SimplicialComplex::simplex(3), 1), apex);
  EXPECT_EQ(find_shelling(cone).status, SearchStatus::found);
  // Coning does not repair a nonshellable base.
  auto bad = join(SimplicialComplex::from_facets(4, {{0, 1}, {2, 3}}), apex);
  EXPECT_EQ(find_shelling(bad).status, SearchStatus::none);
}

TEST(Shelling, NonpureTriangleWithPendantEdge) {
  auto c = SimplicialComplex::from_facets(4, {{0, 1, 2}, {2, 3}});
  auto r = find_shelling(c);
  ASSERT_EQ(r.status, SearchStatus::found);
  EXPECT_TRUE(is_shelling(c, r.order).ok);
}

TEST(Shelling, HomologyFacetsMatchBetti) {
  // For a shelling, homology facets of dimension i count beta_i.
  for (int n = 4; n <= 6; ++n) {
    auto c = matching_complex(n);
    auto r = find_shelling(c, 64);
    if (r.status != SearchStatus::found) continue;
    auto h = homology(c);
    for (auto& [d, k] : r.homology_facet_counts) EXPECT_EQ(h.betti(d), k) << "n=" << n;
  }
}

TEST(ElLabeling, BuiltinsVerify) {
  auto b4 = boolean_lattice(4);
  EXPECT_TRUE(verify_el_labeling(b4, boolean_labeling(b4)).ok);
  auto pi4 = partition_lattice(4);
  EXPECT_TRUE(verify_el_labeling(pi4.poset, partition_labeling(pi4, PartitionLabeling::max_union)).ok);
  EXPECT_TRUE(verify_el_labeling(pi4.poset, partition_labeling(pi4, PartitionLabeling::min_max)).ok);
  auto k63 = block_restricted_partition_poset(6, k_equal_spec(3));
  EXPECT_TRUE(verify_el_labeling(k63.poset, k_equal_labeling(k63)).ok);
}

TEST(ElLabeling, ConstantLabelsFail) {
  auto b3 = boolean_lattice(3);
  EdgeLabeling lab;
  for (auto& c : b3.covers()) lab[c] = {1};
  auto r = verify_el_labeling(b3, lab);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(r.interval.has_value());
}

TEST(ElLabeling, NoncrossingStanleyIsAnRLabeling) {
  auto nc = noncrossing_partition_lattice(4);
  auto lab = noncrossing_labeling(nc);
  EXPECT_TRUE(verify_r_labeling(nc.poset, lab).ok);
  EXPECT_EQ(decreasing_chains(nc.poset, lab).size(), 5u);
  EXPECT_TRUE(verify_el_labeling(nc.poset, partition_labeling(nc, PartitionLabeling::min_max)).ok);
}

TEST(ElLabeling, Conventions) {
  std::vector<Label> w{{1}, {1}};
  EXPECT_FALSE(is_increasing(w));
  EXPECT_TRUE(is_decreasing(w));
  EXPECT_TRUE(is_increasing(w, ElConvention::weak_increasing));
  EXPECT_FALSE(is_decreasing(w, ElConvention::weak_increasing));
}

TEST(BettiFromEl, DecreasingChainCounts) {
  auto pi4 = partition_lattice(4);
  auto lam = partition_labeling(pi4, PartitionLabeling::max_union);
  auto dec = decreasing_chains(pi4.poset, lam);
  EXPECT_EQ(dec.size(), 6u);
  for (auto& c : dec) EXPECT_EQ(c.elements.size(), 4u);
  EXPECT_EQ(betti_from_el(pi4.poset, lam), (std::map<long, Integer>{{1, 6}}));
  for (int n = 1; n <= 5; ++n) {
    auto b = boolean_lattice(n);
    EXPECT_EQ(decreasing_chains(b, boolean_labeling(b)).size(), 1u);
  }
  auto k63 = block_restricted_partition_poset(6, k_equal_spec(3));
  EXPECT_EQ(betti_from_el(k63.poset, k_equal_labeling(k63)), (std::map<long, Integer>{{1, 10}, {2, 10}}));
}

TEST(BettiFromEl, AgreesWithSmithOnPartitionLattices) {
  for (int n = 3; n <= 5; ++n) {
    auto pi = partition_lattice(n);
    auto el = betti_from_el(pi.poset, partition_labeling(pi, PartitionLabeling::min_max));
    EXPECT_EQ(el, betti_map(poset_homology(proper_part(pi.poset).poset)));
  }
}

TEST(BettiFromEl, RejectsNonEl) {
  auto b3 = boolean_lattice(3);
  EdgeLabeling lab;
  for (auto& c : b3.covers()) lab[c] = {1};
  EXPECT_THROW(betti_from_el(b3, lab), Error);
}

TEST(RankSelection, DescentCountsMatchOracles) {
  auto b4 = boolean_lattice(4);
  auto lab = boolean_labeling(b4);
  EXPECT_EQ(descent_count(b4, lab, {1, 3}), 5);
  EXPECT_EQ(descent_count(b4, lab, {1, 2, 3}), 1);
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::set<long> r;
    std::set<int> ri;
    for (int i = 0; i < 3; ++i)
      if (mask >> i & 1) {
        r.insert(i + 1);
        ri.insert(i + 1);
      }
    EXPECT_EQ(descent_count(b4, lab, r), descent_class(4, ri));
    if (!r.empty()) {
      auto h = poset_homology(rank_selected(b4, r).poset);
      EXPECT_EQ(h.betti(static_cast<long>(r.size()) - 1), descent_class(4, ri));
    }
  }
}

TEST(RankSelection, QAnalogueOnSubspaces) {
  auto v = subspace_lattice(2, 2);
  auto at = atoms(v.poset);
  std::sort(at.begin(), at.end());
  auto lab = geometric_labeling(v.poset, at);
  EXPECT_EQ(descent_count(v.poset, lab, {1}), descent_class_q(2, {1}, 2));
  EXPECT_EQ(descent_count(v.poset, lab, {1}), 2);
}

TEST(RecursiveAtoms, TotallySemimodularAnyOrder) {
  for (auto p : {boolean_lattice(3), partition_lattice(3).poset}) {
    auto at = atoms(p);
    std::sort(at.begin(), at.end());
    do {
      EXPECT_TRUE(verify_recursive_atom_ordering(p, atom_order_certificate(p, at)).ok);
    } while (std::next_permutation(at.begin(), at.end()));
  }
}

TEST(RecursiveAtoms, SearchFindsAndFails) {
  auto b4 = boolean_lattice(4);
  auto s = search_recursive_atom_ordering(b4);
  ASSERT_EQ(s.status, SearchStatus::found);
  EXPECT_TRUE(verify_recursive_atom_ordering(b4, *s.certificate).ok);
  EXPECT_EQ(search_recursive_atom_ordering(two_component_poset()).status, SearchStatus::none);
}

TEST(Nbc, BasesCountMobius) {
  auto pi4 = partition_lattice(4).poset;
  auto at = atoms(pi4);
  std::sort(at.begin(), at.end());
  EXPECT_EQ(nbc_bases(pi4, at).size(), 6u);
  auto pi3 = partition_lattice(3).poset;
  auto a3 = atoms(pi3);
  std::sort(a3.begin(), a3.end());
  EXPECT_EQ(nbc_bases(pi3, a3).size(), 2u);
  auto b4 = boolean_lattice(4);
  auto ab = atoms(b4);
  EXPECT_EQ(nbc_bases(b4, ab).size(), 1u);
  EXPECT_TRUE(is_geometric_lattice(pi4));
  EXPECT_FALSE(is_geometric_lattice(noncrossing_partition_lattice(4).poset));
}

TEST(Nbc, CountEqualsAbsMobiusForGeometricLattices) {
  std::vector<Poset> lattices{partition_lattice(5).poset, boolean_lattice(5), subspace_lattice(3, 2).poset,
                              type_b_partition_lattice(3).poset};
  for (const auto& l : lattices) {
    auto at = atoms(l);
    std::sort(at.begin(), at.end());
    EXPECT_EQ(Integer(nbc_bases(l, at).size()), abs(mobius_invariant(l)));
  }
}
