#include <gtest/gtest.h>

#include "posettop/families.hpp"
#include "posettop/io.hpp"
#include "posettop/shelling.hpp"

using namespace posettop;

TEST(Io, PosetRoundTrip) {
  auto p = partition_lattice(4).poset;
  auto text = poset_to_json(p);
  auto q = poset_from_json(text);
  EXPECT_EQ(q.labels(), p.labels());
  EXPECT_EQ(q.covers(), p.covers());
  EXPECT_EQ(poset_to_json(q), text);
}

TEST(Io, PosetRejectsMalformed) {
  EXPECT_THROW(poset_from_json("{"), Error);
  EXPECT_THROW(poset_from_json(R"({"labels":["a"],"covers":[[0,3]]})"), Error);
  EXPECT_THROW(poset_from_json(R"({"labels":["a","b"],"covers":[[0,1],[1,0]]})"), Error);
  EXPECT_THROW(poset_from_json(R"({"covers":[]})"), Error);
}

TEST(Io, ComplexRoundTrip) {
  for (const auto& c : {matching_complex(5), SimplicialComplex::void_complex(2), SimplicialComplex::degenerate(1)}) {
    auto back = complex_from_json(complex_to_json(c));
    EXPECT_EQ(back, c);
  }
  EXPECT_THROW(complex_from_json(R"({"vertex_count":2,"facets":[[0,5]]})"), Error);
}

TEST(Io, HomologySchema) {
  HomologyResult h;
  h.dims[2] = HomologyGroup{0, {3}};
  EXPECT_EQ(homology_to_json(h), R"({"dims":{"2":{"betti":0,"torsion":[3]}}})");
}

TEST(Io, LabelingRoundTrip) {
  auto b = boolean_lattice(3);
  auto lab = boolean_labeling(b);
  EXPECT_EQ(labeling_from_json(labeling_to_json(lab)), lab);
}

TEST(Io, CertificateRoundTrip) {
  auto b = boolean_lattice(3);
  auto s = search_recursive_atom_ordering(b);
  ASSERT_TRUE(s.certificate.has_value());
  auto text = certificate_to_json(*s.certificate);
  auto back = certificate_from_json(text);
  EXPECT_EQ(certificate_to_json(back), text);
  EXPECT_TRUE(verify_recursive_atom_ordering(b, back).ok);
}

TEST(Io, ArrangementRoundTrip) {
  auto a = type_b_braid_arrangement(2);
  auto text = arrangement_to_json(a);
  auto back = arrangement_from_json(text);
  ASSERT_EQ(back.subspaces.size(), a.subspaces.size());
  for (std::size_t i = 0; i < a.subspaces.size(); ++i) EXPECT_EQ(back.subspaces[i], a.subspaces[i]);
  auto frac = arrangement_from_json(R"({"dim":1,"subspaces":[{"A":[["2/3"]],"b":["1/3"]}]})");
  EXPECT_EQ(frac.subspaces[0], AffineSubspace(1, {{1}}, {Rational(1, 2)}));
  EXPECT_THROW(arrangement_from_json(R"({"dim":1,"subspaces":[{"A":[["1","2"]],"b":["0"]}]})"), Error);
}
