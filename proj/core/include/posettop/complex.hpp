#pragma once

#include <vector>

#include "posettop/common.hpp"
#include "posettop/poset.hpp"

namespace posettop {

using Vertex = std::uint32_t;
using Face = std::vector<Vertex>;

// Facet-based simplicial complex on vertices [0, vertex_count).
// facets == {} is the degenerate empty complex; facets == {{}} is {∅}.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  static SimplicialComplex from_facets(std::size_t vertex_count, std::vector<Face> facets);
  // Caller guarantees the facets are pairwise incomparable.
  static SimplicialComplex from_maximal_facets(std::size_t vertex_count, std::vector<Face> facets);
  static SimplicialComplex degenerate(std::size_t vertex_count = 0);
  // {∅}
  static SimplicialComplex void_complex(std::size_t vertex_count = 0);
  static SimplicialComplex simplex(std::size_t vertex_count);

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Face>& facets() const { return facets_; }
  bool is_degenerate() const { return facets_.empty(); }
  long dim() const;
  bool is_pure() const;
  bool contains(const Face& face) const;
  // All faces of the given dimension, sorted lexicographically (dim -1 gives {∅}).
  std::vector<Face> faces(long dim) const;
  std::size_t face_count(long dim) const { return faces(dim).size(); }

  bool operator==(const SimplicialComplex& other) const {
    return vertex_count_ == other.vertex_count_ && facets_ == other.facets_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Face> facets_;
};

SimplicialComplex order_complex(const Poset& p);
// Nonempty faces ordered by inclusion.
Poset face_poset(const SimplicialComplex& c);
// face_poset with fresh 0^ and 1^.
Poset face_lattice(const SimplicialComplex& c);
SimplicialComplex barycentric_subdivision(const SimplicialComplex& c);

// Vertices of b are shifted by a.vertex_count().
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex link(const SimplicialComplex& c, const Face& face);
// Faces of dimension <= k.
SimplicialComplex skeleton(const SimplicialComplex& c, long k);
// Generated by the faces of dimension m.
SimplicialComplex pure_skeleton(const SimplicialComplex& c, long m);
// Generated by the facets of dimension >= m.
SimplicialComplex facet_skeleton(const SimplicialComplex& c, long m);
SimplicialComplex generated(std::size_t vertex_count, std::vector<Face> faces);
SimplicialComplex suspension(const SimplicialComplex& c);
// {V - F : F not a face}.  Exact involution, including {∅} and degenerate cases.
SimplicialComplex alexander_dual(const SimplicialComplex& c);

struct FaceNumbers {
  std::vector<Integer> f;  // f[0] = f_{-1}
  std::vector<Integer> h;
  Integer reduced_euler;
};

FaceNumbers f_h_vectors(const SimplicialComplex& c);

std::string face_to_string(const Face& face);

}  // namespace posettop
