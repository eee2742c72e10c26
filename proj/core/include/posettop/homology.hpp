#pragma once

#include <map>
#include <vector>

#include "posettop/complex.hpp"
#include "posettop/matrix.hpp"
#include "posettop/poset.hpp"

namespace posettop {

// Augmented simplicial chain complex; dimension -1 holds the empty face.
struct ChainComplex {
  long top = -1;
  std::vector<std::vector<Face>> bases;    // bases[i + 1]: i-faces, sorted
  std::vector<SparseMatrix> boundaries;    // boundaries[i + 1]: d_i : C_i -> C_{i-1}

  const std::vector<Face>& basis(long i) const { return bases.at(static_cast<std::size_t>(i + 1)); }
  const SparseMatrix& boundary(long i) const { return boundaries.at(static_cast<std::size_t>(i + 1)); }
  std::size_t index_of(long i, const Face& f) const;
};

ChainComplex chain_complex(const SimplicialComplex& c);

struct HomologyGroup {
  Integer betti = 0;
  std::vector<Integer> torsion;
  bool operator==(const HomologyGroup& o) const { return betti == o.betti && torsion == o.torsion; }
};

// Reduced (co)homology; only nontrivial groups are stored.
struct HomologyResult {
  std::map<long, HomologyGroup> dims;

  Integer betti(long i) const;
  std::vector<Integer> torsion(long i) const;
  bool torsion_free() const;
  bool operator==(const HomologyResult& o) const { return dims == o.dims; }
};

HomologyResult homology(const SimplicialComplex& c);
HomologyResult cohomology(const SimplicialComplex& c);
// Ranks only; torsion lists are left empty.
HomologyResult rational_homology(const SimplicialComplex& c);
HomologyResult poset_homology(const Poset& p);
// Homology of Delta((x, y)); beta_{-2} = 1 when x = y.
HomologyResult betti_open_interval(const Poset& p, Element x, Element y);

// Lambda_i = d_i^T d_i + d_{i+1} d_{i+1}^T as a dense integer matrix.
DenseMatrix laplacian_matrix(const SimplicialComplex& c, long i);
Integer laplacian_betti(const SimplicialComplex& c, long i);

struct CohenMacaulayReport {
  bool cohen_macaulay = false;
  bool sequentially_acyclic = false;
  bool sequentially_cohen_macaulay = false;
};

bool is_sequentially_acyclic(const SimplicialComplex& c);
CohenMacaulayReport cm_checks(const SimplicialComplex& c);

// Coefficients on faces of Delta(p) (faces as sorted element ids).
using ChainVector = std::map<Face, Integer>;

// Generator of the top homology of Delta(p restricted to sub), embedded in C(Delta(p)).
ChainVector fundamental_cycle(const Poset& p, const std::vector<Element>& sub);
// Rank of the span of the cycles in rational homology of Delta(p).
std::size_t homology_rank(const Poset& p, const std::vector<ChainVector>& cycles);
bool independent_in_homology(const Poset& p, const std::vector<ChainVector>& cycles);

}  // namespace posettop
