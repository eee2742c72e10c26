#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "posettop/common.hpp"
#include "posettop/poset.hpp"

namespace posettop {

using RationalMatrix = std::vector<std::vector<Rational>>;

// {x in R^d : A x = b}.
class AffineSubspace {
 public:
  AffineSubspace() = default;
  // Throws Error on an inconsistent system.
  AffineSubspace(std::size_t ambient_dim, RationalMatrix a, std::vector<Rational> b);

  static AffineSubspace ambient(std::size_t d) { return AffineSubspace(d, {}, {}); }

  std::size_t ambient_dim() const { return d_; }
  const RationalMatrix& a() const { return a_; }
  const std::vector<Rational>& b() const { return b_; }
  // Canonical reduced row echelon form of [A | b] with zero rows dropped.
  const RationalMatrix& canonical() const { return rref_; }
  std::size_t codim() const { return rref_.size(); }
  std::size_t dim() const { return d_ - rref_.size(); }
  bool is_hyperplane() const { return rref_.size() == 1; }
  bool contains(const AffineSubspace& other) const;  // other is a subset of this
  bool operator==(const AffineSubspace& o) const { return d_ == o.d_ && rref_ == o.rref_; }

 private:
  std::size_t d_ = 0;
  RationalMatrix a_;
  std::vector<Rational> b_;
  RationalMatrix rref_;
};

// Intersection of two subspaces; nullopt when empty.
std::optional<AffineSubspace> intersect(const AffineSubspace& x, const AffineSubspace& y);

struct Arrangement {
  std::size_t dim = 0;
  std::vector<AffineSubspace> subspaces;
  bool complex = false;
};

struct IntersectionSemilattice {
  Poset poset;                        // reverse inclusion; element 0 is the ambient space
  std::vector<AffineSubspace> flats;  // by element id
  std::vector<std::size_t> dims;
};

IntersectionSemilattice intersection_semilattice(const Arrangement& a);

struct ZaslavskyCounts {
  Integer regions;  // sum of |mu(0^, x)| over L
  Integer bounded;  // |mu(L + 1^)|; bounded regions when the arrangement is essential
};

// Hyperplane arrangements only.
ZaslavskyCounts zaslavsky(const Arrangement& a);
// beta_i of the complement of the complexified arrangement.
std::map<long, Integer> orlik_solomon_betti(const Arrangement& a);
// Ranks of reduced cohomology of the complement of a real subspace arrangement.
std::map<long, Integer> goresky_macpherson_betti(const Arrangement& a);

Arrangement coordinate_arrangement(int n);
Arrangement type_b_coordinate_arrangement(int n);  // x_i = 1, x_i = -1
Arrangement braid_arrangement(int n);              // x_i = x_j
Arrangement type_b_braid_arrangement(int n);       // x_i = x_j, x_i = -x_j, x_i = 0
Arrangement k_equal_arrangement(int n, int k);     // x_{i1} = ... = x_{ik}

std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

}  // namespace posettop
