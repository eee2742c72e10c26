#pragma once

#include <map>
#include <string>
#include <vector>

#include "posettop/complex.hpp"
#include "posettop/homology.hpp"
#include "posettop/poset.hpp"

namespace posettop {

using BettiMap = std::map<long, Integer>;

// Nonzero Betti numbers of a homology result.
BettiMap betti_map(const HomologyResult& h);
BettiMap rational_betti(const Poset& p);

struct IdentityCheck {
  bool ok = false;
  BettiMap lhs;
  BettiMap rhs;
  std::string detail;
};

struct HallCheck {
  Integer mobius;         // mu of the bounded extension, by recursion
  Integer reduced_euler;  // from chain counts of Delta(P)
  bool equal = false;
};

HallCheck philip_hall_check(const Poset& p);

// sum (-1)^i f_i against sum (-1)^i beta_i.
bool euler_poincare_check(const SimplicialComplex& c);
bool boundary_squared_zero(const ChainComplex& cc);

// Delta(ambient) must be a homology sphere; compares H_i(Q) with H^{n-i-1}(P - Q) integrally.
IdentityCheck alexander_duality_check(const Poset& ambient, const std::vector<Element>& sub);

enum class KunnethKind { join, reduced_product, doubly_bounded_product, ordinary_product };

IdentityCheck kunneth_check(const Poset& p, const Poset& q, KunnethKind kind);

struct PosetMap {
  Poset source;
  Poset target;
  std::vector<Element> map;
};

bool is_order_preserving(const PosetMap& f);
// Elements of the source mapped to target elements <= q (or < q when strict).
std::vector<Element> fiber_below(const PosetMap& f, Element q, bool strict);

enum class FiberStatus { holds, fails, hypothesis_fails };

struct FiberCheck {
  FiberStatus status = FiberStatus::hypothesis_fails;
  BettiMap lhs;
  BettiMap rhs;
  std::string detail;
};

// Fibers f^{-1}(Q_{<=q}) rationally acyclic => equal Betti numbers.
FiberCheck quillen_fiber_check(const PosetMap& f);
// Homology form of the general fiber theorem, trivial group, rational coefficients.
FiberCheck general_fiber_betti_check(const PosetMap& f);

// Delta must be connected.
IdentityCheck inflation_betti_check(const SimplicialComplex& c, const std::vector<int>& m);

// Betti numbers of P minus 0^ from lower-interval homology (semipure sequentially CM P).
// With verify set, semipurity and sequential Cohen-Macaulayness are checked first.
BettiMap whitney_betti(const Poset& p, bool verify = true);
bool is_semipure(const Poset& p);

struct LefschetzCheck {
  Integer lhs;  // alternating count of g-fixed chains, empty chain included
  Integer rhs;  // mu of the bounded extension of the fixed subposet
  bool equal = false;
};

bool is_automorphism(const Poset& p, const std::vector<Element>& g);
LefschetzCheck fixed_point_lefschetz(const Poset& p, const std::vector<Element>& g);

// Complex on the coatoms of a lattice: sets whose meet is not 0^.
SimplicialComplex crosscut_complex(const Poset& lattice);
IdentityCheck crosscut_check(const Poset& lattice);
bool is_closure_operator(const Poset& p, const std::vector<Element>& cl);
IdentityCheck closure_check(const Poset& p, const std::vector<Element>& cl);

}  // namespace posettop
