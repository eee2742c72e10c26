#include "posettop/identities.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "posettop/families.hpp"

namespace posettop {

namespace {

Integer get(const BettiMap& m, long i) {
  auto it = m.find(i);
  return it == m.end() ? Integer(0) : it->second;
}

void put(BettiMap& m, long i, const Integer& v) {
  if (sgn(v) != 0) m[i] += v;
  if (m.count(i) && sgn(m[i]) == 0) m.erase(i);
}

std::string describe(const BettiMap& m) {
  std::string s = "{";
  bool first = true;
  for (const auto& [d, v] : m) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(d) + ": " + to_string(v);
  }
  return s + "}";
}

IdentityCheck compare(BettiMap lhs, BettiMap rhs) {
  IdentityCheck c;
  c.ok = lhs == rhs;
  c.detail = "lhs " + describe(lhs) + ", rhs " + describe(rhs);
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  return c;
}

BettiMap subposet_betti(const Poset& p, const std::vector<Element>& elements) {
  return rational_betti(induced_subposet(p, elements).poset);
}

// Unreduced rational Betti numbers of a nonempty poset.
BettiMap unreduced(const BettiMap& reduced, bool empty) {
  BettiMap out = reduced;
  if (!empty) put(out, 0, 1);
  out.erase(-1);
  return out;
}

}  // namespace

BettiMap betti_map(const HomologyResult& h) {
  BettiMap out;
  for (const auto& [d, g] : h.dims)
    if (sgn(g.betti) != 0) out[d] = g.betti;
  return out;
}

BettiMap rational_betti(const Poset& p) { return betti_map(rational_homology(order_complex(p))); }

HallCheck philip_hall_check(const Poset& p) {
  HallCheck out;
  Derived hat = bounded_extension(p);
  out.mobius = mobius_invariant(hat.poset);
  out.reduced_euler = f_h_vectors(order_complex(p)).reduced_euler;
  out.equal = out.mobius == out.reduced_euler;
  return out;
}

bool euler_poincare_check(const SimplicialComplex& c) {
  if (c.is_degenerate()) return true;
  Integer chi = f_h_vectors(c).reduced_euler;
  Integer alt = 0;
  for (const auto& [d, g] : homology(c).dims) {
    if (d % 2 == 0) alt += g.betti;
    else alt -= g.betti;
  }
  return chi == alt;
}

bool boundary_squared_zero(const ChainComplex& cc) {
  for (long i = 0; i < cc.top; ++i)
    if (!is_zero(multiply(cc.boundary(i), cc.boundary(i + 1)))) return false;
  return true;
}

IdentityCheck alexander_duality_check(const Poset& ambient, const std::vector<Element>& sub) {
  HomologyResult whole = poset_homology(ambient);
  SimplicialComplex delta = order_complex(ambient);
  long n = delta.dim();
  bool sphere = whole.dims.size() == 1 && whole.betti(n) == 1 && whole.torsion(n).empty();
  if (!sphere) throw Error("ambient order complex is not a homology sphere");
  std::vector<Element> q = sub;
  std::sort(q.begin(), q.end());
  q.erase(std::unique(q.begin(), q.end()), q.end());
  std::vector<Element> rest;
  for (Element x = 0; x < ambient.size(); ++x)
    if (!std::binary_search(q.begin(), q.end(), x)) rest.push_back(x);
  HomologyResult hq = poset_homology(induced_subposet(ambient, q).poset);
  HomologyResult hc = cohomology(order_complex(induced_subposet(ambient, rest).poset));
  IdentityCheck out;
  out.ok = true;
  std::set<long> dims;
  for (const auto& kv : hq.dims) dims.insert(kv.first);
  for (const auto& kv : hc.dims) dims.insert(n - kv.first - 1);
  for (long i : dims) {
    long j = n - i - 1;
    put(out.lhs, i, hq.betti(i));
    put(out.rhs, i, hc.betti(j));
    if (hq.betti(i) != hc.betti(j) || hq.torsion(i) != hc.torsion(j)) {
      out.ok = false;
      out.detail += "mismatch H_" + std::to_string(i) + "(Q) vs H^" + std::to_string(j) + "(P - Q); ";
    }
  }
  if (out.ok) out.detail = "H_i(Q) = H^{" + std::to_string(n) + "-i-1}(P - Q) in all degrees";
  return out;
}

namespace {

// sum_i a_i b_{r - i - shift}
BettiMap convolve(const BettiMap& a, const BettiMap& b, long shift) {
  BettiMap out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) put(out, i + j + shift, x * y);
  return out;
}

std::vector<Element> without(const Poset& p, std::initializer_list<std::optional<Element>> drop) {
  std::vector<Element> keep;
  for (Element x = 0; x < p.size(); ++x) {
    bool skip = false;
    for (const auto& d : drop)
      if (d && *d == x) skip = true;
    if (!skip) keep.push_back(x);
  }
  return keep;
}

}  // namespace

IdentityCheck kunneth_check(const Poset& p, const Poset& q, KunnethKind kind) {
  switch (kind) {
    case KunnethKind::join:
      return compare(rational_betti(ordinal_join(p, q)), convolve(rational_betti(p), rational_betti(q), 1));
    case KunnethKind::reduced_product: {
      auto bp = p.bottom(), bq = q.bottom();
      if (!bp || !bq) throw Error("reduced product needs bottom elements");
      Poset prod = direct_product(p, q);
      // Product element (a, b) has id a * |q| + b.
      Element zero = *bp * q.size() + *bq;
      BettiMap lhs = subposet_betti(prod, without(prod, {zero}));
      BettiMap rhs = convolve(subposet_betti(p, without(p, {bp})), subposet_betti(q, without(q, {bq})), 1);
      return compare(lhs, rhs);
    }
    case KunnethKind::doubly_bounded_product: {
      auto bp = p.bottom(), bq = q.bottom(), tp = p.top(), tq = q.top();
      if (!bp || !bq || !tp || !tq) throw Error("doubly bounded product needs bottom and top elements");
      Poset prod = direct_product(p, q);
      BettiMap lhs = rational_betti(proper_part(prod).poset);
      BettiMap rhs = convolve(rational_betti(proper_part(p).poset), rational_betti(proper_part(q).poset), 2);
      return compare(lhs, rhs);
    }
    case KunnethKind::ordinary_product: {
      BettiMap lhs = unreduced(rational_betti(direct_product(p, q)), p.empty() || q.empty());
      BettiMap rhs = convolve(unreduced(rational_betti(p), p.empty()), unreduced(rational_betti(q), q.empty()), 0);
      return compare(lhs, rhs);
    }
  }
  throw Error("unknown Kunneth kind");
}

bool is_order_preserving(const PosetMap& f) {
  if (f.map.size() != f.source.size()) return false;
  for (Element t : f.map)
    if (t >= f.target.size()) return false;
  for (Element x = 0; x < f.source.size(); ++x)
    for (Element y = 0; y < f.source.size(); ++y)
      if (f.source.leq(x, y) && !f.target.leq(f.map[x], f.map[y])) return false;
  return true;
}

std::vector<Element> fiber_below(const PosetMap& f, Element q, bool strict) {
  std::vector<Element> out;
  for (Element x = 0; x < f.source.size(); ++x)
    if (strict ? f.target.less(f.map[x], q) : f.target.leq(f.map[x], q)) out.push_back(x);
  return out;
}

FiberCheck quillen_fiber_check(const PosetMap& f) {
  if (!is_order_preserving(f)) throw Error("map is not order preserving");
  FiberCheck out;
  for (Element q = 0; q < f.target.size(); ++q) {
    std::vector<Element> fiber = fiber_below(f, q, false);
    if (fiber.empty() || !subposet_betti(f.source, fiber).empty()) {
      out.status = FiberStatus::hypothesis_fails;
      out.detail = "fiber over " + f.target.label(q) + " is not acyclic";
      return out;
    }
  }
  out.lhs = rational_betti(f.source);
  out.rhs = rational_betti(f.target);
  out.status = out.lhs == out.rhs ? FiberStatus::holds : FiberStatus::fails;
  out.detail = "source " + describe(out.lhs) + ", target " + describe(out.rhs);
  return out;
}

FiberCheck general_fiber_betti_check(const PosetMap& f) {
  if (!is_order_preserving(f)) throw Error("map is not order preserving");
  FiberCheck out;
  BettiMap rhs = rational_betti(f.target);
  for (Element q = 0; q < f.target.size(); ++q) {
    std::vector<Element> fiber = fiber_below(f, q, false);
    Derived strict = induced_subposet(f.source, fiber_below(f, q, true));
    long need = poset_length(strict.poset);
    // l-acyclic: nonempty with vanishing reduced homology through degree l.
    BettiMap fb = subposet_betti(f.source, fiber);
    bool acyclic = !fiber.empty();
    for (const auto& [d, v] : fb)
      if (d <= need) acyclic = false;
    if (!acyclic) {
      out.status = FiberStatus::hypothesis_fails;
      out.detail = "fiber over " + f.target.label(q) + " is not " + std::to_string(need) + "-acyclic";
      return out;
    }
    BettiMap above = rational_betti(upper_set(f.target, q, true).poset);
    for (const auto& [d, v] : convolve(fb, above, 1)) put(rhs, d, v);
  }
  out.lhs = rational_betti(f.source);
  out.rhs = rhs;
  out.status = out.lhs == out.rhs ? FiberStatus::holds : FiberStatus::fails;
  out.detail = "lhs " + describe(out.lhs) + ", rhs " + describe(out.rhs);
  return out;
}

IdentityCheck inflation_betti_check(const SimplicialComplex& c, const std::vector<int>& m) {
  BettiMap base = betti_map(rational_homology(c));
  if (c.is_degenerate() || get(base, -1) != 0 || get(base, 0) != 0) throw Error("inflation formula needs a connected complex");
  BettiMap lhs = betti_map(rational_homology(inflation(c, m)));
  BettiMap rhs = base;
  for (long d = 0; d <= c.dim(); ++d)
    for (const auto& f : c.faces(d)) {
      Integer nu = 1;
      for (Vertex v : f) nu *= m.at(v) - 1;
      if (sgn(nu) == 0) continue;
      for (const auto& [i, b] : betti_map(rational_homology(link(c, f)))) put(rhs, i + static_cast<long>(f.size()), nu * b);
    }
  return compare(lhs, rhs);
}

bool is_semipure(const Poset& p) {
  for (Element y = 0; y < p.size(); ++y)
    if (!is_pure(lower_set(p, y, false).poset)) return false;
  return true;
}

BettiMap whitney_betti(const Poset& p, bool verify) {
  auto zero = p.bottom();
  if (!zero) throw Error("Whitney recursion needs a bottom element");
  if (verify) {
    if (!is_semipure(p)) throw Error("poset is not semipure");
    Derived upper = upper_set(p, *zero, true);
    if (!cm_checks(order_complex(upper.poset)).sequentially_cohen_macaulay)
      throw Error("poset minus its bottom is not sequentially Cohen-Macaulay");
  }
  std::size_t n = p.size();
  std::vector<long> below(n, 0), above(n, 0);
  const auto& topo = p.linear_extension();
  for (Element x : topo)
    for (Element z : p.upper_covers(x)) below[z] = std::max(below[z], below[x] + 1);
  for (std::size_t i = topo.size(); i-- > 0;) {
    Element x = topo[i];
    for (Element z : p.upper_covers(x)) above[x] = std::max(above[x], above[z] + 1);
  }
  BettiMap out;
  for (Element x = 0; x < n; ++x) {
    long r = below[x];
    long mx = r + above[x];
    Integer b = betti_open_interval(p, *zero, x).betti(r - 2);
    if ((mx + r) % 2) b = -b;
    put(out, mx - 1, b);
  }
  return out;
}

bool is_automorphism(const Poset& p, const std::vector<Element>& g) {
  if (g.size() != p.size()) return false;
  std::vector<bool> hit(p.size(), false);
  for (Element x : g) {
    if (x >= p.size() || hit[x]) return false;
    hit[x] = true;
  }
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y)
      if (p.less(x, y) && !p.less(g[x], g[y])) return false;
  return true;
}

LefschetzCheck fixed_point_lefschetz(const Poset& p, const std::vector<Element>& g) {
  if (!is_automorphism(p, g)) throw Error("g is not an order-preserving bijection");
  LefschetzCheck out;
  // Walk all chains; a chain counts when its image is the same set.
  Integer total = -1;
  std::vector<Element> chain;
  std::function<void(Element)> extend = [&](Element last) {
    std::vector<Element> image;
    for (Element x : chain) image.push_back(g[x]);
    std::sort(image.begin(), image.end());
    std::vector<Element> sorted = chain;
    std::sort(sorted.begin(), sorted.end());
    if (image == sorted) {
      if ((chain.size() - 1) % 2) total -= 1;
      else total += 1;
    }
    for (Element z = 0; z < p.size(); ++z)
      if (p.less(last, z)) {
        chain.push_back(z);
        extend(z);
        chain.pop_back();
      }
  };
  for (Element x = 0; x < p.size(); ++x) {
    chain = {x};
    extend(x);
  }
  out.lhs = total;
  std::vector<Element> fixed;
  for (Element x = 0; x < p.size(); ++x)
    if (g[x] == x) fixed.push_back(x);
  out.rhs = mobius_invariant(bounded_extension(induced_subposet(p, fixed).poset).poset);
  out.equal = out.lhs == out.rhs;
  return out;
}

SimplicialComplex crosscut_complex(const Poset& lattice) {
  if (!is_lattice(lattice)) throw Error("crosscut complex needs a lattice");
  Element zero = *lattice.bottom();
  std::vector<Element> co = coatoms(lattice);
  if (co.size() > 24) throw Infeasible("crosscut complex limited to 24 coatoms");
  std::vector<Face> faces;
  for (std::uint32_t s = 1; s < (1u << co.size()); ++s) {
    Element acc = *lattice.top();
    for (std::size_t i = 0; i < co.size(); ++i)
      if ((s >> i) & 1u) acc = *meet(lattice, acc, co[i]);
    if (acc == zero) continue;
    Face f;
    for (std::size_t i = 0; i < co.size(); ++i)
      if ((s >> i) & 1u) f.push_back(static_cast<Vertex>(i));
    faces.push_back(std::move(f));
  }
  if (faces.empty()) return SimplicialComplex::void_complex(co.size());
  return SimplicialComplex::from_facets(co.size(), std::move(faces));
}

IdentityCheck crosscut_check(const Poset& lattice) {
  return compare(rational_betti(proper_part(lattice).poset), betti_map(rational_homology(crosscut_complex(lattice))));
}

bool is_closure_operator(const Poset& p, const std::vector<Element>& cl) {
  if (cl.size() != p.size()) return false;
  for (Element x = 0; x < p.size(); ++x) {
    if (cl[x] >= p.size() || !p.leq(x, cl[x]) || cl[cl[x]] != cl[x]) return false;
    for (Element y = 0; y < p.size(); ++y)
      if (p.leq(x, y) && !p.leq(cl[x], cl[y])) return false;
  }
  return true;
}

IdentityCheck closure_check(const Poset& p, const std::vector<Element>& cl) {
  if (!is_closure_operator(p, cl)) throw Error("not a closure operator");
  std::vector<Element> image(cl.begin(), cl.end());
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return compare(rational_betti(p), subposet_betti(p, image));
}

}  // namespace posettop
