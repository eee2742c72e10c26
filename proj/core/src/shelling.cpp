#include "posettop/shelling.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace posettop {

namespace {

// Bit p set when the p-th vertex of f lies in g.
std::uint64_t position_mask(const Face& f, const Face& g) {
  std::uint64_t m = 0;
  std::size_t j = 0;
  for (std::size_t p = 0; p < f.size(); ++p) {
    while (j < g.size() && g[j] < f[p]) ++j;
    if (j < g.size() && g[j] == f[p]) m |= std::uint64_t{1} << p;
  }
  return m;
}

std::uint64_t full_mask(std::size_t size) { return size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1; }

// Restriction mask of f against earlier facets; ok=false when the
// intersection with the earlier facets is not pure of codimension one.
struct StepResult {
  bool ok;
  std::uint64_t restriction;
};

StepResult shelling_step(std::size_t size, const std::vector<std::uint64_t>& earlier_masks) {
  std::uint64_t full = full_mask(size);
  std::uint64_t r = 0;
  for (std::uint64_t m : earlier_masks)
    if (static_cast<std::size_t>(__builtin_popcountll(m)) + 1 == size) r |= full & ~m;
  for (std::uint64_t m : earlier_masks)
    if ((r & ~m) == 0) return {false, r};
  return {true, r};
}

Face mask_to_face(const Face& f, std::uint64_t m) {
  Face out;
  for (std::size_t p = 0; p < f.size(); ++p)
    if ((m >> p) & 1u) out.push_back(f[p]);
  return out;
}

void check_facet_width(const SimplicialComplex& c) {
  for (const auto& f : c.facets())
    if (f.size() > 64) throw Infeasible("shelling checks support facets with at most 64 vertices");
}

}  // namespace

ShellingCheck is_shelling(const SimplicialComplex& c, const std::vector<Face>& order) {
  std::vector<Face> sorted_order = order;
  std::sort(sorted_order.begin(), sorted_order.end());
  std::vector<Face> facets = c.facets();
  std::sort(facets.begin(), facets.end());
  if (sorted_order != facets) throw Error("facet order is not a permutation of the facets");
  check_facet_width(c);
  ShellingCheck out;
  out.ok = true;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Face& f = order[k];
    std::vector<std::uint64_t> masks;
    masks.reserve(k);
    for (std::size_t i = 0; i < k; ++i) masks.push_back(position_mask(f, order[i]));
    StepResult step = shelling_step(f.size(), masks);
    if (!step.ok && out.ok) {
      out.ok = false;
      out.first_violation = k;
    }
    out.restrictions.push_back(mask_to_face(f, step.restriction));
    bool hom = step.restriction == full_mask(f.size());
    out.homology_facets.push_back(hom);
    if (hom) ++out.homology_facet_counts[static_cast<long>(f.size()) - 1];
  }
  return out;
}

ShellingSearch find_shelling(const SimplicialComplex& c, std::size_t max_facets, std::size_t budget) {
  const auto& facets = c.facets();
  std::size_t m = facets.size();
  if (m > max_facets || m > 64) throw Infeasible("shelling search limited to " + std::to_string(std::min<std::size_t>(max_facets, 64)) + " facets");
  check_facet_width(c);
  ShellingSearch out;
  if (m == 0) {
    out.status = SearchStatus::none;
    return out;
  }
  std::vector<std::vector<std::uint64_t>> mask(m, std::vector<std::uint64_t>(m));
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i) mask[k][i] = position_mask(facets[k], facets[i]);
  std::unordered_set<std::uint64_t> dead;
  std::vector<std::size_t> order;
  bool exhausted = false;
  std::function<bool(std::uint64_t)> dfs = [&](std::uint64_t placed) {
    if (order.size() == m) return true;
    if (dead.count(placed)) return false;
    if (++out.nodes > budget) {
      exhausted = true;
      return false;
    }
    for (std::size_t k = 0; k < m; ++k) {
      if ((placed >> k) & 1u) continue;
      std::vector<std::uint64_t> masks;
      for (std::size_t i : order) masks.push_back(mask[k][i]);
      if (!shelling_step(facets[k].size(), masks).ok) continue;
      order.push_back(k);
      if (dfs(placed | (std::uint64_t{1} << k))) return true;
      order.pop_back();
      if (exhausted) return false;
    }
    if (!exhausted) dead.insert(placed);
    return false;
  };
  if (dfs(0)) {
    out.status = SearchStatus::found;
    for (std::size_t k : order) out.order.push_back(facets[k]);
    out.homology_facet_counts = is_shelling(c, out.order).homology_facet_counts;
  } else {
    out.status = exhausted ? SearchStatus::indeterminate : SearchStatus::none;
  }
  return out;
}

bool is_increasing(const std::vector<Label>& word, ElConvention convention) {
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    bool ok = convention == ElConvention::strict_increasing ? word[i] < word[i + 1] : word[i] <= word[i + 1];
    if (!ok) return false;
  }
  return true;
}

bool is_decreasing(const std::vector<Label>& word, ElConvention convention) {
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    bool ok = convention == ElConvention::strict_increasing ? word[i] >= word[i + 1] : word[i] > word[i + 1];
    if (!ok) return false;
  }
  return true;
}

namespace {

const Label& label_of(const EdgeLabeling& lambda, Element x, Element y) {
  auto it = lambda.find({x, y});
  if (it == lambda.end()) throw Error("missing label on cover (" + std::to_string(x) + ", " + std::to_string(y) + ")");
  return it->second;
}

}  // namespace

std::vector<Label> chain_word(const EdgeLabeling& lambda, const Chain& chain) {
  std::vector<Label> w;
  for (std::size_t i = 0; i + 1 < chain.elements.size(); ++i)
    w.push_back(label_of(lambda, chain.elements[i], chain.elements[i + 1]));
  return w;
}

namespace {

ElCheck verify_labeling(const Poset& p, const EdgeLabeling& lambda, ElConvention convention, bool lexicographic) {
  ElCheck out;
  if (!is_bounded(p)) throw Error("EL-labelings are defined on bounded posets");
  for (const auto& cv : p.covers()) label_of(lambda, cv.first, cv.second);
  auto rising = [&](const Label& a, const Label& b) {
    return convention == ElConvention::strict_increasing ? a < b : a <= b;
  };
  const auto& topo = p.linear_extension();
  std::size_t n = p.size();
  std::vector<std::vector<Label>> lexmin(n);
  std::vector<int> lexmin_count(n);
  // First label of each increasing chain to y, with multiplicity capped at 2.
  std::vector<std::map<Label, int>> inc(n);
  for (Element y = 0; y < n; ++y) {
    for (std::size_t t = topo.size(); t-- > 0;) {
      Element w = topo[t];
      if (!p.leq(w, y)) continue;
      lexmin[w].clear();
      inc[w].clear();
      if (w == y) {
        lexmin_count[w] = 1;
        continue;
      }
      bool have = false;
      int count = 0;
      std::vector<Label> best;
      for (Element z : p.upper_covers(w)) {
        if (!p.leq(z, y)) continue;
        const Label& l = label_of(lambda, w, z);
        std::vector<Label> cand;
        cand.reserve(lexmin[z].size() + 1);
        cand.push_back(l);
        cand.insert(cand.end(), lexmin[z].begin(), lexmin[z].end());
        if (!have || cand < best) {
          best = std::move(cand);
          count = lexmin_count[z];
          have = true;
        } else if (cand == best) {
          count = std::min(2, count + lexmin_count[z]);
        }
        int through = 0;
        if (z == y) {
          through = 1;
        } else {
          for (const auto& [first, c] : inc[z])
            if (rising(l, first)) through = std::min(2, through + c);
        }
        if (through) inc[w][l] = std::min(2, inc[w][l] + through);
      }
      lexmin[w] = std::move(best);
      lexmin_count[w] = count;
      int total = 0;
      for (const auto& kv : inc[w]) total = std::min(2, total + kv.second);
      std::string why;
      if (total == 0) why = "no increasing maximal chain";
      else if (total > 1) why = "more than one increasing maximal chain";
      else if (lexicographic && lexmin_count[w] > 1) why = "lexicographically least chain is not unique";
      else if (lexicographic && !is_increasing(lexmin[w], convention)) why = "increasing chain is not lexicographically first";
      if (!why.empty()) {
        out.ok = false;
        out.reason = why + " in [" + p.label(w) + ", " + p.label(y) + "]";
        out.interval = std::make_pair(w, y);
        return out;
      }
    }
  }
  out.ok = true;
  return out;
}

}  // namespace

ElCheck verify_el_labeling(const Poset& p, const EdgeLabeling& lambda, ElConvention convention) {
  return verify_labeling(p, lambda, convention, true);
}

ElCheck verify_r_labeling(const Poset& p, const EdgeLabeling& lambda, ElConvention convention) {
  return verify_labeling(p, lambda, convention, false);
}

std::vector<Chain> decreasing_chains(const Poset& p, const EdgeLabeling& lambda, ElConvention convention) {
  std::vector<Chain> out;
  for (auto& c : maximal_chains(p))
    if (is_decreasing(chain_word(lambda, c), convention)) out.push_back(std::move(c));
  return out;
}

std::map<long, Integer> betti_from_el(const Poset& p, const EdgeLabeling& lambda, ElConvention convention) {
  ElCheck check = verify_el_labeling(p, lambda, convention);
  if (!check.ok) throw Error("not an EL-labeling: " + check.reason);
  std::map<long, Integer> out;
  for (const auto& c : decreasing_chains(p, lambda, convention)) out[c.length() - 2] += 1;
  return out;
}

std::vector<Chain> lexicographic_chain_order(const Poset& p, const EdgeLabeling& lambda) {
  std::vector<Chain> chains = maximal_chains(p);
  std::vector<std::pair<std::vector<Label>, std::size_t>> keyed;
  for (std::size_t i = 0; i < chains.size(); ++i) keyed.emplace_back(chain_word(lambda, chains[i]), i);
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Chain> out;
  for (const auto& k : keyed) out.push_back(chains[k.second]);
  return out;
}

Derived rank_selected(const Poset& p, const std::set<long>& ranks) {
  if (!is_bounded(p)) throw Error("rank selection needs a bounded poset");
  if (!is_pure(p)) throw Error("rank selection needs a pure poset");
  std::vector<long> r = rank_function(p);
  long len = poset_length(p);
  for (long i : ranks)
    if (i < 1 || i >= len) throw Error("rank " + std::to_string(i) + " outside [1, l(P) - 1]");
  std::vector<Element> keep;
  for (Element x = 0; x < p.size(); ++x)
    if (ranks.count(r[x])) keep.push_back(x);
  return induced_subposet(p, keep);
}

Integer descent_count(const Poset& p, const EdgeLabeling& lambda, const std::set<long>& ranks) {
  Integer count = 0;
  for (const auto& c : maximal_chains(p)) {
    auto w = chain_word(lambda, c);
    std::set<long> des;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] >= w[i + 1]) des.insert(static_cast<long>(i) + 1);
    if (des == ranks) count += 1;
  }
  return count;
}

namespace {

struct RaoContext {
  const Poset& p;
  Element top;
  std::vector<long> depth;  // length of [x, 1^]

  explicit RaoContext(const Poset& poset) : p(poset) {
    auto t = p.top();
    if (!t || !p.bottom()) throw Error("recursive atom orderings need a bounded poset");
    top = *t;
    depth.assign(p.size(), 0);
    const auto& topo = p.linear_extension();
    for (std::size_t i = topo.size(); i-- > 0;) {
      Element x = topo[i];
      for (Element z : p.upper_covers(x)) depth[x] = std::max(depth[x], depth[z] + 1);
    }
  }

  // Upper covers of a lying above some element of earlier.
  std::vector<Element> required_for(Element a, const std::vector<Element>& earlier) const {
    std::vector<Element> z;
    for (Element c : p.upper_covers(a))
      for (Element e : earlier)
        if (p.less(e, c)) {
          z.push_back(c);
          break;
        }
    std::sort(z.begin(), z.end());
    return z;
  }

  // Condition (ii) for atom a placed after the atoms in earlier.
  bool condition_two(Element a, const std::vector<Element>& earlier, const std::vector<Element>& z) const {
    if (earlier.empty()) return true;
    for (Element y = 0; y < p.size(); ++y) {
      if (!p.less(a, y)) continue;
      bool above_earlier = false;
      for (Element e : earlier)
        if (p.less(e, y)) {
          above_earlier = true;
          break;
        }
      if (!above_earlier) continue;
      bool witnessed = false;
      for (Element c : z)
        if (p.leq(c, y)) {
          witnessed = true;
          break;
        }
      if (!witnessed) return false;
    }
    return true;
  }
};

RaoCheck verify_node(const RaoContext& ctx, const RecursiveAtomCertificate& node, Element x,
                     const std::vector<Element>& required) {
  const Poset& p = ctx.p;
  if (node.root != x) return {false, "certificate node for " + p.label(x) + " has root " + std::to_string(node.root)};
  if (ctx.depth[x] <= 1) return {true, ""};
  std::vector<Element> covers = p.upper_covers(x);
  std::vector<Element> atoms = node.atoms;
  std::sort(covers.begin(), covers.end());
  std::sort(atoms.begin(), atoms.end());
  if (atoms != covers) return {false, "atom list of [" + p.label(x) + ", 1^] is not a permutation of its atoms"};
  std::vector<Element> head(node.atoms.begin(), node.atoms.begin() + static_cast<std::ptrdiff_t>(required.size()));
  std::sort(head.begin(), head.end());
  if (head != required) return {false, "required atoms of [" + p.label(x) + ", 1^] do not come first"};
  if (node.children.size() != node.atoms.size()) return {false, "certificate missing an interval below " + p.label(x)};
  std::vector<Element> earlier;
  for (std::size_t j = 0; j < node.atoms.size(); ++j) {
    Element a = node.atoms[j];
    std::vector<Element> z = ctx.required_for(a, earlier);
    if (!ctx.condition_two(a, earlier, z))
      return {false, "condition (ii) fails at atom " + p.label(a) + " of [" + p.label(x) + ", 1^]"};
    RaoCheck child = verify_node(ctx, node.children[j], a, z);
    if (!child.ok) return child;
    earlier.push_back(a);
  }
  return {true, ""};
}

}  // namespace

RaoCheck verify_recursive_atom_ordering(const Poset& p, const RecursiveAtomCertificate& cert) {
  RaoContext ctx(p);
  return verify_node(ctx, cert, *p.bottom(), {});
}

RaoSearch search_recursive_atom_ordering(const Poset& p, std::size_t budget) {
  RaoContext ctx(p);
  RaoSearch out;
  bool exhausted = false;
  std::map<std::pair<Element, std::vector<Element>>, std::optional<RecursiveAtomCertificate>> memo;
  std::function<std::optional<RecursiveAtomCertificate>(Element, const std::vector<Element>&)> search;
  search = [&](Element x, const std::vector<Element>& required) -> std::optional<RecursiveAtomCertificate> {
    auto key = std::make_pair(x, required);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    RecursiveAtomCertificate node;
    node.root = x;
    if (ctx.depth[x] <= 1) {
      node.atoms = p.upper_covers(x);
      memo[key] = node;
      return node;
    }
    const std::vector<Element>& atoms = p.upper_covers(x);
    std::size_t t = atoms.size();
    if (t > 64) throw Infeasible("recursive atom search limited to 64 atoms per interval");
    std::unordered_set<std::uint64_t> dead;
    std::vector<Element> order;
    std::vector<RecursiveAtomCertificate> children;
    std::function<bool(std::uint64_t)> extend = [&](std::uint64_t used) -> bool {
      if (order.size() == t) return true;
      if (dead.count(used)) return false;
      if (++out.nodes > budget) {
        exhausted = true;
        return false;
      }
      bool need_required = order.size() < required.size();
      for (std::size_t i = 0; i < t; ++i) {
        if ((used >> i) & 1u) continue;
        Element a = atoms[i];
        if (need_required && !std::binary_search(required.begin(), required.end(), a)) continue;
        if (!need_required && std::binary_search(required.begin(), required.end(), a)) continue;
        std::vector<Element> z = ctx.required_for(a, order);
        if (!ctx.condition_two(a, order, z)) continue;
        auto child = search(a, z);
        if (exhausted) return false;
        if (!child) continue;
        order.push_back(a);
        children.push_back(std::move(*child));
        if (extend(used | (std::uint64_t{1} << i))) return true;
        order.pop_back();
        children.pop_back();
        if (exhausted) return false;
      }
      if (!exhausted) dead.insert(used);
      return false;
    };
    std::optional<RecursiveAtomCertificate> result;
    if (extend(0)) {
      node.atoms = order;
      node.children = std::move(children);
      result = std::move(node);
    }
    if (!exhausted) memo[key] = result;
    return result;
  };
  auto cert = search(*p.bottom(), {});
  if (exhausted) out.status = SearchStatus::indeterminate;
  else if (cert) {
    out.status = SearchStatus::found;
    out.certificate = std::move(cert);
  } else {
    out.status = SearchStatus::none;
  }
  return out;
}

RecursiveAtomCertificate atom_order_certificate(const Poset& p, const std::vector<Element>& priority) {
  RaoContext ctx(p);
  std::vector<std::size_t> rank(p.size());
  for (Element x = 0; x < p.size(); ++x) rank[x] = priority.size() + x;
  for (std::size_t i = 0; i < priority.size(); ++i) rank.at(priority[i]) = i;
  auto by_rank = [&](Element a, Element b) { return rank[a] < rank[b]; };
  std::function<RecursiveAtomCertificate(Element, const std::vector<Element>&)> build;
  build = [&](Element x, const std::vector<Element>& required) {
    RecursiveAtomCertificate node;
    node.root = x;
    std::vector<Element> first = required, rest;
    for (Element a : p.upper_covers(x))
      if (!std::binary_search(required.begin(), required.end(), a)) rest.push_back(a);
    std::sort(first.begin(), first.end(), by_rank);
    std::sort(rest.begin(), rest.end(), by_rank);
    node.atoms = first;
    node.atoms.insert(node.atoms.end(), rest.begin(), rest.end());
    if (ctx.depth[x] <= 1) return node;
    std::vector<Element> earlier;
    for (Element a : node.atoms) {
      node.children.push_back(build(a, ctx.required_for(a, earlier)));
      earlier.push_back(a);
    }
    return node;
  };
  return build(*p.bottom(), {});
}

bool is_geometric_lattice(const Poset& lattice) {
  if (!is_lattice(lattice)) return false;
  std::size_t n = lattice.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      Element m = *meet(lattice, x, y);
      if (std::find(lattice.lower_covers(x).begin(), lattice.lower_covers(x).end(), m) == lattice.lower_covers(x).end()) continue;
      Element j = *join(lattice, x, y);
      const auto& lc = lattice.lower_covers(j);
      if (std::find(lc.begin(), lc.end(), y) == lc.end()) return false;
    }
  Element bottom = *lattice.bottom();
  std::vector<Element> at = atoms(lattice);
  for (Element x = 0; x < n; ++x) {
    Element acc = bottom;
    for (Element a : at)
      if (lattice.leq(a, x)) acc = *join(lattice, acc, a);
    if (acc != x) return false;
  }
  return true;
}

std::vector<std::vector<Element>> nbc_bases(const Poset& lattice, const std::vector<Element>& atom_order) {
  if (!is_lattice(lattice)) throw Error("NBC bases need a lattice");
  std::size_t t = atom_order.size();
  if (t > 24) throw Infeasible("NBC enumeration limited to 24 atoms");
  std::vector<long> rank = rank_function(lattice);
  long r = rank[*lattice.top()];
  Element bottom = *lattice.bottom();
  auto join_of = [&](std::uint32_t s) {
    Element acc = bottom;
    for (std::size_t i = 0; i < t; ++i)
      if ((s >> i) & 1u) acc = *join(lattice, acc, atom_order[i]);
    return acc;
  };
  std::size_t limit = std::size_t{1} << t;
  std::vector<bool> independent(limit);
  for (std::uint32_t s = 0; s < limit; ++s)
    independent[s] = rank[join_of(s)] == __builtin_popcount(s);
  std::vector<std::uint32_t> broken;
  for (std::uint32_t s = 1; s < limit; ++s) {
    if (independent[s]) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < t && minimal; ++i)
      if (((s >> i) & 1u) && !independent[s & ~(1u << i)]) minimal = false;
    if (minimal) broken.push_back(s & (s - 1));  // drop the earliest atom
  }
  std::vector<std::vector<Element>> out;
  for (std::uint32_t s = 0; s < limit; ++s) {
    if (__builtin_popcount(s) != r || !independent[s]) continue;
    bool ok = true;
    for (std::uint32_t b : broken)
      if ((s & b) == b) {
        ok = false;
        break;
      }
    if (!ok) continue;
    std::vector<Element> base;
    for (std::size_t i = 0; i < t; ++i)
      if ((s >> i) & 1u) base.push_back(atom_order[i]);
    out.push_back(std::move(base));
  }
  return out;
}

}  // namespace posettop
