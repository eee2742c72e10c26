#include "posettop/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "posettop/arrangements.hpp"
#include "posettop/families.hpp"
#include "posettop/homology.hpp"
#include "posettop/identities.hpp"
#include "posettop/matrix.hpp"
#include "posettop/oracles.hpp"
#include "posettop/series.hpp"
#include "posettop/shelling.hpp"

namespace posettop::checks {

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Case {
  std::string name;
  int size = 0;
  std::function<Outcome()> run;
};

std::string show(const BettiMap& m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [i, v] : m) {
    if (v == 0) continue;
    if (!first) os << ", ";
    first = false;
    os << i << ": " << v.get_str();
  }
  os << '}';
  return os.str();
}

BettiMap nonzero(BettiMap m) {
  for (auto it = m.begin(); it != m.end();) it = it->second == 0 ? m.erase(it) : std::next(it);
  return m;
}

Outcome same(const std::string& what, const BettiMap& got, const BettiMap& want) {
  bool ok = nonzero(got) == nonzero(want);
  return {ok, what + " " + show(got) + (ok ? " == " : " != ") + show(want)};
}

Outcome all(std::vector<Outcome> parts) {
  Outcome out{true, ""};
  for (auto& p : parts) {
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += p.detail;
    out.ok = out.ok && p.ok;
  }
  return out;
}

Outcome equal_int(const std::string& what, const Integer& got, const Integer& want) {
  bool ok = got == want;
  return {ok, what + " " + got.get_str() + (ok ? " == " : " != ") + want.get_str()};
}

Outcome truth(const std::string& what, bool ok) { return {ok, what + (ok ? " ok" : " FAILED")}; }

HomologyResult proper_homology(const Poset& p) { return poset_homology(proper_part(p).poset); }

Outcome proper_betti_is(const Poset& p, const BettiMap& want) {
  auto h = proper_homology(p);
  return all({same("SNF", betti_map(h), want), truth("torsion-free", h.torsion_free())});
}

BlockSizeSpec spec_of(BlockSizeSpec::Kind kind, int d, int k) {
  BlockSizeSpec s;
  s.kind = kind;
  s.d = d;
  s.k = k;
  return s;
}

Outcome el_case(const Poset& p, const EdgeLabeling& lambda) {
  auto el = verify_el_labeling(p, lambda);
  if (!el.ok) return {false, "EL verification failed: " + el.reason};
  auto h = proper_homology(p);
  return all({same("decreasing chains vs SNF", betti_from_el(p, lambda), betti_map(h)),
              truth("torsion-free", h.torsion_free())});
}

std::vector<Element> permutation_on_subsets(const Derived& proper, const std::vector<int>& perm) {
  // perm is a permutation of {0..n-1}; proper is a proper part of boolean_lattice(n).
  std::map<Element, Element> index;
  for (Element i = 0; i < proper.parent.size(); ++i) index[proper.parent[i]] = i;
  std::vector<Element> g(proper.parent.size());
  for (Element i = 0; i < g.size(); ++i) {
    Element mask = proper.parent[i], image = 0;
    for (std::size_t b = 0; b < perm.size(); ++b)
      if (mask >> b & 1) image |= Element{1} << perm[b];
    g[i] = index.at(image);
  }
  return g;
}

SetPartition components(int n, std::uint32_t graph) {
  std::vector<int> root(static_cast<std::size_t>(n));
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int x) { return root[x] == x ? x : root[x] = find(root[x]); };
  auto edges = graph_edges(n);
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (graph >> e & 1) root[find(edges[e].first)] = find(edges[e].second);
  std::map<int, std::vector<int>> blocks;
  for (int v = 0; v < n; ++v) blocks[find(v)].push_back(v + 1);
  SetPartition p;
  for (auto& [r, b] : blocks) p.push_back(b);
  std::sort(p.begin(), p.end());
  return p;
}

Poset random_poset(std::mt19937_64& rng) {
  std::size_t n = 1 + rng() % 10;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<Cover> rel;
  std::bernoulli_distribution coin(0.3);
  for (Element i = 0; i < n; ++i)
    for (Element j = i + 1; j < n; ++j)
      if (coin(rng)) rel.emplace_back(i, j);
  return Poset::from_covers(std::move(labels), rel);
}

Poset crosswise_poset() {
  // 0 < a, b, c, d; a, b < x; c, d < y; x, y < 1.
  std::vector<std::string> labels{"0", "a", "b", "c", "d", "x", "y", "1"};
  std::vector<Cover> rel{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 5}, {3, 6}, {4, 6}, {5, 7}, {6, 7}};
  return Poset::from_covers(labels, rel);
}

// ---------------------------------------------------------------------------

std::vector<Case> criterion_1() {
  std::vector<Case> cases;
  for (int n = 3; n <= 6; ++n) {
    cases.push_back({"partition lattice n=" + std::to_string(n), n, [n] {
                       auto pi = partition_lattice(n);
                       return proper_betti_is(pi.poset, {{n - 3, factorial(n - 1)}});
                     }});
  }
  return cases;
}

std::vector<Case> criterion_2() {
  std::vector<Case> cases;
  for (int n = 3; n <= 5; ++n) {
    cases.push_back({"partition lattice min-max labeling n=" + std::to_string(n), n, [n] {
                       auto pi = partition_lattice(n);
                       return el_case(pi.poset, partition_labeling(pi, PartitionLabeling::min_max));
                     }});
    cases.push_back({"partition lattice max-union labeling n=" + std::to_string(n), n, [n] {
                       auto pi = partition_lattice(n);
                       return el_case(pi.poset, partition_labeling(pi, PartitionLabeling::max_union));
                     }});
  }
  for (int n = 1; n <= 5; ++n) {
    cases.push_back({"boolean lattice n=" + std::to_string(n), n, [n] {
                       auto b = boolean_lattice(n);
                       return el_case(b, boolean_labeling(b));
                     }});
  }
  cases.push_back({"noncrossing partition lattice n=4", 4, [] {
                     auto nc = noncrossing_partition_lattice(4);
                     return el_case(nc.poset, partition_labeling(nc, PartitionLabeling::min_max));
                   }});
  cases.push_back({"3-equal partition lattice n=6", 6, [] {
                     auto pk = block_restricted_partition_poset(6, spec_of(BlockSizeSpec::Kind::k_equal, 1, 3));
                     return el_case(pk.poset, k_equal_labeling(pk));
                   }});
  return cases;
}

std::vector<Case> criterion_3() {
  std::vector<Case> cases;
  for (int n = 2; n <= 4; ++n) {
    cases.push_back({"type B partition lattice n=" + std::to_string(n), n, [n] {
                       auto b = type_b_partition_lattice(n);
                       return proper_betti_is(b.poset, {{n - 2, double_factorial(2 * n - 1)}});
                     }});
  }
  return cases;
}

std::vector<Case> criterion_4() {
  std::vector<Case> cases;
  const std::vector<std::pair<int, long>> instances{{4, 2}, {6, 16}};  // ground set, E_{n-1}
  for (auto [n, expected] : instances) {
    cases.push_back({"even blocks n=" + std::to_string(n), n, [n = n, expected = expected] {
                       auto p = block_restricted_partition_poset(n, spec_of(BlockSizeSpec::Kind::zero_mod_d, 2, 0));
                       long dim = n / 2 - 2;
                       BettiGfRequest req;
                       req.family = BlockFamily::zero_mod_d;
                       req.n = n / 2;
                       req.d = 2;
                       return all({proper_betti_is(p.poset, {{dim, Integer(expected)}}),
                                   equal_int("alternating permutations", euler_alternating(n - 1), expected),
                                   equal_int("tan/sec series", euler_from_series(n - 1), expected),
                                   same("generating function", betti_gf(req), {{dim, Integer(expected)}})});
                     }});
  }
  return cases;
}

std::vector<Case> criterion_5() {
  return {{"odd blocks n=5", 5, [] {
             auto p = block_restricted_partition_poset(5, spec_of(BlockSizeSpec::Kind::k_mod_d, 2, 1));
             auto proper = proper_part(p.poset).poset;
             bool antichain = true;
             for (Element x = 0; x < proper.size(); ++x)
               for (Element y = 0; y < proper.size(); ++y)
                 if (x != y && proper.leq(x, y)) antichain = false;
             BettiGfRequest req;
             req.family = BlockFamily::one_mod_d;
             req.n = 2;
             req.d = 2;
             Integer series = double_factorial(3) * double_factorial(3);
             return all({truth("proper part is a 10-point antichain", antichain && proper.size() == 10),
                         equal_int("antichain count minus one", Integer(static_cast<long>(proper.size())) - 1, 9),
                         proper_betti_is(p.poset, {{0, series}}), same("compositional inverse", betti_gf(req), {{0, series}})});
           }}};
}

std::vector<Case> criterion_6() {
  return {{"3-equal partition lattice n=6", 6, [] {
             auto p = block_restricted_partition_poset(6, spec_of(BlockSizeSpec::Kind::k_equal, 1, 3));
             BettiMap expected{{1, 10}, {2, 10}};
             return all({proper_betti_is(p.poset, expected), same("broken skew hook formula", kequal_betti(6, 3), expected)});
           }}};
}

std::vector<Case> criterion_7() {
  return {{"blocks of size at least 3, n=6", 6, [] {
             auto p = block_restricted_partition_poset(6, spec_of(BlockSizeSpec::Kind::at_least_k, 1, 3));
             auto snf = betti_map(proper_homology(p.poset));
             auto whitney = whitney_betti(dual(p.poset).poset, true);
             BettiGfRequest req;
             req.family = BlockFamily::at_least_k;
             req.n = 6;
             req.k = 3;
             return all({same("Whitney recursion vs SNF", whitney, snf), same("generating function vs SNF", betti_gf(req), snf)});
           }}};
}

std::vector<Case> criterion_8() {
  std::vector<Case> cases;
  const std::map<int, long> derangement_values{{3, 2}, {4, 9}};
  for (auto [n, expected] : derangement_values) {
    cases.push_back({"injective words n=k=" + std::to_string(n), n, [n = n, expected = expected] {
                       auto w = word_poset(n, n, WordKind::injective);
                       return all({proper_betti_is(w.poset, {{n - 1, Integer(expected)}}),
                                   equal_int("derangement recurrence", derangements(n), expected),
                                   equal_int("derangement enumeration", derangements_enumerated(n), expected)});
                     }});
  }
  for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {4, 2}}) {
    cases.push_back({"normal words n=" + std::to_string(n) + " k=" + std::to_string(k), n, [n = n, k = k] {
                       auto w = word_poset(n, k, WordKind::normal);
                       Integer want;
                       mpz_ui_pow_ui(want.get_mpz_t(), static_cast<unsigned long>(n - 1), static_cast<unsigned long>(k));
                       return proper_betti_is(w.poset, {{k - 1, want}});
                     }});
  }
  return cases;
}

std::vector<Case> criterion_9() {
  return {{"noncrossing partitions n=4", 4, [] {
             auto nc = noncrossing_partition_lattice(4);
             auto lambda = noncrossing_labeling(nc);
             auto r = verify_r_labeling(nc.poset, lambda);
             Integer mu = mobius_invariant(nc.poset);
             return all({equal_int("|mu|", abs(mu), 5), equal_int("Catalan(3)", catalan(3), 5),
                         equal_int("Catalan recurrence", catalan_recurrence(3), 5), truth("Stanley labeling has unique increasing chains", r.ok),
                         equal_int("decreasing chains", Integer(static_cast<long>(decreasing_chains(nc.poset, lambda).size())), 5),
                         proper_betti_is(nc.poset, {{1, 5}})});
           }}};
}

std::vector<Case> criterion_10() {
  return {{"chessboard complex 5x5", 5, [] {
             auto h = homology(chessboard_complex(5, 5));
             HomologyGroup want;
             want.betti = 0;
             want.torsion = {Integer(3)};
             auto it = h.dims.find(2);
             bool ok = it != h.dims.end() && it->second == want;
             std::string got = it == h.dims.end() ? "absent"
                                                  : "betti " + it->second.betti.get_str() + ", " +
                                                        std::to_string(it->second.torsion.size()) + " torsion factor(s)" +
                                                        (it->second.torsion.empty() ? "" : " first " + it->second.torsion[0].get_str());
             return Outcome{ok, "H_2: " + got};
           }}};
}

std::vector<Case> criterion_11() {
  std::vector<Case> cases;
  for (int n = 4; n <= 7; ++n) {
    cases.push_back({"matching complex n=" + std::to_string(n), n, [n] {
                       auto c = matching_complex(n);
                       auto h = homology(c);
                       BettiMap bouc;
                       for (int k = 0; 2 * k <= n; ++k) bouc[k - 1] = bouc_betti(n, k);
                       std::vector<Outcome> parts{same("SNF vs Bouc", betti_map(h), bouc)};
                       bool lap = true;
                       for (long i = 0; i <= c.dim(); ++i) lap = lap && laplacian_betti(c, i) == h.betti(i);
                       parts.push_back(truth("Laplacian kernels", lap));
                       if (n <= 6) {
                         auto cand = laplacian_eigenvalue_candidates(n);
                         long lo = cand.begin()->get_si(), hi = cand.rbegin()->get_si();
                         bool eig = true;
                         for (long i = 0; i <= c.dim(); ++i) {
                           auto m = laplacian_matrix(c, i);
                           auto roots = integer_roots(characteristic_polynomial(m), lo, hi);
                           std::size_t total = 0;
                           for (const auto& [r, mult] : roots) {
                             total += mult;
                             if (!cand.count(r)) eig = false;
                           }
                           if (total != m.size()) eig = false;
                         }
                         parts.push_back(truth("Laplacian spectrum within {c_lambda}", eig));
                       }
                       return all(std::move(parts));
                     }});
  }
  return cases;
}

std::vector<Case> criterion_12() {
  std::vector<Case> cases;
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::set<long> r;
    std::set<int> ri;
    std::string name = "{";
    for (int i = 1; i <= 3; ++i) {
      if (mask >> (i - 1) & 1) {
        r.insert(i);
        ri.insert(i);
        name += (name.size() > 1 ? "," : "") + std::to_string(i);
      }
    }
    name += "}";
    cases.push_back({"rank selection B_4 R=" + name, 4, [r, ri] {
                       auto b = boolean_lattice(4);
                       auto sel = rank_selected(b, r);
                       Integer want = descent_class(4, ri);
                       long dim = static_cast<long>(r.size()) - 1;
                       return all({same("SNF vs descent class", betti_map(poset_homology(sel.poset)), {{dim, want}}),
                                   equal_int("inclusion-exclusion", descent_class_formula(4, ri), want),
                                   equal_int("labeled chains with descent set R", descent_count(b, boolean_labeling(b), r), want)});
                     }});
  }
  return cases;
}

std::vector<Case> criterion_13() {
  std::vector<Case> cases;
  for (int n = 1; n <= 5; ++n) {
    cases.push_back({"braid arrangement lattice vs partition lattice n=" + std::to_string(n), n, [n] {
                       auto l = intersection_semilattice(braid_arrangement(n));
                       auto pi = partition_lattice(n);
                       if (l.poset.size() != pi.poset.size())
                         return Outcome{false, "sizes " + std::to_string(l.poset.size()) + " vs " + std::to_string(pi.poset.size())};
                       std::map<std::string, Element> by_label;
                       for (Element x = 0; x < pi.poset.size(); ++x) by_label[pi.poset.label(x)] = x;
                       std::vector<Element> phi(l.poset.size());
                       std::set<Element> image;
                       bool dims_ok = true;
                       for (Element x = 0; x < l.poset.size(); ++x) {
                         std::vector<int> root(static_cast<std::size_t>(n));
                         std::iota(root.begin(), root.end(), 0);
                         std::function<int(int)> find = [&](int v) { return root[v] == v ? v : root[v] = find(root[v]); };
                         for (int i = 0; i < n; ++i) {
                           for (int j = i + 1; j < n; ++j) {
                             std::vector<Rational> row(static_cast<std::size_t>(n), Rational(0));
                             row[i] = 1;
                             row[j] = -1;
                             AffineSubspace h(static_cast<std::size_t>(n), {row}, {Rational(0)});
                             if (h.contains(l.flats[x])) root[find(i)] = find(j);
                           }
                         }
                         std::map<int, std::vector<int>> blocks;
                         for (int v = 0; v < n; ++v) blocks[find(v)].push_back(v + 1);
                         SetPartition p;
                         for (auto& [rt, b] : blocks) p.push_back(b);
                         std::sort(p.begin(), p.end());
                         auto it = by_label.find(partition_label(p, n));
                         if (it == by_label.end()) return Outcome{false, "flat maps to unknown partition"};
                         phi[x] = it->second;
                         image.insert(it->second);
                         dims_ok = dims_ok && l.dims[x] == p.size();
                       }
                       bool order = image.size() == phi.size();
                       for (Element x = 0; x < phi.size() && order; ++x)
                         for (Element y = 0; y < phi.size(); ++y)
                           if (l.poset.leq(x, y) != pi.poset.leq(phi[x], phi[y])) order = false;
                       return all({truth("flat -> partition bijection preserving and reflecting order", order),
                                   truth("dimension = number of blocks", dims_ok)});
                     }});
  }
  cases.push_back({"Zaslavsky regions of braid(4)", 4, [] {
                     auto z = zaslavsky(braid_arrangement(4));
                     return all({equal_int("r", z.regions, factorial(4)), equal_int("b (central)", z.bounded, 0)});
                   }});
  cases.push_back({"Zaslavsky regions of type B braid(2)", 2, [] {
                     auto z = zaslavsky(type_b_braid_arrangement(2));
                     auto b2 = type_b_partition_lattice(2);
                     Integer sum = 0;
                     for (Element x = 0; x < b2.poset.size(); ++x) sum += abs(b2.poset.mobius(*b2.poset.bottom(), x));
                     auto l = intersection_semilattice(type_b_braid_arrangement(2));
                     return all({equal_int("r", z.regions, 8), equal_int("sum |mu| over type B partitions", sum, 8),
                                 equal_int("lattice size", Integer(static_cast<long>(l.poset.size())), 6),
                                 equal_int("b (central)", z.bounded, 0)});
                   }});
  cases.push_back({"central arrangements have no bounded regions", 4, [] {
                     std::vector<Outcome> parts;
                     for (int n = 1; n <= 4; ++n)
                       parts.push_back(equal_int("coordinate(" + std::to_string(n) + ") b", zaslavsky(coordinate_arrangement(n)).bounded, 0));
                     for (int n = 2; n <= 5; ++n)
                       parts.push_back(equal_int("braid(" + std::to_string(n) + ") b", zaslavsky(braid_arrangement(n)).bounded, 0));
                     parts.push_back(equal_int("type B braid(3) b", zaslavsky(type_b_braid_arrangement(3)).bounded, 0));
                     parts.push_back(equal_int("coordinate(2) r", zaslavsky(coordinate_arrangement(2)).regions, 4));
                     parts.push_back(equal_int("braid(3) r", zaslavsky(braid_arrangement(3)).regions, 6));
                     return all(std::move(parts));
                   }});
  cases.push_back({"type B coordinate(2): square grid", 2, [] {
                     auto a = type_b_coordinate_arrangement(2);
                     auto z = zaslavsky(a);
                     auto l = intersection_semilattice(a);
                     auto square = cross_polytope_face_lattice(2);
                     auto profile = [](const Poset& p) {
                       auto r = rank_function(p);
                       std::map<long, long> count;
                       for (long v : r) count[v] += 1;
                       return count;
                     };
                     std::vector<std::string> labels = l.poset.labels();
                     labels.push_back("1^");
                     auto rel = l.poset.covers();
                     for (Element m : l.poset.maximal_elements()) rel.emplace_back(m, l.poset.size());
                     auto extended = Poset::from_covers(labels, rel);
                     return all({equal_int("r", z.regions, 9), equal_int("b", z.bounded, 1),
                                 truth("rank profile of L with 1^ matches the square face lattice", profile(extended) == profile(square)),
                                 equal_int("mu", mobius_invariant(extended), mobius_invariant(square)),
                                 equal_int("covers", Integer(static_cast<long>(extended.cover_count())),
                                           Integer(static_cast<long>(square.cover_count())))});
                   }});
  cases.push_back({"Orlik-Solomon braid(3)", 3, [] {
                     return same("OS", orlik_solomon_betti(braid_arrangement(3)), {{0, 1}, {1, 3}, {2, 2}});
                   }});
  cases.push_back({"Orlik-Solomon totals equal region counts, braid(n<=4)", 4, [] {
                     std::vector<Outcome> parts;
                     for (int n = 1; n <= 4; ++n) {
                       Integer total = 0;
                       for (const auto& [i, b] : orlik_solomon_betti(braid_arrangement(n))) total += b;
                       parts.push_back(equal_int("n=" + std::to_string(n), total, zaslavsky(braid_arrangement(n)).regions));
                     }
                     return all(std::move(parts));
                   }});
  cases.push_back({"Goresky-MacPherson k_equal(4,3) vs interval homology of Pi_{4,3}", 4, [] {
                     auto pk = block_restricted_partition_poset(4, spec_of(BlockSizeSpec::Kind::k_equal, 1, 3));
                     Element bottom = *pk.poset.bottom();
                     BettiMap want;
                     for (Element x = 0; x < pk.poset.size(); ++x) {
                       if (x == bottom) continue;
                       long dim_x = static_cast<long>(pk.partitions[x].size());
                       for (const auto& [j, g] : betti_open_interval(pk.poset, bottom, x).dims) want[4 - dim_x - 2 - j] += g.betti;
                     }
                     auto l = intersection_semilattice(k_equal_arrangement(4, 3));
                     return all({equal_int("lattice size", Integer(static_cast<long>(l.poset.size())),
                                           Integer(static_cast<long>(pk.poset.size()))),
                                 same("GM", goresky_macpherson_betti(k_equal_arrangement(4, 3)), want)});
                   }});
  cases.push_back({"Goresky-MacPherson reduces to Zaslavsky for braid(3)", 3, [] {
                     Integer total = 1;
                     for (const auto& [i, b] : goresky_macpherson_betti(braid_arrangement(3))) total += b;
                     Arrangement empty;
                     empty.dim = 2;
                     return all({equal_int("1 + total reduced rank", total, zaslavsky(braid_arrangement(3)).regions),
                                 same("empty arrangement (reduced)", goresky_macpherson_betti(empty), {})});
                   }});
  return cases;
}

std::vector<Case> criterion_14() {
  std::vector<Case> cases;
  cases.push_back({"Philip Hall on 100 seeded random posets", 10, [] {
                     std::mt19937_64 rng(20240611);
                     int bad = 0;
                     for (int t = 0; t < 100; ++t)
                       if (!philip_hall_check(random_poset(rng)).equal) ++bad;
                     return Outcome{bad == 0, std::to_string(100 - bad) + "/100 agree"};
                   }});
  cases.push_back({"Philip Hall on proper part of Pi_4", 4, [] {
                     auto hall = philip_hall_check(proper_part(partition_lattice(4).poset).poset);
                     return all({equal_int("mu", hall.mobius, -6), equal_int("reduced Euler characteristic", hall.reduced_euler, -6)});
                   }});
  for (auto& [name, c] : complex_corpus()) {
    cases.push_back({"boundary squared and Euler-Poincare: " + name, 3, [c = c] {
                       return all({truth("d d = 0", boundary_squared_zero(chain_complex(c))),
                                   truth("Euler-Poincare", euler_poincare_check(c))});
                     }});
  }
  const std::vector<std::pair<std::string, std::function<Poset()>>> factors{
      {"B_2", [] { return boolean_lattice(2); }},
      {"Pi_3", [] { return partition_lattice(3).poset; }},
      {"2-antichain", [] { return antichain_poset(2); }},
      {"3-chain", [] { return chain_poset(2); }}};
  for (const auto& [pn, pf] : factors) {
    for (const auto& [qn, qf] : factors) {
      cases.push_back({"Kunneth " + pn + " x " + qn, 3, [pf = pf, qf = qf] {
                         Poset p = pf(), q = qf();
                         std::vector<Outcome> parts;
                         auto run = [&](const char* what, KunnethKind kind) {
                           auto r = kunneth_check(p, q, kind);
                           parts.push_back({r.ok, std::string(what) + " " + show(r.lhs) + " vs " + show(r.rhs)});
                         };
                         run("join", KunnethKind::join);
                         run("product", KunnethKind::ordinary_product);
                         if (p.bottom() && q.bottom()) run("reduced product", KunnethKind::reduced_product);
                         if (is_bounded(p) && is_bounded(q)) run("doubly bounded product", KunnethKind::doubly_bounded_product);
                         return all(std::move(parts));
                       }});
    }
  }
  cases.push_back({"Alexander duality, graph poset on [4]", 4, [] {
                     auto g = graph_property_poset(4, GraphPredicate::any);
                     auto ambient = proper_part(g.poset);
                     std::vector<Element> disconnected, connected;
                     for (Element i = 0; i < ambient.poset.size(); ++i)
                       (graph_connected(4, g.graphs[ambient.parent[i]]) ? connected : disconnected).push_back(i);
                     auto a = alexander_duality_check(ambient.poset, disconnected);
                     auto b = alexander_duality_check(ambient.poset, connected);
                     auto qd = betti_map(poset_homology(induced_subposet(ambient.poset, disconnected).poset));
                     auto qc = betti_map(poset_homology(induced_subposet(ambient.poset, connected).poset));
                     return all({Outcome{a.ok, "Q = disconnected: " + show(a.lhs) + " vs " + show(a.rhs)},
                                 Outcome{b.ok, "Q = connected: " + show(b.lhs) + " vs " + show(b.rhs)},
                                 same("disconnected graphs", qd, {{1, 6}}), same("connected graphs", qc, {{2, 6}})});
                   }});
  cases.push_back({"Alexander duality, rank 1 of B_4", 4, [] {
                     auto b = proper_part(boolean_lattice(4));
                     std::vector<Element> atoms_only;
                     for (Element i = 0; i < b.poset.size(); ++i)
                       if (__builtin_popcountll(b.parent[i]) == 1) atoms_only.push_back(i);
                     auto r = alexander_duality_check(b.poset, atoms_only);
                     return Outcome{r.ok, show(r.lhs) + " vs " + show(r.rhs)};
                   }});
  cases.push_back({"Quillen fiber lemma, disconnected graphs -> Pi_4", 4, [] {
                     auto g = graph_property_poset(4, GraphPredicate::disconnected);
                     auto src = proper_part(g.poset);
                     auto pi = partition_lattice(4);
                     auto tgt = proper_part(pi.poset);
                     std::map<std::string, Element> by_label;
                     for (Element i = 0; i < tgt.poset.size(); ++i) by_label[tgt.poset.label(i)] = i;
                     PosetMap f{src.poset, tgt.poset, {}};
                     for (Element i = 0; i < src.poset.size(); ++i)
                       f.map.push_back(by_label.at(partition_label(components(4, g.graphs[src.parent[i]]), 4)));
                     auto r = quillen_fiber_check(f);
                     return all({Outcome{r.status == FiberStatus::holds, "fibers acyclic and " + show(r.lhs) + " vs " + show(r.rhs)},
                                 same("source", r.lhs, {{1, 6}})});
                   }});
  cases.push_back({"general fiber theorem, deflating a (2,2,2)-inflated V", 3, [] {
                     Poset v = Poset::from_covers({"m", "a", "b"}, {{0, 1}, {0, 2}});
                     std::vector<std::string> labels{"m1", "m2", "a1", "a2", "b1", "b2"};
                     std::vector<Cover> rel;
                     for (Element lo : {0, 1})
                       for (Element hi : {2, 3, 4, 5}) rel.emplace_back(lo, hi);
                     PosetMap f{Poset::from_covers(labels, rel), v, {0, 0, 1, 1, 2, 2}};
                     auto r = general_fiber_betti_check(f);
                     return all({Outcome{r.status == FiberStatus::holds, show(r.lhs) + " vs " + show(r.rhs)}, same("P", r.lhs, {{1, 3}})});
                   }});
  for (int n = 1; n <= 5; ++n) {
    cases.push_back({"fixed point Lefschetz on proper part of B_" + std::to_string(n), n, [n] {
                       auto b = proper_part(boolean_lattice(n));
                       std::vector<std::vector<int>> group;
                       std::vector<int> id(static_cast<std::size_t>(n));
                       std::iota(id.begin(), id.end(), 0);
                       group.push_back(id);
                       if (n >= 2) {
                         auto t = id;
                         std::swap(t[0], t[1]);
                         group.push_back(t);
                       }
                       auto cyc = id;
                       std::rotate(cyc.begin(), cyc.begin() + 1, cyc.end());
                       group.push_back(cyc);
                       std::mt19937_64 rng(static_cast<unsigned>(1000 + n));
                       for (int t = 0; t < 20; ++t) {
                         auto p = id;
                         std::shuffle(p.begin(), p.end(), rng);
                         group.push_back(p);
                       }
                       int bad = 0;
                       for (const auto& perm : group)
                         if (!fixed_point_lefschetz(b.poset, permutation_on_subsets(b, perm)).equal) ++bad;
                       auto cycle = fixed_point_lefschetz(b.poset, permutation_on_subsets(b, cyc));
                       std::vector<Outcome> parts{
                           Outcome{bad == 0, std::to_string(group.size() - bad) + "/" + std::to_string(group.size()) + " agree"}};
                       if (n >= 2) parts.push_back(equal_int("n-cycle trace", cycle.lhs, -1));
                       return all(std::move(parts));
                     }});
  }
  cases.push_back({"fixed point Lefschetz on normal words n=3 k=2", 3, [] {
                     auto w = word_poset(3, 2, WordKind::normal);
                     auto proper = proper_part(w.poset);
                     std::map<std::vector<int>, Element> index;
                     for (Element i = 0; i < proper.poset.size(); ++i) index[w.words[proper.parent[i]]] = i;
                     std::vector<int> perm{0, 1, 2};
                     int bad = 0, total = 0;
                     Integer swap_trace = -99;
                     do {
                       std::vector<Element> g(proper.poset.size());
                       for (Element i = 0; i < g.size(); ++i) {
                         auto word = w.words[proper.parent[i]];
                         for (auto& letter : word) letter = perm[letter - 1] + 1;
                         g[i] = index.at(word);
                       }
                       auto r = fixed_point_lefschetz(proper.poset, g);
                       if (perm == std::vector<int>{1, 0, 2}) swap_trace = r.lhs;
                       if (!r.equal) ++bad;
                       ++total;
                     } while (std::next_permutation(perm.begin(), perm.end()));
                     return all({Outcome{bad == 0, std::to_string(total - bad) + "/" + std::to_string(total) + " agree"},
                                 equal_int("(1 2) trace (|F(g)| - 1)^k", swap_trace, 0)});
                   }});
  cases.push_back({"crosscut and closure lemmas", 4, [] {
                     auto a = crosscut_check(partition_lattice(4).poset);
                     auto b = crosscut_check(boolean_lattice(3));
                     // cl adds element n to every nonempty proper subset of [n - 1] inside proper part of B_3.
                     auto p = proper_part(boolean_lattice(3));
                     std::map<Element, Element> index;
                     for (Element i = 0; i < p.poset.size(); ++i) index[p.parent[i]] = i;
                     std::vector<Element> keep;
                     for (Element i = 0; i < p.poset.size(); ++i) keep.push_back(i);
                     std::vector<Element> cl(p.poset.size());
                     for (Element i = 0; i < cl.size(); ++i) {
                       Element m = p.parent[i] | 4;
                       cl[i] = m == 7 ? i : index.at(m);
                     }
                     std::vector<Outcome> parts{Outcome{a.ok, "crosscut Pi_4 " + show(a.lhs) + " vs " + show(a.rhs)},
                                                Outcome{b.ok, "crosscut B_3 " + show(b.lhs) + " vs " + show(b.rhs)}};
                     if (is_closure_operator(p.poset, cl)) {
                       auto c = closure_check(p.poset, cl);
                       parts.push_back(Outcome{c.ok, "closure " + show(c.lhs) + " vs " + show(c.rhs)});
                     }
                     std::vector<Element> identity(p.poset.size());
                     std::iota(identity.begin(), identity.end(), 0);
                     auto d = closure_check(p.poset, identity);
                     parts.push_back(Outcome{d.ok, "identity closure " + show(d.lhs) + " vs " + show(d.rhs)});
                     return all(std::move(parts));
                   }});
  return cases;
}

std::vector<Case> criterion_15() {
  std::vector<Case> cases;
  cases.push_back({"every facet order of the tetrahedron boundary shells", 4, [] {
                     auto c = skeleton(SimplicialComplex::simplex(4), 2);
                     auto order = c.facets();
                     std::sort(order.begin(), order.end());
                     int good = 0, total = 0;
                     do {
                       ++total;
                       if (is_shelling(c, order).ok) ++good;
                     } while (std::next_permutation(order.begin(), order.end()));
                     return Outcome{good == total && total == 24, std::to_string(good) + "/" + std::to_string(total) + " orders shell"};
                   }});
  cases.push_back({"two disjoint edges are not shellable", 4, [] {
                     auto c = SimplicialComplex::from_facets(4, {{0, 1}, {2, 3}});
                     auto order = c.facets();
                     std::sort(order.begin(), order.end());
                     int good = 0;
                     do {
                       if (is_shelling(c, order).ok) ++good;
                     } while (std::next_permutation(order.begin(), order.end()));
                     auto s = find_shelling(c);
                     return all({Outcome{good == 0, std::to_string(good) + " shelling orders"},
                                 truth("search reports none", s.status == SearchStatus::none)});
                   }});
  auto all_atom_orders = [](const Poset& p) {
    auto at = atoms(p);
    std::sort(at.begin(), at.end());
    int good = 0, total = 0;
    do {
      ++total;
      if (verify_recursive_atom_ordering(p, atom_order_certificate(p, at)).ok) ++good;
    } while (std::next_permutation(at.begin(), at.end()));
    auto s = search_recursive_atom_ordering(p);
    bool found = s.status == SearchStatus::found && s.certificate && verify_recursive_atom_ordering(p, *s.certificate).ok;
    return all({Outcome{good == total, std::to_string(good) + "/" + std::to_string(total) + " atom orders are recursive"},
                truth("search finds a verified certificate", found)});
  };
  cases.push_back({"recursive atom orderings of B_4", 4, [all_atom_orders] { return all_atom_orders(boolean_lattice(4)); }});
  cases.push_back({"recursive atom orderings of Pi_4", 4, [all_atom_orders] { return all_atom_orders(partition_lattice(4).poset); }});
  cases.push_back({"crosswise 4-atom poset has no recursive atom ordering", 4, [] {
                     auto p = crosswise_poset();
                     auto s = search_recursive_atom_ordering(p);
                     auto shell = find_shelling(order_complex(proper_part(p).poset));
                     return all({truth("search reports none", s.status == SearchStatus::none),
                                 truth("proper part not shellable", shell.status == SearchStatus::none)});
                   }});
  return cases;
}

struct CriterionInfo {
  const char* title;
  const char* suite;
  std::vector<Case> (*cases)();
};

const std::vector<CriterionInfo>& registry() {
  static const std::vector<CriterionInfo> r{
      {"partition lattice top homology", "families", criterion_1},
      {"EL labelings agree with SNF", "shelling", criterion_2},
      {"type B partition lattice", "families", criterion_3},
      {"even block partitions", "families", criterion_4},
      {"odd block partitions", "families", criterion_5},
      {"3-equal partition lattice", "families", criterion_6},
      {"blocks of size at least 3", "families", criterion_7},
      {"injective and normal words", "families", criterion_8},
      {"noncrossing partitions", "families", criterion_9},
      {"chessboard torsion", "families", criterion_10},
      {"matching complexes", "families", criterion_11},
      {"rank selection", "families", criterion_12},
      {"arrangements", "arrangements", criterion_13},
      {"identity suites", "identities", criterion_14},
      {"shelling and recursive atom orderings", "shelling", criterion_15}};
  return r;
}

const CriterionInfo& info(int id) {
  if (id < 1 || id > kCriterionCount) throw Error("unknown criterion " + std::to_string(id));
  return registry()[static_cast<std::size_t>(id - 1)];
}

}  // namespace

std::size_t CriterionResult::ran() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.skipped; }));
}

std::size_t CriterionResult::failed() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.skipped && !c.ok; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all", "identities", "families", "shelling", "arrangements"};
  return names;
}

std::vector<int> suite_criteria(const std::string& suite) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw Error("unknown suite '" + suite + "'");
  std::vector<int> ids;
  for (int id = 1; id <= kCriterionCount; ++id)
    if (suite == "all" || suite == info(id).suite) ids.push_back(id);
  return ids;
}

std::string criterion_title(int id) { return info(id).title; }
std::string criterion_suite(int id) { return info(id).suite; }

CriterionResult run_criterion(int id, const Options& options) {
  const auto& ci = info(id);
  CriterionResult out;
  out.id = id;
  out.title = ci.title;
  out.suite = ci.suite;
  auto cases = ci.cases();
  out.cases.resize(cases.size());
  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    auto& r = out.cases[i];
    r.name = cases[i].name;
    r.size = cases[i].size;
    r.repro = "posettop check " + std::string(ci.suite) + " --case '" + cases[i].name + "'";
    bool selected = options.filter.empty() || cases[i].name.find(options.filter) != std::string::npos;
    r.skipped = !selected || cases[i].size > options.max_size;
    if (!r.skipped) todo.push_back(i);
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < todo.size();) {
      std::size_t i = todo[k];
      auto& r = out.cases[i];
      auto start = std::chrono::steady_clock::now();
      try {
        auto o = cases[i].run();
        r.ok = o.ok;
        r.detail = o.detail;
      } catch (const std::exception& e) {
        r.ok = false;
        r.detail = std::string("exception: ") + e.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };
  unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(todo.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

std::vector<CriterionResult> run_suite(const std::string& suite, const Options& options) {
  std::vector<CriterionResult> out;
  for (int id : suite_criteria(suite)) out.push_back(run_criterion(id, options));
  return out;
}

std::string scoreboard_json(const std::string& suite, const Options& options, const std::vector<CriterionResult>& results) {
  using nlohmann::json;
  json criteria = json::array();
  std::size_t passed = 0, failed = 0, skipped = 0;
  json failures = json::array();
  for (const auto& r : results) {
    json cases = json::array();
    for (const auto& c : r.cases) {
      std::string status = c.skipped ? "skipped" : c.ok ? "pass" : "fail";
      cases.push_back(json{{"name", c.name}, {"size", c.size}, {"status", status}, {"detail", c.detail}});
      if (!c.skipped && !c.ok) failures.push_back(json{{"criterion", r.id}, {"case", c.name}, {"detail", c.detail}, {"repro", c.repro}});
    }
    std::string status = r.skipped() ? "skipped" : r.passed() ? "pass" : "fail";
    (r.skipped() ? skipped : r.passed() ? passed : failed) += 1;
    criteria.push_back(json{{"id", r.id}, {"title", r.title}, {"suite", r.suite}, {"status", status}, {"cases", cases}});
  }
  json out{{"suite", suite},
           {"exact", true},
           {"criteria", criteria},
           {"failures", failures},
           {"summary", json{{"passed", passed}, {"failed", failed}, {"skipped", skipped}}}};
  if (options.max_size != std::numeric_limits<int>::max()) out["max_size"] = options.max_size;
  return out.dump(2);
}

std::vector<std::pair<std::string, SimplicialComplex>> complex_corpus() {
  std::vector<std::pair<std::string, SimplicialComplex>> c;
  c.emplace_back("empty complex", SimplicialComplex::void_complex(0));
  c.emplace_back("point", SimplicialComplex::simplex(1));
  c.emplace_back("triangle boundary", skeleton(SimplicialComplex::simplex(3), 1));
  c.emplace_back("tetrahedron boundary", skeleton(SimplicialComplex::simplex(4), 2));
  c.emplace_back("two disjoint edges", SimplicialComplex::from_facets(4, {{0, 1}, {2, 3}}));
  c.emplace_back("projective plane", SimplicialComplex::from_facets(6, {{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                                                                         {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}}));
  std::vector<Face> torus;
  for (Vertex i = 0; i < 7; ++i) {
    torus.push_back({i, (i + 1) % 7, (i + 3) % 7});
    torus.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  for (auto& f : torus) std::sort(f.begin(), f.end());
  c.emplace_back("torus", SimplicialComplex::from_facets(7, torus));
  for (int n = 3; n <= 6; ++n) c.emplace_back("matching complex " + std::to_string(n), matching_complex(n));
  c.emplace_back("chessboard 3x3", chessboard_complex(3, 3));
  c.emplace_back("chessboard 3x4", chessboard_complex(3, 4));
  c.emplace_back("chessboard 4x4", chessboard_complex(4, 4));
  c.emplace_back("inflated triangle boundary", inflation(skeleton(SimplicialComplex::simplex(3), 1), {2, 1, 3}));
  c.emplace_back("order complex of proper part of Pi_4", order_complex(proper_part(partition_lattice(4).poset).poset));
  c.emplace_back("order complex of proper part of B_3", order_complex(proper_part(boolean_lattice(3)).poset));
  return c;
}

}  // namespace posettop::checks
