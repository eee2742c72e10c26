#include <map>
#include <sstream>

#include "cli.hpp"
#include "posettop/families.hpp"

namespace posettop::cli {

namespace {

using Params = std::vector<std::string>;
using Builder = std::function<FamilyObject(const Params&)>;

long integer_param(const Params& p, std::size_t i, const std::string& family) {
  if (i >= p.size()) throw Error("family " + family + ": missing parameter " + std::to_string(i + 1));
  try {
    std::size_t used = 0;
    long v = std::stol(p[i], &used);
    if (used != p[i].size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw Error("family " + family + ": parameter '" + p[i] + "' is not an integer");
  }
}

void arity(const Params& p, std::size_t n, const std::string& family) {
  if (p.size() != n)
    throw Error("family " + family + " takes " + std::to_string(n) + " parameter(s), got " + std::to_string(p.size()));
}

int small(long v, const std::string& family) {
  if (v < 0 || v > 64) throw Error("family " + family + ": parameter out of range");
  return static_cast<int>(v);
}

FamilyObject poset_object(std::string name, Poset p) {
  FamilyObject o;
  o.kind = ObjectKind::poset;
  o.name = std::move(name);
  o.poset = std::move(p);
  return o;
}

FamilyObject complex_object(std::string name, SimplicialComplex c) {
  FamilyObject o;
  o.kind = ObjectKind::complex;
  o.name = std::move(name);
  o.complex = std::move(c);
  return o;
}

FamilyObject arrangement_object(std::string name, Arrangement a) {
  FamilyObject o;
  o.kind = ObjectKind::arrangement;
  o.name = std::move(name);
  o.arrangement = std::move(a);
  return o;
}

template <class F>
Builder unary(const std::string& name, F f) {
  return [name, f](const Params& p) {
    arity(p, 1, name);
    return f(small(integer_param(p, 0, name), name));
  };
}

template <class F>
Builder binary(const std::string& name, F f) {
  return [name, f](const Params& p) {
    arity(p, 2, name);
    return f(small(integer_param(p, 0, name), name), small(integer_param(p, 1, name), name));
  };
}

FamilyObject block_family(const std::string& name, int n, const BlockSizeSpec& spec) {
  auto pf = std::make_shared<PartitionFamily>(block_restricted_partition_poset(n, spec));
  auto o = poset_object(name, pf->poset);
  if (spec.kind == BlockSizeSpec::Kind::k_equal) o.labelings.push_back({"k-equal", [pf] { return k_equal_labeling(*pf); }});
  return o;
}

BlockSizeSpec make_spec(BlockSizeSpec::Kind kind, int d, int k) {
  BlockSizeSpec s;
  s.kind = kind;
  s.d = d;
  s.k = k;
  return s;
}

void add_geometric(FamilyObject& o) {
  Poset p = o.poset;
  o.labelings.push_back({"geometric", [p] {
                           auto at = atoms(p);
                           std::sort(at.begin(), at.end());
                           return geometric_labeling(p, at);
                         }});
}

const std::map<std::string, Builder>& poset_builders() {
  static const std::map<std::string, Builder> b{
      {"boolean", unary("boolean",
                        [](int n) {
                          auto o = poset_object("boolean", boolean_lattice(n));
                          Poset p = o.poset;
                          o.labelings.push_back({"boolean", [p] { return boolean_labeling(p); }});
                          add_geometric(o);
                          return o;
                        })},
      {"divisor", unary("divisor", [](int n) { return poset_object("divisor", divisor_lattice(n)); })},
      {"partition", unary("partition",
                          [](int n) {
                            auto pf = std::make_shared<PartitionFamily>(partition_lattice(n));
                            auto o = poset_object("partition", pf->poset);
                            o.labelings.push_back({"min-max", [pf] { return partition_labeling(*pf, PartitionLabeling::min_max); }});
                            o.labelings.push_back({"max-union", [pf] { return partition_labeling(*pf, PartitionLabeling::max_union); }});
                            add_geometric(o);
                            return o;
                          })},
      {"noncrossing", unary("noncrossing",
                            [](int n) {
                              auto pf = std::make_shared<PartitionFamily>(noncrossing_partition_lattice(n));
                              auto o = poset_object("noncrossing", pf->poset);
                              o.labelings.push_back({"stanley", [pf] { return noncrossing_labeling(*pf); }});
                              o.labelings.push_back({"min-max", [pf] { return partition_labeling(*pf, PartitionLabeling::min_max); }});
                              o.labelings.push_back({"max-union", [pf] { return partition_labeling(*pf, PartitionLabeling::max_union); }});
                              return o;
                            })},
      {"type-b", unary("type-b",
                       [](int n) {
                         auto o = poset_object("type-b", type_b_partition_lattice(n).poset);
                         add_geometric(o);
                         return o;
                       })},
      {"subspace", binary("subspace",
                          [](int n, int q) {
                            auto o = poset_object("subspace", subspace_lattice(n, q).poset);
                            add_geometric(o);
                            return o;
                          })},
      {"cross-polytope", unary("cross-polytope", [](int n) { return poset_object("cross-polytope", cross_polytope_face_lattice(n)); })},
      {"bruhat", unary("bruhat", [](int n) { return poset_object("bruhat", bruhat_order(n).poset); })},
      {"chain", unary("chain", [](int n) { return poset_object("chain", chain_poset(static_cast<std::size_t>(n))); })},
      {"antichain", unary("antichain", [](int n) { return poset_object("antichain", antichain_poset(static_cast<std::size_t>(n))); })},
      {"even", unary("even",
                     [](int n) { return block_family("even", n, make_spec(BlockSizeSpec::Kind::zero_mod_d, 2, 0)); })},
      {"odd", unary("odd", [](int n) { return block_family("odd", n, make_spec(BlockSizeSpec::Kind::k_mod_d, 2, 1)); })},
      {"zero-mod-d", binary("zero-mod-d",
                            [](int n, int d) { return block_family("zero-mod-d", n, make_spec(BlockSizeSpec::Kind::zero_mod_d, d, 0)); })},
      {"k-mod-d",
       [](const Params& p) {
         arity(p, 3, "k-mod-d");
         int n = small(integer_param(p, 0, "k-mod-d"), "k-mod-d");
         int d = small(integer_param(p, 1, "k-mod-d"), "k-mod-d");
         int k = small(integer_param(p, 2, "k-mod-d"), "k-mod-d");
         return block_family("k-mod-d", n, make_spec(BlockSizeSpec::Kind::k_mod_d, d, k));
       }},
      {"at-least-k",
       binary("at-least-k", [](int n, int k) { return block_family("at-least-k", n, make_spec(BlockSizeSpec::Kind::at_least_k, 1, k)); })},
      {"k-equal", binary("k-equal", [](int n, int k) { return block_family("k-equal", n, make_spec(BlockSizeSpec::Kind::k_equal, 1, k)); })},
      {"block-sizes",
       [](const Params& p) {
         arity(p, 2, "block-sizes");
         int n = small(integer_param(p, 0, "block-sizes"), "block-sizes");
         BlockSizeSpec s;
         s.kind = BlockSizeSpec::Kind::size_set;
         std::stringstream ss(p[1]);
         for (std::string part; std::getline(ss, part, ',');) s.sizes.insert(small(integer_param({part}, 0, "block-sizes"), "block-sizes"));
         return block_family("block-sizes", n, s);
       }},
      {"injective-words",
       binary("injective-words", [](int n, int k) { return poset_object("injective-words", word_poset(n, k, WordKind::injective).poset); })},
      {"normal-words",
       binary("normal-words", [](int n, int k) { return poset_object("normal-words", word_poset(n, k, WordKind::normal).poset); })},
      {"all-words", binary("all-words", [](int n, int k) { return poset_object("all-words", word_poset(n, k, WordKind::all).poset); })},
      {"graphs", unary("graphs", [](int n) { return poset_object("graphs", graph_property_poset(n, GraphPredicate::any).poset); })},
      {"disconnected-graphs", unary("disconnected-graphs",
                                    [](int n) {
                                      return poset_object("disconnected-graphs",
                                                          graph_property_poset(n, GraphPredicate::disconnected).poset);
                                    })},
      {"connected-graphs",
       unary("connected-graphs",
             [](int n) { return poset_object("connected-graphs", graph_property_poset(n, GraphPredicate::connected).poset); })},
      {"not-k-connected", binary("not-k-connected",
                                 [](int n, int k) {
                                   return poset_object("not-k-connected",
                                                       graph_property_poset(n, GraphPredicate::not_k_connected, k).poset);
                                 })},
      {"not-d-edge-connected", binary("not-d-edge-connected",
                                      [](int n, int d) {
                                        return poset_object("not-d-edge-connected",
                                                            graph_property_poset(n, GraphPredicate::not_d_edge_connected, d).poset);
                                      })},
      {"no-perfect-matching", unary("no-perfect-matching", [](int n) {
         return poset_object("no-perfect-matching", graph_property_poset(n, GraphPredicate::no_perfect_matching).poset);
       })}};
  return b;
}

const std::map<std::string, Builder>& complex_builders() {
  static const std::map<std::string, Builder> b{
      {"matching", unary("matching", [](int n) { return complex_object("matching", matching_complex(n)); })},
      {"chessboard", binary("chessboard", [](int m, int n) { return complex_object("chessboard", chessboard_complex(m, n)); })},
      {"colored-chessboard",
       [](const Params& p) {
         arity(p, 3, "colored-chessboard");
         int m = small(integer_param(p, 0, "colored-chessboard"), "colored-chessboard");
         int n = small(integer_param(p, 1, "colored-chessboard"), "colored-chessboard");
         int r = small(integer_param(p, 2, "colored-chessboard"), "colored-chessboard");
         return complex_object("colored-chessboard", colored_chessboard_complex(m, n, r));
       }},
      {"simplex-boundary", unary("simplex-boundary", [](int n) {
         if (n < 1) throw Error("family simplex-boundary: need n >= 1");
         return complex_object("simplex-boundary", skeleton(SimplicialComplex::simplex(static_cast<std::size_t>(n)), n - 2));
       })}};
  return b;
}

const std::map<std::string, Builder>& arrangement_builders() {
  static const std::map<std::string, Builder> b{
      {"coordinate", unary("coordinate", [](int n) { return arrangement_object("coordinate", coordinate_arrangement(n)); })},
      {"type-b-coordinate",
       unary("type-b-coordinate", [](int n) { return arrangement_object("type-b-coordinate", type_b_coordinate_arrangement(n)); })},
      {"braid", unary("braid", [](int n) { return arrangement_object("braid", braid_arrangement(n)); })},
      {"type-b-braid", unary("type-b-braid", [](int n) { return arrangement_object("type-b-braid", type_b_braid_arrangement(n)); })},
      {"k-equal-arrangement", binary("k-equal-arrangement", [](int n, int k) {
         return arrangement_object("k-equal-arrangement", k_equal_arrangement(n, k));
       })}};
  return b;
}

}  // namespace

FamilyObject build_family(const std::vector<std::string>& spec, bool prefer_arrangement) {
  if (spec.empty()) throw Error("missing family name");
  std::string name = spec[0];
  Params params(spec.begin() + 1, spec.end());
  if (prefer_arrangement && name == "k-equal") name = "k-equal-arrangement";
  for (const auto* table : {&arrangement_builders(), &poset_builders(), &complex_builders()}) {
    auto it = table->find(name);
    if (it != table->end()) return it->second(params);
  }
  throw Error("unknown family '" + spec[0] + "'");
}

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (const auto* table : {&poset_builders(), &complex_builders(), &arrangement_builders()})
    for (const auto& [name, b] : *table) out.push_back(name);
  return out;
}

}  // namespace posettop::cli
