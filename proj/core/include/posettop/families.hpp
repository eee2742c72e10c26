#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "posettop/complex.hpp"
#include "posettop/labeling.hpp"
#include "posettop/poset.hpp"

namespace posettop {

// Blocks of a partition of [n] (1-based), each sorted, ordered by minimum.
using SetPartition = std::vector<std::vector<int>>;

struct PartitionFamily {
  Poset poset;
  int n = 0;
  std::vector<SetPartition> partitions;  // indexed by element id
};

std::string partition_label(const SetPartition& p, int n);
// All set partitions of [n] in restricted-growth-string order.
std::vector<SetPartition> set_partitions(int n);
// x refines y.
bool refines(const SetPartition& x, const SetPartition& y, int n);

// B_n; element ids equal subset bitmasks (bit i is element i + 1).
Poset boolean_lattice(int n);
Poset divisor_lattice(long n);
PartitionFamily partition_lattice(int n);
PartitionFamily noncrossing_partition_lattice(int n);

struct BlockSizeSpec {
  enum class Kind { zero_mod_d, k_mod_d, at_least_k, k_equal, size_set };
  Kind kind = Kind::at_least_k;
  int d = 1;
  int k = 1;
  std::set<int> sizes;

  bool allows(int size) const;
};

// Induced subposet of Pi_n on partitions whose block sizes satisfy spec.
PartitionFamily block_restricted_partition_poset(int n, const BlockSizeSpec& spec);

// Signed blocks: the zero block (first, holds 0 and unsigned elements) and
// blocks whose minimum in absolute value is unsigned.
using SignedPartition = std::vector<std::vector<int>>;

struct TypeBFamily {
  Poset poset;
  int n = 0;
  std::vector<SignedPartition> partitions;
};

TypeBFamily type_b_partition_lattice(int n);

struct SubspaceFamily {
  Poset poset;
  int n = 0;
  int q = 0;
  std::vector<int> dims;
  std::vector<std::vector<std::vector<int>>> rref;  // field elements 0..q-1
};

// Subspaces of F_q^n by inclusion; q a prime power.
SubspaceFamily subspace_lattice(int n, int q);

// Face lattice of the n-cross-polytope: signed subsets with no i and -i, plus 1^.
Poset cross_polytope_face_lattice(int n);

struct PermutationFamily {
  Poset poset;
  std::vector<std::vector<int>> perms;  // one-line notation, 1-based
};

// Bruhat order on S_n.
PermutationFamily bruhat_order(int n);

enum class WordKind { injective, normal, all };

struct WordFamily {
  Poset poset;
  std::vector<std::vector<int>> words;
};

// Words of length <= k over [n] under subword order; element 0 is the empty word.
WordFamily word_poset(int n, int k, WordKind kind);

enum class GraphPredicate { any, disconnected, connected, not_k_connected, not_d_edge_connected, no_perfect_matching };

struct GraphFamily {
  Poset poset;
  int n = 0;
  std::vector<std::uint32_t> graphs;  // edge bitmasks, bit index edge_index(i, j)
};

int edge_index(int n, int i, int j);  // 0-based i < j
std::vector<std::pair<int, int>> graph_edges(int n);
bool graph_connected(int n, std::uint32_t edges);
bool graph_k_connected(int n, std::uint32_t edges, int k);
bool graph_d_edge_connected(int n, std::uint32_t edges, int d);
bool graph_has_perfect_matching(int n, std::uint32_t edges);

// Graphs on [n] ordered by edge inclusion; param is k or d where relevant.
GraphFamily graph_property_poset(int n, GraphPredicate predicate, int param = 0);

// Vertices are the pairs i < j of [n] in lexicographic order.
SimplicialComplex matching_complex(int n);
// Vertex (i, j) has id i * n + j.
SimplicialComplex chessboard_complex(int m, int n);
// Vertex (i, c) has id sum_{v < i} m_v + c.
SimplicialComplex inflation(const SimplicialComplex& c, const std::vector<int>& m);
SimplicialComplex colored_chessboard_complex(int m, int n, int r);

// Partitions of Pi_n cut from sigma by splitting it into contiguous segments.
std::vector<Element> splitting_subposet(const PartitionFamily& pi, const std::vector<int>& sigma);

// Built-in EL-labelings.
EdgeLabeling boolean_labeling(const Poset& boolean);
enum class PartitionLabeling { min_max, max_union };
EdgeLabeling partition_labeling(const PartitionFamily& pi, PartitionLabeling kind);
EdgeLabeling k_equal_labeling(const PartitionFamily& pi);
EdgeLabeling noncrossing_labeling(const PartitionFamily& nc);
// lambda(x, y) = smallest i with x v a_i = y.
EdgeLabeling geometric_labeling(const Poset& lattice, const std::vector<Element>& atom_order);

}  // namespace posettop
