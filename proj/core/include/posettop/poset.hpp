#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posettop/common.hpp"

namespace posettop {

// Square boolean matrix stored as rows of 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const { return n_; }
  std::size_t words() const { return words_; }
  bool test(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
  void reset(std::size_t i, std::size_t j) {
    bits_[i * words_ + j / 64] &= ~(std::uint64_t{1} << (j % 64));
  }
  const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words_; }
  std::uint64_t* row(std::size_t i) { return bits_.data() + i * words_; }
  void or_row(std::size_t dst, std::size_t src) {
    std::uint64_t* d = row(dst);
    const std::uint64_t* s = row(src);
    for (std::size_t w = 0; w < words_; ++w) d[w] |= s[w];
  }
  std::size_t row_count(std::size_t i) const;
  std::vector<std::size_t> row_members(std::size_t i) const;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct Chain {
  std::vector<Element> elements;
  long length() const { return static_cast<long>(elements.size()) - 1; }
};

using Cover = std::pair<Element, Element>;

class Poset {
 public:
  Poset();

  // Builds the order from arbitrary relation pairs (lower, upper); the Hasse
  // diagram is the transitive reduction.  Throws Error naming a cycle.
  static Poset from_covers(std::vector<std::string> labels, const std::vector<Cover>& relations);
  // less(x, y) must describe a strict partial order on [0, labels.size()).
  static Poset from_order(std::vector<std::string> labels,
                          const std::function<bool(Element, Element)>& less);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::string& label(Element x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const { return labels_; }

  bool leq(Element x, Element y) const { return up_.test(x, y); }
  bool less(Element x, Element y) const { return x != y && up_.test(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }
  const BitMatrix& up_matrix() const { return up_; }
  const BitMatrix& down_matrix() const { return down_; }

  const std::vector<Element>& upper_covers(Element x) const { return upper_.at(x); }
  const std::vector<Element>& lower_covers(Element x) const { return lower_.at(x); }
  std::vector<Cover> covers() const;
  std::size_t cover_count() const;
  // Topological order: every element precedes the elements above it.
  const std::vector<Element>& linear_extension() const { return topo_; }

  std::optional<Element> bottom() const;
  std::optional<Element> top() const;
  std::vector<Element> minimal_elements() const;
  std::vector<Element> maximal_elements() const;

  // mu(x, y); throws unless x <= y.
  Integer mobius(Element x, Element y) const;
  // Row mu(x, .) indexed by element; zero off the upper set of x.
  const std::vector<Integer>& mobius_row(Element x) const;

 private:
  struct MobiusCache;
  void finish_from_up();

  std::vector<std::string> labels_;
  BitMatrix up_;
  BitMatrix down_;
  std::vector<std::vector<Element>> upper_;
  std::vector<std::vector<Element>> lower_;
  std::vector<Element> topo_;
  std::shared_ptr<MobiusCache> mobius_;
};

// mu(0^, 1^) of a bounded poset.
Integer mobius_invariant(const Poset& p);

Poset direct_product(const Poset& p, const Poset& q);
// Every element of p below every element of q.
Poset ordinal_join(const Poset& p, const Poset& q);
Poset disjoint_union(const Poset& p, const Poset& q);
Poset chain_poset(std::size_t length);
Poset antichain_poset(std::size_t size);

// A poset derived from a parent, with parent[i] the parent id of element i
// (kNoElement for freshly added elements).
struct Derived {
  Poset poset;
  std::vector<Element> parent;
};

Derived induced_subposet(const Poset& p, const std::vector<Element>& elements);
Derived dual(const Poset& p);
// Removes the minimum and the maximum when they exist.
Derived proper_part(const Poset& p);
// Always adds fresh 0^ (first) and 1^ (last).
Derived bounded_extension(const Poset& p);
Derived open_interval(const Poset& p, Element x, Element y);
Derived closed_interval(const Poset& p, Element x, Element y);
Derived upper_set(const Poset& p, Element x, bool strict);
Derived lower_set(const Poset& p, Element x, bool strict);

// Length of the longest chain ending at x.
std::vector<long> heights(const Poset& p);
long poset_length(const Poset& p);
bool is_pure(const Poset& p);
bool is_bounded(const Poset& p);
// Meet/join of a pair when it exists.
std::optional<Element> meet(const Poset& p, Element x, Element y);
std::optional<Element> join(const Poset& p, Element x, Element y);
bool is_meet_semilattice(const Poset& p);
bool is_lattice(const Poset& p);
// r(x) = length of [0^, x]; requires a pure poset with a minimum.
std::vector<long> rank_function(const Poset& p);
// Covers of the minimum when it exists, else the minimal elements.
std::vector<Element> atoms(const Poset& p);
std::vector<Element> coatoms(const Poset& p);
// All maximal chains, in lexicographic order of their id sequences.
std::vector<Chain> maximal_chains(const Poset& p);
Integer count_maximal_chains(const Poset& p);

struct StructureInfo {
  bool is_pure = false;
  bool is_bounded = false;
  bool is_lattice = false;
  bool is_meet_semilattice = false;
  long length = -1;
  std::optional<std::vector<long>> rank;
  std::vector<Element> atoms;
  std::vector<Element> coatoms;
  std::vector<Chain> maximal_chains;
};

StructureInfo structure(const Poset& p);

// Covers of p are a transitive reduction and up/down matrices are its closure.
bool check_invariants(const Poset& p);

}  // namespace posettop
