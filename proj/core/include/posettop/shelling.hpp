#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "posettop/complex.hpp"
#include "posettop/labeling.hpp"
#include "posettop/poset.hpp"

namespace posettop {

struct ShellingCheck {
  bool ok = false;
  std::optional<std::size_t> first_violation;  // position in the order
  std::vector<Face> restrictions;              // R(F_k), by position
  std::vector<bool> homology_facets;           // R(F_k) = F_k
  std::map<long, long> homology_facet_counts;  // dim -> count
};

// order must be a permutation of c.facets().
ShellingCheck is_shelling(const SimplicialComplex& c, const std::vector<Face>& order);

enum class SearchStatus { found, none, indeterminate };

struct ShellingSearch {
  SearchStatus status = SearchStatus::indeterminate;
  std::vector<Face> order;
  std::map<long, long> homology_facet_counts;
  std::size_t nodes = 0;
};

// Backtracking over facet orders, candidates tried in lexicographic facet order.
ShellingSearch find_shelling(const SimplicialComplex& c, std::size_t max_facets = 24,
                             std::size_t budget = 5000000);

// strict_increasing: increasing means strictly increasing, decreasing means
// weakly decreasing.  weak_increasing swaps the two.
enum class ElConvention { strict_increasing, weak_increasing };

bool is_increasing(const std::vector<Label>& word, ElConvention convention = ElConvention::strict_increasing);
bool is_decreasing(const std::vector<Label>& word, ElConvention convention = ElConvention::strict_increasing);
std::vector<Label> chain_word(const EdgeLabeling& lambda, const Chain& chain);

struct ElCheck {
  bool ok = false;
  std::string reason;
  std::optional<std::pair<Element, Element>> interval;  // failing [x, y]
};

// Every closed interval has exactly one increasing maximal chain and it is
// the unique lexicographically least one.
ElCheck verify_el_labeling(const Poset& p, const EdgeLabeling& lambda,
                           ElConvention convention = ElConvention::strict_increasing);

// Only the unique-increasing-chain condition (an R-labeling).
ElCheck verify_r_labeling(const Poset& p, const EdgeLabeling& lambda,
                          ElConvention convention = ElConvention::strict_increasing);

std::vector<Chain> decreasing_chains(const Poset& p, const EdgeLabeling& lambda,
                                     ElConvention convention = ElConvention::strict_increasing);
// beta_i of the proper part = number of decreasing maximal chains of length i + 2.
// Throws unless lambda passes verify_el_labeling.
std::map<long, Integer> betti_from_el(const Poset& p, const EdgeLabeling& lambda,
                                      ElConvention convention = ElConvention::strict_increasing);
// Maximal chains sorted by label word (ties by id sequence).
std::vector<Chain> lexicographic_chain_order(const Poset& p, const EdgeLabeling& lambda);

// Elements of the proper part of a bounded pure poset with rank in R.
Derived rank_selected(const Poset& p, const std::set<long>& ranks);
// Maximal chains whose descent set {i : lambda_i >= lambda_{i+1}} equals R.
Integer descent_count(const Poset& p, const EdgeLabeling& lambda, const std::set<long>& ranks);

struct RecursiveAtomCertificate {
  Element root = 0;
  std::vector<Element> atoms;                      // ordered atoms of [root, 1^]
  std::vector<RecursiveAtomCertificate> children;  // children[j] certifies [atoms[j], 1^]
};

struct RaoCheck {
  bool ok = false;
  std::string reason;
};

RaoCheck verify_recursive_atom_ordering(const Poset& p, const RecursiveAtomCertificate& cert);

struct RaoSearch {
  SearchStatus status = SearchStatus::indeterminate;
  std::optional<RecursiveAtomCertificate> certificate;
  std::size_t nodes = 0;
};

RaoSearch search_recursive_atom_ordering(const Poset& p, std::size_t budget = 2000000);
// Certificate that takes atoms in the given priority order wherever the
// required-first rule allows; the result still has to be verified.
RecursiveAtomCertificate atom_order_certificate(const Poset& p, const std::vector<Element>& priority);

bool is_geometric_lattice(const Poset& lattice);
// Maximal independent atom sets without broken circuits, atoms given in order.
std::vector<std::vector<Element>> nbc_bases(const Poset& lattice, const std::vector<Element>& atom_order);

}  // namespace posettop
