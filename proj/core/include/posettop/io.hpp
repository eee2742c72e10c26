#pragma once

#include <string>

#include "posettop/arrangements.hpp"
#include "posettop/complex.hpp"
#include "posettop/homology.hpp"
#include "posettop/labeling.hpp"
#include "posettop/poset.hpp"
#include "posettop/shelling.hpp"

namespace posettop {

// All readers throw Error on malformed input.  Writers produce compact JSON
// with sorted keys; integers too large for 64 bits are written as strings.

// {"labels":[...], "covers":[[i,j],...]}; covers reduced and sorted.
std::string poset_to_json(const Poset& p);
Poset poset_from_json(const std::string& text);

// {"vertex_count":n, "facets":[[...],...]}
std::string complex_to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const std::string& text);

// {"dims":{"1":{"betti":6,"torsion":[]}, ...}}
std::string homology_to_json(const HomologyResult& h);

// {"edges":[[x,y,[label ints]],...]}
std::string labeling_to_json(const EdgeLabeling& lambda);
EdgeLabeling labeling_from_json(const std::string& text);

// {"root":r, "atoms":[...], "children":[...]}
std::string certificate_to_json(const RecursiveAtomCertificate& cert);
RecursiveAtomCertificate certificate_from_json(const std::string& text);

// {"dim":d, "subspaces":[{"A":[["p/q",...]],"b":["p/q",...]},...]}
std::string arrangement_to_json(const Arrangement& a);
Arrangement arrangement_from_json(const std::string& text);

}  // namespace posettop
