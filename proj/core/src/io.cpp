#include "posettop/io.hpp"

#include <algorithm>

#include <json.hpp>

namespace posettop {

using nlohmann::json;

namespace {

json parse(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string(what) + ": " + e.what());
  }
}

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(std::string(what) + ": " + e.what());
  }
}

json rational_json(const Rational& r) { return rational_to_string(r); }

Rational rational_of(const json& v) {
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<std::int64_t>()));
  if (v.is_string()) return rational_from_string(v.get<std::string>());
  throw Error("arrangement: rationals must be strings or integers");
}

json certificate_json(const RecursiveAtomCertificate& c) {
  json children = json::array();
  for (const auto& ch : c.children) children.push_back(certificate_json(ch));
  return json{{"root", c.root}, {"atoms", c.atoms}, {"children", children}};
}

RecursiveAtomCertificate certificate_of(const json& j) {
  RecursiveAtomCertificate c;
  c.root = j.at("root").get<Element>();
  c.atoms = j.at("atoms").get<std::vector<Element>>();
  for (const auto& ch : j.at("children")) c.children.push_back(certificate_of(ch));
  return c;
}

}  // namespace

std::string poset_to_json(const Poset& p) {
  auto covers = p.covers();
  std::sort(covers.begin(), covers.end());
  json cv = json::array();
  for (auto [x, y] : covers) cv.push_back({x, y});
  return json{{"labels", p.labels()}, {"covers", cv}}.dump();
}

Poset poset_from_json(const std::string& text) {
  json j = parse(text, "poset json");
  return guarded("poset json", [&] {
    auto labels = j.at("labels").get<std::vector<std::string>>();
    std::vector<Cover> rel;
    for (const auto& c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2) throw Error("poset json: covers must be pairs");
      Element x = c[0].get<Element>(), y = c[1].get<Element>();
      if (x >= labels.size() || y >= labels.size()) throw Error("poset json: cover index out of range");
      rel.emplace_back(x, y);
    }
    return Poset::from_covers(std::move(labels), rel);
  });
}

std::string complex_to_json(const SimplicialComplex& c) {
  return json{{"vertex_count", c.vertex_count()}, {"facets", c.facets()}}.dump();
}

SimplicialComplex complex_from_json(const std::string& text) {
  json j = parse(text, "complex json");
  return guarded("complex json", [&] {
    auto n = j.at("vertex_count").get<std::size_t>();
    auto facets = j.at("facets").get<std::vector<Face>>();
    return SimplicialComplex::from_facets(n, std::move(facets));
  });
}

std::string homology_to_json(const HomologyResult& h) {
  json dims = json::object();
  for (const auto& [i, g] : h.dims) {
    json tor = json::array();
    for (const auto& t : g.torsion) tor.push_back(integer_json(t));
    dims[std::to_string(i)] = json{{"betti", integer_json(g.betti)}, {"torsion", tor}};
  }
  return json{{"dims", dims}}.dump();
}

std::string labeling_to_json(const EdgeLabeling& lambda) {
  json edges = json::array();
  for (const auto& [e, label] : lambda) edges.push_back({e.first, e.second, label});
  return json{{"edges", edges}}.dump();
}

EdgeLabeling labeling_from_json(const std::string& text) {
  json j = parse(text, "labeling json");
  return guarded("labeling json", [&] {
    EdgeLabeling out;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) throw Error("labeling json: edges are [x, y, label]");
      Cover c{e[0].get<Element>(), e[1].get<Element>()};
      Label l = e[2].is_array() ? e[2].get<Label>() : Label{e[2].get<std::int64_t>()};
      if (!out.emplace(c, std::move(l)).second) throw Error("labeling json: duplicate edge");
    }
    return out;
  });
}

std::string certificate_to_json(const RecursiveAtomCertificate& cert) { return certificate_json(cert).dump(); }

RecursiveAtomCertificate certificate_from_json(const std::string& text) {
  json j = parse(text, "certificate json");
  return guarded("certificate json", [&] { return certificate_of(j); });
}

std::string arrangement_to_json(const Arrangement& a) {
  json subs = json::array();
  for (const auto& s : a.subspaces) {
    json rows = json::array();
    for (const auto& row : s.a()) {
      json r = json::array();
      for (const auto& v : row) r.push_back(rational_json(v));
      rows.push_back(r);
    }
    json b = json::array();
    for (const auto& v : s.b()) b.push_back(rational_json(v));
    subs.push_back(json{{"A", rows}, {"b", b}});
  }
  json out{{"dim", a.dim}, {"subspaces", subs}};
  if (a.complex) out["complex"] = true;
  return out.dump();
}

Arrangement arrangement_from_json(const std::string& text) {
  json j = parse(text, "arrangement json");
  return guarded("arrangement json", [&] {
    Arrangement a;
    a.dim = j.at("dim").get<std::size_t>();
    a.complex = j.value("complex", false);
    for (const auto& s : j.at("subspaces")) {
      RationalMatrix rows;
      for (const auto& r : s.at("A")) {
        std::vector<Rational> row;
        for (const auto& v : r) row.push_back(rational_of(v));
        rows.push_back(std::move(row));
      }
      std::vector<Rational> b;
      for (const auto& v : s.at("b")) b.push_back(rational_of(v));
      a.subspaces.emplace_back(a.dim, std::move(rows), std::move(b));
    }
    return a;
  });
}

}  // namespace posettop
