#include "posettop/complex.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace posettop {

namespace {

bool is_subset(const Face& a, const Face& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

std::vector<Face> maximal_only(std::vector<Face> faces) {
  for (auto& f : faces) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<std::size_t> idx(faces.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return faces[a].size() > faces[b].size(); });
  std::vector<Face> kept;
  for (std::size_t i : idx) {
    bool dominated = false;
    for (const auto& k : kept)
      if (k.size() > faces[i].size() && is_subset(faces[i], k)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(faces[i]);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

void subsets_of_size(const Face& f, std::size_t k, std::vector<Face>& out) {
  if (k > f.size()) return;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    Face s(k);
    for (std::size_t i = 0; i < k; ++i) s[i] = f[pick[i]];
    out.push_back(std::move(s));
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == f.size() - k + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::size_t vertex_count, std::vector<Face> facets) {
  for (const auto& f : facets)
    for (Vertex v : f)
      if (v >= vertex_count) throw Error("vertex id out of range");
  SimplicialComplex c;
  c.vertex_count_ = vertex_count;
  c.facets_ = maximal_only(std::move(facets));
  return c;
}

SimplicialComplex SimplicialComplex::from_maximal_facets(std::size_t vertex_count,
                                                         std::vector<Face> facets) {
  SimplicialComplex c;
  c.vertex_count_ = vertex_count;
  for (auto& f : facets) std::sort(f.begin(), f.end());
  std::sort(facets.begin(), facets.end());
  c.facets_ = std::move(facets);
  return c;
}

SimplicialComplex SimplicialComplex::degenerate(std::size_t vertex_count) {
  SimplicialComplex c;
  c.vertex_count_ = vertex_count;
  return c;
}

SimplicialComplex SimplicialComplex::void_complex(std::size_t vertex_count) {
  SimplicialComplex c;
  c.vertex_count_ = vertex_count;
  c.facets_.push_back({});
  return c;
}

SimplicialComplex SimplicialComplex::simplex(std::size_t vertex_count) {
  Face f(vertex_count);
  for (std::size_t i = 0; i < vertex_count; ++i) f[i] = static_cast<Vertex>(i);
  return from_facets(vertex_count, {f});
}

long SimplicialComplex::dim() const {
  if (facets_.empty()) return -2;
  std::size_t m = 0;
  for (const auto& f : facets_) m = std::max(m, f.size());
  return static_cast<long>(m) - 1;
}

bool SimplicialComplex::is_pure() const {
  for (const auto& f : facets_)
    if (f.size() != facets_.front().size()) return false;
  return true;
}

bool SimplicialComplex::contains(const Face& face) const {
  Face f = face;
  std::sort(f.begin(), f.end());
  for (const auto& g : facets_)
    if (is_subset(f, g)) return true;
  return false;
}

std::vector<Face> SimplicialComplex::faces(long d) const {
  std::vector<Face> out;
  if (d < -1) return out;
  std::size_t k = static_cast<std::size_t>(d + 1);
  for (const auto& f : facets_) subsets_of_size(f, k, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SimplicialComplex order_complex(const Poset& p) {
  Integer count = count_maximal_chains(p);
  if (!count.fits_ulong_p()) check_chain_space(static_cast<std::size_t>(-1), "order complex facets");
  check_chain_space(count.get_ui(), "order complex facets");
  std::vector<Face> facets;
  for (const auto& ch : maximal_chains(p)) {
    Face f(ch.elements.begin(), ch.elements.end());
    std::sort(f.begin(), f.end());
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_maximal_facets(p.size(), std::move(facets));
}

std::string face_to_string(const Face& face) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < face.size(); ++i) os << (i ? "," : "") << face[i];
  os << "}";
  return os.str();
}

Poset face_poset(const SimplicialComplex& c) {
  if (c.is_degenerate()) throw Error("face poset of the degenerate complex");
  std::vector<Face> all;
  for (long d = 0; d <= c.dim(); ++d) {
    auto fs = c.faces(d);
    all.insert(all.end(), fs.begin(), fs.end());
  }
  std::map<Face, Element> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < all.size(); ++i) {
    index[all[i]] = i;
    labels.push_back(face_to_string(all[i]));
  }
  std::vector<Cover> rel;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].size() < 2) continue;
    for (std::size_t j = 0; j < all[i].size(); ++j) {
      Face g = all[i];
      g.erase(g.begin() + static_cast<long>(j));
      rel.emplace_back(index.at(g), i);
    }
  }
  return Poset::from_covers(std::move(labels), rel);
}

Poset face_lattice(const SimplicialComplex& c) { return bounded_extension(face_poset(c)).poset; }

SimplicialComplex barycentric_subdivision(const SimplicialComplex& c) { return order_complex(face_poset(c)); }

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::size_t n = a.vertex_count() + b.vertex_count();
  if (a.is_degenerate() || b.is_degenerate()) return SimplicialComplex::degenerate(n);
  std::vector<Face> facets;
  for (const auto& f : a.facets())
    for (const auto& g : b.facets()) {
      Face h = f;
      for (Vertex v : g) h.push_back(v + static_cast<Vertex>(a.vertex_count()));
      facets.push_back(std::move(h));
    }
  return SimplicialComplex::from_facets(n, std::move(facets));
}

SimplicialComplex link(const SimplicialComplex& c, const Face& face) {
  Face f = face;
  std::sort(f.begin(), f.end());
  if (!c.contains(f)) throw Error("link: face " + face_to_string(f) + " is not in the complex");
  std::vector<Face> facets;
  for (const auto& g : c.facets())
    if (is_subset(f, g)) {
      Face h;
      std::set_difference(g.begin(), g.end(), f.begin(), f.end(), std::back_inserter(h));
      facets.push_back(std::move(h));
    }
  return SimplicialComplex::from_facets(c.vertex_count(), std::move(facets));
}

SimplicialComplex skeleton(const SimplicialComplex& c, long k) {
  if (c.is_degenerate()) return c;
  if (k < -1) return SimplicialComplex::degenerate(c.vertex_count());
  std::vector<Face> facets;
  for (const auto& f : c.facets()) {
    if (static_cast<long>(f.size()) - 1 <= k)
      facets.push_back(f);
    else
      subsets_of_size(f, static_cast<std::size_t>(k + 1), facets);
  }
  return SimplicialComplex::from_facets(c.vertex_count(), std::move(facets));
}

SimplicialComplex pure_skeleton(const SimplicialComplex& c, long m) {
  auto fs = c.faces(m);
  if (fs.empty()) return SimplicialComplex::degenerate(c.vertex_count());
  return SimplicialComplex::from_facets(c.vertex_count(), std::move(fs));
}

SimplicialComplex facet_skeleton(const SimplicialComplex& c, long m) {
  std::vector<Face> fs;
  for (const auto& f : c.facets())
    if (static_cast<long>(f.size()) - 1 >= m) fs.push_back(f);
  if (fs.empty()) return SimplicialComplex::degenerate(c.vertex_count());
  return SimplicialComplex::from_facets(c.vertex_count(), std::move(fs));
}

SimplicialComplex generated(std::size_t vertex_count, std::vector<Face> faces) {
  if (faces.empty()) return SimplicialComplex::degenerate(vertex_count);
  return SimplicialComplex::from_facets(vertex_count, std::move(faces));
}

SimplicialComplex suspension(const SimplicialComplex& c) {
  return join(c, SimplicialComplex::from_facets(2, {{0}, {1}}));
}

SimplicialComplex alexander_dual(const SimplicialComplex& c) {
  std::size_t n = c.vertex_count();
  if (n > 24) throw Infeasible("alexander dual: vertex set larger than 24");
  std::size_t total = std::size_t{1} << n;
  std::vector<char> is_face(total, 0);
  for (const auto& f : c.facets()) {
    std::size_t m = 0;
    for (Vertex v : f) m |= std::size_t{1} << v;
    is_face[m] = 1;
  }
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t m = total; m-- > 0;)
      if ((m >> b) & 1u)
        if (is_face[m]) is_face[m ^ (std::size_t{1} << b)] = 1;
  std::vector<Face> facets;
  for (std::size_t m = 0; m < total; ++m) {
    if (is_face[m]) continue;
    bool minimal = true;
    for (std::size_t b = 0; b < n && minimal; ++b)
      if (((m >> b) & 1u) && !is_face[m ^ (std::size_t{1} << b)]) minimal = false;
    if (!minimal) continue;
    Face comp;
    for (std::size_t v = 0; v < n; ++v)
      if (!((m >> v) & 1u)) comp.push_back(static_cast<Vertex>(v));
    facets.push_back(std::move(comp));
  }
  if (facets.empty()) return SimplicialComplex::degenerate(n);
  return SimplicialComplex::from_facets(n, std::move(facets));
}

namespace {

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

FaceNumbers f_h_vectors(const SimplicialComplex& c) {
  if (c.is_degenerate()) throw Error("face numbers of the degenerate complex");
  FaceNumbers out;
  long d = c.dim() + 1;
  for (long i = -1; i < d; ++i) out.f.push_back(static_cast<unsigned long>(c.face_count(i)));
  out.reduced_euler = 0;
  for (long i = -1; i < d; ++i) {
    const Integer& fi = out.f[static_cast<std::size_t>(i + 1)];
    if ((i % 2 + 2) % 2 == 0)
      out.reduced_euler += fi;
    else
      out.reduced_euler -= fi;
  }
  for (long k = 0; k <= d; ++k) {
    Integer hk = 0;
    for (long i = 0; i <= k; ++i) {
      Integer term = binomial(d - i, k - i) * out.f[static_cast<std::size_t>(i)];
      if ((k - i) % 2) hk -= term;
      else hk += term;
    }
    out.h.push_back(hk);
  }
  return out;
}

}  // namespace posettop
