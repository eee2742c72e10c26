#include "posettop/homology.hpp"

#include <algorithm>

namespace posettop {

std::size_t ChainComplex::index_of(long i, const Face& f) const {
  const auto& b = basis(i);
  auto it = std::lower_bound(b.begin(), b.end(), f);
  if (it == b.end() || *it != f) throw Error("face " + face_to_string(f) + " not in chain basis");
  return static_cast<std::size_t>(it - b.begin());
}

ChainComplex chain_complex(const SimplicialComplex& c) {
  if (c.is_degenerate()) throw Error("chain complex of the degenerate complex");
  ChainComplex cc;
  cc.top = c.dim();
  std::size_t total = 0;
  for (long i = -1; i <= cc.top; ++i) {
    cc.bases.push_back(c.faces(i));
    total += cc.bases.back().size();
    check_chain_space(total, "chain complex");
  }
  cc.boundaries.emplace_back(0, 1);
  for (long i = 0; i <= cc.top; ++i) {
    const auto& cols = cc.basis(i);
    const auto& rows = cc.basis(i - 1);
    SparseMatrix m(rows.size(), cols.size());
    Face g;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const Face& f = cols[j];
      auto& col = m.columns[j];
      for (std::size_t p = 0; p < f.size(); ++p) {
        g.assign(f.begin(), f.end());
        g.erase(g.begin() + static_cast<long>(p));
        auto it = std::lower_bound(rows.begin(), rows.end(), g);
        col.emplace_back(static_cast<std::size_t>(it - rows.begin()), (p % 2) ? -1 : 1);
      }
      std::sort(col.begin(), col.end());
    }
    cc.boundaries.push_back(std::move(m));
  }
  return cc;
}

Integer HomologyResult::betti(long i) const {
  auto it = dims.find(i);
  return it == dims.end() ? Integer(0) : it->second.betti;
}

std::vector<Integer> HomologyResult::torsion(long i) const {
  auto it = dims.find(i);
  return it == dims.end() ? std::vector<Integer>{} : it->second.torsion;
}

bool HomologyResult::torsion_free() const {
  for (const auto& [d, g] : dims)
    if (!g.torsion.empty()) return false;
  return true;
}

namespace {

std::vector<Integer> nontrivial(const SmithForm& s) {
  std::vector<Integer> t;
  for (const auto& d : s.invariant_factors)
    if (d > 1) t.push_back(d);
  return t;
}

HomologyResult degenerate_result() {
  HomologyResult r;
  r.dims[-2] = HomologyGroup{1, {}};
  return r;
}

enum class Mode { homology, cohomology, rational };

HomologyResult compute(const SimplicialComplex& c, Mode mode) {
  if (c.is_degenerate()) return degenerate_result();
  ChainComplex cc = chain_complex(c);
  long top = cc.top;
  // rank[i + 1] = rank of d_i; torsion[i + 1] = factors > 1 of d_i (or its transpose).
  std::vector<std::size_t> rk(static_cast<std::size_t>(top + 3), 0);
  std::vector<std::vector<Integer>> tors(static_cast<std::size_t>(top + 3));
  for (long i = 0; i <= top; ++i) {
    const SparseMatrix& d = cc.boundary(i);
    std::size_t k = static_cast<std::size_t>(i + 1);
    if (mode == Mode::rational) {
      rk[k] = rank(d);
    } else {
      SmithForm s = smith_normal_form(mode == Mode::homology ? d : transpose(d));
      rk[k] = s.rank;
      tors[k] = nontrivial(s);
    }
  }
  HomologyResult r;
  for (long i = -1; i <= top; ++i) {
    std::size_t k = static_cast<std::size_t>(i + 1);
    HomologyGroup g;
    g.betti = static_cast<unsigned long>(cc.basis(i).size() - rk[k] - rk[k + 1]);
    if (mode == Mode::homology) g.torsion = tors[k + 1];
    if (mode == Mode::cohomology) g.torsion = tors[k];
    if (g.betti != 0 || !g.torsion.empty()) r.dims[i] = g;
  }
  return r;
}

}  // namespace

HomologyResult homology(const SimplicialComplex& c) { return compute(c, Mode::homology); }
HomologyResult cohomology(const SimplicialComplex& c) { return compute(c, Mode::cohomology); }
HomologyResult rational_homology(const SimplicialComplex& c) { return compute(c, Mode::rational); }

HomologyResult poset_homology(const Poset& p) { return homology(order_complex(p)); }

HomologyResult betti_open_interval(const Poset& p, Element x, Element y) {
  if (x >= p.size() || y >= p.size()) throw Error("element out of range");
  if (!p.leq(x, y)) throw Error("open interval requires x <= y");
  if (x == y) return degenerate_result();
  return poset_homology(open_interval(p, x, y).poset);
}

DenseMatrix laplacian_matrix(const SimplicialComplex& c, long i) {
  ChainComplex cc = chain_complex(c);
  if (i < -1 || i > cc.top) return {};
  const SparseMatrix& di = cc.boundary(i);
  SparseMatrix lap = multiply(transpose(di), di);
  DenseMatrix out = to_dense(lap);
  if (i + 1 <= cc.top) {
    const SparseMatrix& up = cc.boundary(i + 1);
    DenseMatrix b = to_dense(multiply(up, transpose(up)));
    for (std::size_t r = 0; r < out.size(); ++r)
      for (std::size_t s = 0; s < out.size(); ++s) out[r][s] += b[r][s];
  }
  return out;
}

Integer laplacian_betti(const SimplicialComplex& c, long i) {
  if (c.is_degenerate()) return i == -2 ? 1 : 0;
  DenseMatrix lap = laplacian_matrix(c, i);
  std::size_t n = lap.size();
  return static_cast<unsigned long>(n - rational_rank(std::move(lap)));
}

namespace {

// H~_i over Q vanishes for every i < bound.
bool acyclic_below(const SimplicialComplex& c, long bound) {
  if (bound <= -1) return true;
  HomologyResult h = rational_homology(c);
  for (const auto& [d, g] : h.dims)
    if (d < bound && g.betti != 0) return false;
  return true;
}

std::vector<Face> all_faces(const SimplicialComplex& c) {
  std::vector<Face> out;
  for (long d = -1; d <= c.dim(); ++d) {
    auto fs = c.faces(d);
    out.insert(out.end(), fs.begin(), fs.end());
  }
  return out;
}

}  // namespace

bool is_sequentially_acyclic(const SimplicialComplex& c) {
  for (long m = 1; m <= c.dim(); ++m)
    if (!acyclic_below(facet_skeleton(c, m), m)) return false;
  return true;
}

CohenMacaulayReport cm_checks(const SimplicialComplex& c) {
  CohenMacaulayReport r;
  if (c.is_degenerate()) return r;
  r.cohen_macaulay = true;
  r.sequentially_cohen_macaulay = true;
  for (const Face& f : all_faces(c)) {
    SimplicialComplex lk = link(c, f);
    if (r.cohen_macaulay && !acyclic_below(lk, lk.dim())) r.cohen_macaulay = false;
    if (r.sequentially_cohen_macaulay && !is_sequentially_acyclic(lk)) r.sequentially_cohen_macaulay = false;
    if (!r.cohen_macaulay && !r.sequentially_cohen_macaulay) break;
  }
  r.sequentially_acyclic = is_sequentially_acyclic(c);
  return r;
}

ChainVector fundamental_cycle(const Poset& p, const std::vector<Element>& sub) {
  Derived q = induced_subposet(p, sub);
  SimplicialComplex dq = order_complex(q.poset);
  long d = dq.dim();
  HomologyResult h = homology(dq);
  HomologyResult sphere;
  sphere.dims[d] = HomologyGroup{1, {}};
  if (d < 0 || !(h == sphere)) throw Error("subposet is not a homology sphere");
  ChainComplex cc = chain_complex(dq);
  const SparseMatrix& bd = cc.boundary(d);
  auto kernel = integer_kernel_basis(to_dense(bd), bd.cols);
  if (kernel.size() != 1) throw Error("top cycle space is not one-dimensional");
  ChainVector out;
  const auto& faces = cc.basis(d);
  for (std::size_t j = 0; j < faces.size(); ++j) {
    if (sgn(kernel[0][j]) == 0) continue;
    // induced_subposet keeps parent ids ascending, so sorted order is preserved
    Face f;
    for (Vertex v : faces[j]) f.push_back(static_cast<Vertex>(q.parent[v]));
    out[f] = kernel[0][j];
  }
  return out;
}

std::size_t homology_rank(const Poset& p, const std::vector<ChainVector>& cycles) {
  if (cycles.empty()) return 0;
  long d = static_cast<long>(cycles.front().begin()->first.size()) - 1;
  ChainComplex cc = chain_complex(order_complex(p));
  if (d < -1 || d > cc.top) throw Error("cycle dimension out of range");
  const auto& basis = cc.basis(d);
  SparseMatrix z(basis.size(), cycles.size());
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    for (const auto& [f, v] : cycles[k]) {
      if (static_cast<long>(f.size()) - 1 != d) throw Error("cycles of mixed dimension");
      if (!v.fits_slong_p()) throw Error("cycle coefficient too large");
      z.columns[k].emplace_back(cc.index_of(d, f), v.get_si());
    }
    std::sort(z.columns[k].begin(), z.columns[k].end());
  }
  if (!is_zero(multiply(cc.boundary(d), z))) throw Error("chain is not a cycle");
  SparseMatrix both(basis.size(), 0);
  if (d + 1 <= cc.top) both = cc.boundary(d + 1);
  std::size_t rb = rank(both);
  for (auto& col : z.columns) both.columns.push_back(col);
  both.cols = both.columns.size();
  return rank(both) - rb;
}

bool independent_in_homology(const Poset& p, const std::vector<ChainVector>& cycles) {
  return homology_rank(p, cycles) == cycles.size();
}

}  // namespace posettop
