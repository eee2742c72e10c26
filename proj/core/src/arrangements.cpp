#include "posettop/arrangements.hpp"

#include <deque>
#include <sstream>

#include "posettop/homology.hpp"

namespace posettop {

namespace {

// Row reduces in place; returns false when a row 0 = c with c != 0 appears.
bool rref(RationalMatrix& m, std::size_t width) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < width && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    Rational inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c < width; ++c) m[r][c] -= f * m[row][c];
    }
    ++row;
  }
  m.resize(row);
  for (const auto& r : m) {
    bool zero_lhs = true;
    for (std::size_t c = 0; c + 1 < width; ++c) {
      if (r[c] != 0) {
        zero_lhs = false;
        break;
      }
    }
    if (zero_lhs) return false;
  }
  return true;
}

std::string flat_label(const AffineSubspace& x) {
  if (x.codim() == 0) return "R^" + std::to_string(x.ambient_dim());
  std::ostringstream os;
  bool first_row = true;
  for (const auto& row : x.canonical()) {
    if (!first_row) os << ';';
    first_row = false;
    os << '[';
    for (std::size_t c = 0; c + 1 < row.size(); ++c) {
      if (c) os << ',';
      os << rational_to_string(row[c]);
    }
    os << '|' << rational_to_string(row.back()) << ']';
  }
  return os.str();
}

void require_hyperplanes(const Arrangement& a, const char* what) {
  for (const auto& h : a.subspaces) {
    if (!h.is_hyperplane()) throw Error(std::string(what) + ": arrangement has a non-hyperplane member");
  }
}

AffineSubspace equation(std::size_t d, std::vector<std::pair<std::size_t, long>> coeffs, long rhs) {
  std::vector<Rational> row(d, Rational(0));
  for (auto [i, c] : coeffs) row[i] = c;
  return AffineSubspace(d, {row}, {Rational(rhs)});
}

}  // namespace

AffineSubspace::AffineSubspace(std::size_t ambient_dim, RationalMatrix a, std::vector<Rational> b)
    : d_(ambient_dim), a_(std::move(a)), b_(std::move(b)) {
  if (a_.size() != b_.size()) throw Error("affine subspace: A and b row counts differ");
  rref_.reserve(a_.size());
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i].size() != d_) throw Error("affine subspace: row length differs from ambient dimension");
    auto row = a_[i];
    row.push_back(b_[i]);
    rref_.push_back(std::move(row));
  }
  if (!rref(rref_, d_ + 1)) throw Error("affine subspace: inconsistent system");
}

bool AffineSubspace::contains(const AffineSubspace& other) const {
  if (other.d_ != d_) throw Error("affine subspace: ambient dimensions differ");
  RationalMatrix m = other.rref_;
  m.insert(m.end(), rref_.begin(), rref_.end());
  if (!rref(m, d_ + 1)) return false;
  return m == other.rref_;
}

std::optional<AffineSubspace> intersect(const AffineSubspace& x, const AffineSubspace& y) {
  if (x.ambient_dim() != y.ambient_dim()) throw Error("intersect: ambient dimensions differ");
  RationalMatrix a;
  std::vector<Rational> b;
  for (const auto* s : {&x, &y}) {
    for (const auto& row : s->canonical()) {
      a.emplace_back(row.begin(), row.end() - 1);
      b.push_back(row.back());
    }
  }
  RationalMatrix m;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto row = a[i];
    row.push_back(b[i]);
    m.push_back(std::move(row));
  }
  if (!rref(m, x.ambient_dim() + 1)) return std::nullopt;
  return AffineSubspace(x.ambient_dim(), std::move(a), std::move(b));
}

IntersectionSemilattice intersection_semilattice(const Arrangement& a) {
  for (const auto& h : a.subspaces) {
    if (h.ambient_dim() != a.dim) throw Error("arrangement: member in the wrong ambient dimension");
  }
  IntersectionSemilattice out;
  std::map<RationalMatrix, std::size_t> index;
  out.flats.push_back(AffineSubspace::ambient(a.dim));
  index.emplace(out.flats[0].canonical(), 0);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (const auto& h : a.subspaces) {
      auto y = intersect(out.flats[x], h);
      if (!y || index.count(y->canonical())) continue;
      check_chain_space(out.flats.size() + 1, "intersection semilattice");
      index.emplace(y->canonical(), out.flats.size());
      queue.push_back(out.flats.size());
      out.flats.push_back(std::move(*y));
    }
  }
  std::vector<std::string> labels;
  for (const auto& f : out.flats) {
    labels.push_back(flat_label(f));
    out.dims.push_back(f.dim());
  }
  const auto& flats = out.flats;
  out.poset = Poset::from_order(std::move(labels), [&](Element x, Element y) {
    return x != y && flats[y].codim() > flats[x].codim() && flats[x].contains(flats[y]);
  });
  return out;
}

ZaslavskyCounts zaslavsky(const Arrangement& a) {
  require_hyperplanes(a, "zaslavsky");
  auto l = intersection_semilattice(a);
  ZaslavskyCounts out;
  out.regions = 0;
  for (Element x = 0; x < l.poset.size(); ++x) out.regions += abs(l.poset.mobius(0, x));
  // L with a new top adjoined above its maximal elements.
  std::vector<std::string> labels = l.poset.labels();
  labels.push_back("1^");
  std::vector<Cover> rel = l.poset.covers();
  Element top = l.poset.size();
  for (Element m : l.poset.maximal_elements()) rel.emplace_back(m, top);
  Poset extended = Poset::from_covers(std::move(labels), rel);
  out.bounded = abs(extended.mobius(0, top));
  return out;
}

std::map<long, Integer> orlik_solomon_betti(const Arrangement& a) {
  require_hyperplanes(a, "orlik-solomon");
  auto l = intersection_semilattice(a);
  std::map<long, Integer> out;
  for (Element x = 0; x < l.poset.size(); ++x) {
    long i = static_cast<long>(a.dim - l.dims[x]);
    out[i] += abs(l.poset.mobius(0, x));
  }
  return out;
}

std::map<long, Integer> goresky_macpherson_betti(const Arrangement& a) {
  auto l = intersection_semilattice(a);
  std::map<long, Integer> out;
  const long n = static_cast<long>(a.dim);
  for (Element x = 1; x < l.poset.size(); ++x) {
    auto h = betti_open_interval(l.poset, 0, x);
    for (const auto& [j, g] : h.dims) {
      if (g.betti == 0) continue;
      long i = n - static_cast<long>(l.dims[x]) - 2 - j;
      out[i] += g.betti;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Arrangement coordinate_arrangement(int n) {
  if (n < 0 || n > 7) throw Error("coordinate arrangement: n must be in [0, 7]");
  Arrangement a;
  a.dim = static_cast<std::size_t>(n);
  for (int i = 0; i < n; ++i) a.subspaces.push_back(equation(a.dim, {{i, 1}}, 0));
  return a;
}

Arrangement type_b_coordinate_arrangement(int n) {
  if (n < 0 || n > 7) throw Error("type B coordinate arrangement: n must be in [0, 7]");
  Arrangement a;
  a.dim = static_cast<std::size_t>(n);
  for (int i = 0; i < n; ++i) {
    a.subspaces.push_back(equation(a.dim, {{i, 1}}, 1));
    a.subspaces.push_back(equation(a.dim, {{i, 1}}, -1));
  }
  return a;
}

Arrangement braid_arrangement(int n) {
  if (n < 1 || n > 7) throw Error("braid arrangement: n must be in [1, 7]");
  Arrangement a;
  a.dim = static_cast<std::size_t>(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) a.subspaces.push_back(equation(a.dim, {{i, 1}, {j, -1}}, 0));
  }
  return a;
}

Arrangement type_b_braid_arrangement(int n) {
  if (n < 1 || n > 7) throw Error("type B braid arrangement: n must be in [1, 7]");
  Arrangement a;
  a.dim = static_cast<std::size_t>(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      a.subspaces.push_back(equation(a.dim, {{i, 1}, {j, -1}}, 0));
      a.subspaces.push_back(equation(a.dim, {{i, 1}, {j, 1}}, 0));
    }
  }
  for (int i = 0; i < n; ++i) a.subspaces.push_back(equation(a.dim, {{i, 1}}, 0));
  return a;
}

Arrangement k_equal_arrangement(int n, int k) {
  if (n < 1 || n > 7) throw Error("k-equal arrangement: n must be in [1, 7]");
  if (k < 2 || k > n) throw Error("k-equal arrangement: need 2 <= k <= n");
  Arrangement a;
  a.dim = static_cast<std::size_t>(n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<int> idx;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) idx.push_back(i);
    }
    RationalMatrix rows;
    for (std::size_t t = 1; t < idx.size(); ++t) {
      std::vector<Rational> row(a.dim, Rational(0));
      row[idx[0]] = 1;
      row[idx[t]] = -1;
      rows.push_back(std::move(row));
    }
    std::vector<Rational> rhs(rows.size(), Rational(0));
    a.subspaces.emplace_back(a.dim, std::move(rows), std::move(rhs));
  }
  return a;
}

std::string rational_to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0) throw Error("invalid rational: '" + s + "'");
  if (r.get_den() == 0) throw Error("invalid rational: zero denominator");
  r.canonicalize();
  return r;
}

}  // namespace posettop
