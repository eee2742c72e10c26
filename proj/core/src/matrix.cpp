#include "posettop/matrix.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace posettop {

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns) n += c.size();
  return n;
}

std::int64_t SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = columns.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), Entry{r, 0},
                             [](const Entry& a, const Entry& b) { return a.first < b.first; });
  return (it != col.end() && it->first == r) ? it->second : 0;
}

SparseMatrix transpose(const SparseMatrix& m) {
  SparseMatrix t(m.cols, m.rows);
  for (std::size_t c = 0; c < m.cols; ++c)
    for (auto [r, v] : m.columns[c]) t.columns[r].emplace_back(c, v);
  return t;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows) throw Error("matrix shapes do not match");
  SparseMatrix out(a.rows, b.cols);
  std::vector<std::int64_t> acc(a.rows, 0);
  std::vector<char> touched(a.rows, 0);
  std::vector<std::size_t> list;
  for (std::size_t c = 0; c < b.cols; ++c) {
    list.clear();
    for (auto [k, bv] : b.columns[c])
      for (auto [r, av] : a.columns[k]) {
        std::int64_t prod;
        if (__builtin_mul_overflow(av, bv, &prod) || __builtin_add_overflow(acc[r], prod, &acc[r]))
          throw Error("matrix product overflows 64 bits");
        if (!touched[r]) {
          touched[r] = 1;
          list.push_back(r);
        }
      }
    std::sort(list.begin(), list.end());
    for (std::size_t r : list) {
      if (acc[r] != 0) out.columns[c].emplace_back(r, acc[r]);
      acc[r] = 0;
      touched[r] = 0;
    }
  }
  return out;
}

bool is_zero(const SparseMatrix& m) {
  for (const auto& c : m.columns)
    if (!c.empty()) return false;
  return true;
}

DenseMatrix to_dense(const SparseMatrix& m) {
  DenseMatrix d(m.rows, std::vector<Integer>(m.cols, 0));
  for (std::size_t c = 0; c < m.cols; ++c)
    for (auto [r, v] : m.columns[c]) d[r][c] = static_cast<long>(v);
  return d;
}

std::string to_triplets(const SparseMatrix& m) {
  std::ostringstream os;
  for (std::size_t c = 0; c < m.cols; ++c)
    for (auto [r, v] : m.columns[c]) os << r << ' ' << c << ' ' << v << '\n';
  return os.str();
}

SparseMatrix from_triplets(std::size_t rows, std::size_t cols, const std::string& text) {
  SparseMatrix m(rows, cols);
  std::istringstream is(text);
  std::size_t r, c;
  std::int64_t v;
  while (is >> r >> c >> v) {
    if (r >= rows || c >= cols) throw Error("triplet index out of range");
    if (v != 0) m.columns[c].emplace_back(r, v);
  }
  if (!is.eof()) throw Error("malformed triplet text");
  for (auto& col : m.columns) std::sort(col.begin(), col.end());
  return m;
}

namespace {

struct Overflow {};

inline bool nonzero(std::int64_t v) { return v != 0; }
inline bool nonzero(const Integer& v) { return sgn(v) != 0; }
inline bool unit(std::int64_t v) { return v == 1 || v == -1; }
inline bool unit(const Integer& v) { return v == 1 || v == -1; }
inline Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }
inline Integer to_integer(const Integer& v) { return v; }

// a - f * b
inline std::int64_t sub_mul(std::int64_t a, std::int64_t f, std::int64_t b) {
  std::int64_t t;
  if (__builtin_mul_overflow(f, b, &t) || __builtin_sub_overflow(a, t, &t)) throw Overflow{};
  return t;
}
inline Integer sub_mul(const Integer& a, const Integer& f, const Integer& b) { return a - f * b; }
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t t;
  if (__builtin_mul_overflow(a, b, &t)) throw Overflow{};
  return t;
}
inline Integer mul(const Integer& a, const Integer& b) { return a * b; }

template <class S>
struct RowEntry {
  std::uint32_t col;
  S val;
};

// Eliminates unit pivots; each pivot contributes an invariant factor 1.
// What remains is returned as a dense matrix.
template <class S>
class UnitEliminator {
 public:
  UnitEliminator(const SparseMatrix& m) : ncols_(m.cols) {
    rows_.resize(m.rows);
    for (std::size_t c = 0; c < m.cols; ++c)
      for (auto [r, v] : m.columns[c]) rows_[r].push_back({static_cast<std::uint32_t>(c), S(v)});
    alive_.assign(m.rows, 1);
    col_rows_.resize(m.cols);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const auto& e : rows_[r]) col_rows_[e.col].push_back(static_cast<std::uint32_t>(r));
  }

  std::size_t run() {
    using Item = std::pair<std::size_t, std::uint32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (!rows_[r].empty()) queue.emplace(rows_[r].size(), static_cast<std::uint32_t>(r));
    std::size_t pivots = 0;
    std::vector<RowEntry<S>> merged;
    while (!queue.empty()) {
      auto [len, r] = queue.top();
      queue.pop();
      if (!alive_[r] || rows_[r].size() != len || len == 0) continue;
      // Unit entry whose column is shortest.
      std::size_t best = rows_[r].size();
      std::size_t best_cost = static_cast<std::size_t>(-1);
      for (std::size_t k = 0; k < rows_[r].size(); ++k)
        if (unit(rows_[r][k].val)) {
          std::size_t cost = col_rows_[rows_[r][k].col].size();
          if (cost < best_cost) {
            best_cost = cost;
            best = k;
          }
        }
      if (best == rows_[r].size()) continue;
      std::uint32_t c = rows_[r][best].col;
      S p = rows_[r][best].val;
      const auto& prow = rows_[r];
      std::vector<std::uint32_t> targets;
      targets.swap(col_rows_[c]);
      for (std::uint32_t s : targets) {
        if (s == r || !alive_[s]) continue;
        auto& row = rows_[s];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const RowEntry<S>& e, std::uint32_t col) { return e.col < col; });
        if (it == row.end() || it->col != c) continue;
        S f = mul(it->val, p);
        merged.clear();
        std::size_t i = 0, j = 0;
        while (i < row.size() || j < prow.size()) {
          if (j == prow.size() || (i < row.size() && row[i].col < prow[j].col)) {
            merged.push_back(std::move(row[i]));
            ++i;
          } else if (i == row.size() || prow[j].col < row[i].col) {
            S v = sub_mul(S(0), f, prow[j].val);
            col_rows_[prow[j].col].push_back(s);
            merged.push_back({prow[j].col, std::move(v)});
            ++j;
          } else {
            S v = sub_mul(row[i].val, f, prow[j].val);
            if (nonzero(v)) merged.push_back({row[i].col, std::move(v)});
            ++i;
            ++j;
          }
        }
        row.swap(merged);
        queue.emplace(row.size(), s);
      }
      alive_[r] = 0;
      ++pivots;
    }
    return pivots;
  }

  DenseMatrix remainder() const {
    std::vector<std::uint32_t> live_rows;
    std::vector<std::uint32_t> col_index(ncols_, static_cast<std::uint32_t>(-1));
    std::uint32_t ncols = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (!alive_[r] || rows_[r].empty()) continue;
      live_rows.push_back(static_cast<std::uint32_t>(r));
      for (const auto& e : rows_[r])
        if (col_index[e.col] == static_cast<std::uint32_t>(-1)) col_index[e.col] = ncols++;
    }
    DenseMatrix d(live_rows.size(), std::vector<Integer>(ncols, 0));
    for (std::size_t i = 0; i < live_rows.size(); ++i)
      for (const auto& e : rows_[live_rows[i]]) d[i][col_index[e.col]] = to_integer(e.val);
    return d;
  }

 private:
  std::size_t ncols_;
  std::vector<std::vector<RowEntry<S>>> rows_;
  std::vector<char> alive_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
};

void normalize_diagonal(std::vector<Integer>& d) {
  for (auto& x : d) x = abs(x);
  d.erase(std::remove_if(d.begin(), d.end(), [](const Integer& x) { return sgn(x) == 0; }), d.end());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[j] % d[i] == 0) continue;
      Integer g = gcd(d[i], d[j]);
      Integer l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  std::sort(d.begin(), d.end());
}

// Diagonal entries of an equivalent diagonal matrix.
std::vector<Integer> diagonalize(DenseMatrix a) {
  std::size_t m = a.size();
  std::size_t n = m ? a[0].size() : 0;
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (sgn(a[i][j]) != 0 && (pi == m || mpz_cmpabs(a[i][j].get_mpz_t(), a[pi][pj].get_mpz_t()) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    std::swap(a[t], a[pi]);
    for (std::size_t i = 0; i < m; ++i) std::swap(a[i][t], a[i][pj]);
    while (true) {
      bool done = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(a[i][t]) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        if (sgn(q) != 0)
          for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (sgn(a[i][t]) != 0) {
          std::swap(a[i], a[t]);
          done = false;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(a[t][j]) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        if (sgn(q) != 0)
          for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (sgn(a[t][j]) != 0) {
          for (std::size_t i = 0; i < m; ++i) std::swap(a[i][j], a[i][t]);
          done = false;
        }
      }
      if (done) break;
    }
    diag.push_back(a[t][t]);
  }
  return diag;
}

template <class S>
SmithForm smith_with(const SparseMatrix& m) {
  UnitEliminator<S> e(m);
  std::size_t ones = e.run();
  std::vector<Integer> rest = diagonalize(e.remainder());
  normalize_diagonal(rest);
  SmithForm out;
  out.invariant_factors.assign(ones, Integer(1));
  out.invariant_factors.insert(out.invariant_factors.end(), rest.begin(), rest.end());
  out.rank = out.invariant_factors.size();
  return out;
}

template <class S>
std::size_t rank_with(const SparseMatrix& m) {
  UnitEliminator<S> e(m);
  std::size_t ones = e.run();
  return ones + rational_rank(e.remainder());
}

}  // namespace

SmithForm smith_normal_form(const SparseMatrix& m) {
  try {
    return smith_with<std::int64_t>(m);
  } catch (const Overflow&) {
    return smith_with<Integer>(m);
  }
}

SmithForm smith_normal_form_gmp(const SparseMatrix& m) { return smith_with<Integer>(m); }

SmithForm smith_normal_form(const DenseMatrix& m) {
  std::vector<Integer> d = diagonalize(m);
  normalize_diagonal(d);
  SmithForm out;
  out.invariant_factors = d;
  out.rank = d.size();
  return out;
}

std::size_t rank(const SparseMatrix& m) {
  try {
    return rank_with<std::int64_t>(m);
  } catch (const Overflow&) {
    return rank_with<Integer>(m);
  }
}

std::size_t rational_rank(DenseMatrix a) {
  std::size_t m = a.size();
  if (m == 0) return 0;
  std::size_t n = a[0].size();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && sgn(a[p][c]) == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::vector<std::vector<Integer>> integer_kernel_basis(const DenseMatrix& m, std::size_t cols) {
  std::size_t rows = m.size();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<char> is_pivot(cols, 0);
  for (std::size_t c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<Integer>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][free];
    Integer den = 1;
    for (const auto& x : v) den = lcm(den, x.get_den());
    std::vector<Integer> w(cols);
    Integer g = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      w[j] = v[j].get_num() * (den / v[j].get_den());
      g = gcd(g, w[j]);
    }
    if (sgn(g) != 0)
      for (auto& x : w) x /= g;
    basis.push_back(std::move(w));
  }
  return basis;
}

std::vector<Rational> characteristic_polynomial(const DenseMatrix& m) {
  std::size_t n = m.size();
  std::vector<std::vector<Rational>> h(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i][j] = m[i][j];
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t k = 0; k + 2 < n; ++k) {
    std::size_t piv = k + 1;
    while (piv < n && sgn(h[piv][k]) == 0) ++piv;
    if (piv == n) continue;
    if (piv != k + 1) {
      std::swap(h[piv], h[k + 1]);
      for (std::size_t i = 0; i < n; ++i) std::swap(h[i][piv], h[i][k + 1]);
    }
    Rational t = h[k + 1][k];
    for (std::size_t i = k + 2; i < n; ++i) {
      if (sgn(h[i][k]) == 0) continue;
      Rational u = h[i][k] / t;
      for (std::size_t j = 0; j < n; ++j) h[i][j] -= u * h[k + 1][j];
      for (std::size_t j = 0; j < n; ++j) h[j][k + 1] += u * h[j][i];
    }
  }
  std::vector<std::vector<Rational>> p(n + 1);
  p[0] = {Rational(1)};
  for (std::size_t mm = 1; mm <= n; ++mm) {
    std::vector<Rational> cur(mm + 1, 0);
    const auto& prev = p[mm - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      cur[d + 1] += prev[d];
      cur[d] -= h[mm - 1][mm - 1] * prev[d];
    }
    Rational t = 1;
    for (std::size_t i = mm - 1; i >= 1; --i) {
      t *= h[i][i - 1];
      if (sgn(t) == 0) break;
      Rational f = h[i - 1][mm - 1] * t;
      for (std::size_t d = 0; d < p[i - 1].size(); ++d) cur[d] -= f * p[i - 1][d];
    }
    p[mm] = std::move(cur);
  }
  return p[n];
}

std::vector<std::pair<Integer, std::size_t>> integer_roots(std::vector<Rational> poly, long lo, long hi) {
  std::vector<std::pair<Integer, std::size_t>> out;
  for (long x = lo; x <= hi; ++x) {
    std::size_t mult = 0;
    while (poly.size() > 1) {
      // Synthetic division by (X - x).
      std::size_t deg = poly.size() - 1;
      std::vector<Rational> q(deg);
      Rational carry = 0;
      for (std::size_t d = deg + 1; d-- > 0;) {
        Rational v = poly[d] + carry;
        if (d == 0) {
          carry = v;
          break;
        }
        q[d - 1] = v;
        carry = v * x;
      }
      if (sgn(carry) != 0) break;
      poly = std::move(q);
      ++mult;
    }
    if (mult) out.emplace_back(Integer(x), mult);
  }
  return out;
}

}  // namespace posettop
