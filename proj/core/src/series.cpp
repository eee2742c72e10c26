#include "posettop/series.hpp"

#include <algorithm>
#include <numeric>

#include "posettop/oracles.hpp"

namespace posettop {

Series::Series(std::size_t order, const std::vector<Rational>& coeffs) : c_(order + 1, 0) {
  for (std::size_t i = 0; i < coeffs.size() && i <= order; ++i) c_[i] = coeffs[i];
}

Series Series::from_egf(std::size_t order, const std::vector<Rational>& egf) {
  Series s(order);
  for (std::size_t i = 0; i < egf.size() && i <= order; ++i)
    s[i] = egf[i] / Rational(factorial(static_cast<long>(i)));
  return s;
}

Rational Series::egf_coefficient(std::size_t n) const { return c_.at(n) * Rational(factorial(static_cast<long>(n))); }

Series Series::operator+(const Series& o) const {
  Series r(std::min(order(), o.order()));
  for (std::size_t i = 0; i <= r.order(); ++i) r[i] = c_[i] + o[i];
  return r;
}

Series Series::operator-(const Series& o) const {
  Series r(std::min(order(), o.order()));
  for (std::size_t i = 0; i <= r.order(); ++i) r[i] = c_[i] - o[i];
  return r;
}

Series Series::operator*(const Series& o) const {
  Series r(std::min(order(), o.order()));
  for (std::size_t i = 0; i <= r.order(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= r.order(); ++j) r[i + j] += c_[i] * o[j];
  }
  return r;
}

Series Series::scaled(const Rational& s) const {
  Series r(order());
  for (std::size_t i = 0; i <= order(); ++i) r[i] = c_[i] * s;
  return r;
}

Series derivative(const Series& f) {
  Series r(f.order());
  for (std::size_t i = 1; i <= f.order(); ++i) r[i - 1] = f[i] * static_cast<unsigned long>(i);
  return r;
}

Series integral(const Series& f) {
  Series r(f.order());
  for (std::size_t i = 0; i < f.order(); ++i) r[i + 1] = f[i] / static_cast<unsigned long>(i + 1);
  return r;
}

Series exp(const Series& f) {
  if (sgn(f[0]) != 0) throw Error("exp requires zero constant term");
  Series g(f.order());
  g[0] = 1;
  for (std::size_t n = 1; n <= f.order(); ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += Rational(static_cast<unsigned long>(k)) * f[k] * g[n - k];
    g[n] = acc / static_cast<unsigned long>(n);
  }
  return g;
}

Series log(const Series& f) {
  if (f[0] != 1) throw Error("log requires constant term 1");
  Series df = derivative(f);
  Series h(f.order());
  for (std::size_t n = 0; n <= f.order(); ++n) {
    Rational acc = df[n];
    for (std::size_t k = 1; k <= n; ++k) acc -= f[k] * h[n - k];
    h[n] = acc;
  }
  return integral(h);
}

Series compose(const Series& f, const Series& g) {
  if (sgn(g[0]) != 0) throw Error("compose requires inner series with zero constant term");
  std::size_t order = std::min(f.order(), g.order());
  Series r(order);
  for (std::size_t i = order + 1; i-- > 0;) {
    r = r * g;
    r[0] += f[i];
  }
  return r;
}

Series compositional_inverse(const Series& f) {
  if (sgn(f[0]) != 0 || sgn(f[1]) == 0) throw Error("compositional inverse needs f(0) = 0 and f'(0) != 0");
  Series g(f.order());
  g[1] = 1 / f[1];
  for (std::size_t n = 2; n <= f.order(); ++n) {
    Series fg = compose(f, g);
    g[n] = -fg[n] / f[1];
  }
  return g;
}

BivariateSeries::BivariateSeries(std::size_t order, std::size_t t_degree)
    : order_(order), t_degree_(t_degree), c_(order + 1, std::vector<Rational>(t_degree + 1, 0)) {}

BivariateSeries BivariateSeries::operator+(const BivariateSeries& o) const {
  BivariateSeries r(std::min(order_, o.order_), std::min(t_degree_, o.t_degree_));
  for (std::size_t n = 0; n <= r.order_; ++n)
    for (std::size_t m = 0; m <= r.t_degree_; ++m) r.c_[n][m] = c_[n][m] + o.c_[n][m];
  return r;
}

BivariateSeries BivariateSeries::operator*(const BivariateSeries& o) const {
  BivariateSeries r(std::min(order_, o.order_), std::min(t_degree_, o.t_degree_));
  for (std::size_t n1 = 0; n1 <= r.order_; ++n1)
    for (std::size_t m1 = 0; m1 <= r.t_degree_; ++m1) {
      if (sgn(c_[n1][m1]) == 0) continue;
      for (std::size_t n2 = 0; n1 + n2 <= r.order_; ++n2)
        for (std::size_t m2 = 0; m1 + m2 <= r.t_degree_; ++m2)
          if (sgn(o.c_[n2][m2]) != 0) r.c_[n1 + n2][m1 + m2] += c_[n1][m1] * o.c_[n2][m2];
    }
  return r;
}

BivariateSeries BivariateSeries::scaled(const Rational& s) const {
  BivariateSeries r(*this);
  for (auto& row : r.c_)
    for (auto& x : row) x *= s;
  return r;
}

BivariateSeries compose(const Series& f, const BivariateSeries& y) {
  for (std::size_t m = 0; m <= y.t_degree(); ++m)
    if (sgn(y.coeff(0, m)) != 0) throw Error("compose requires inner series with zero u-constant term");
  std::size_t order = std::min(f.order(), y.order());
  BivariateSeries r(order, y.t_degree());
  for (std::size_t i = order + 1; i-- > 0;) {
    r = r * y;
    r.coeff(0, 0) += f[i];
  }
  return r;
}

int betti_gf_ground_size(const BettiGfRequest& q) {
  switch (q.family) {
    case BlockFamily::at_least_k: return q.n;
    case BlockFamily::zero_mod_d: return q.d * q.n;
    case BlockFamily::one_mod_d: return q.d * q.n + 1;
    case BlockFamily::k_mod_d: return q.d * q.n + q.k;
  }
  return 0;
}

namespace {

Rational inv_factorial(long n) { return Rational(1) / Rational(factorial(n)); }

std::map<long, Integer> nonzero_only(const std::map<long, Integer>& m) {
  std::map<long, Integer> out;
  for (const auto& [d, v] : m)
    if (sgn(v) != 0) out[d] = v;
  return out;
}

Integer as_integer(const Rational& r) {
  if (r.get_den() != 1) throw Error("generating function produced a non-integral Betti number");
  return r.get_num();
}

// g(y) = sum_i (+-1)^i y^{i e + 1}/(i e + 1)!
Series odd_block_series(std::size_t order, int e, bool alternating) {
  Series g(order);
  for (std::size_t i = 0; i * static_cast<std::size_t>(e) + 1 <= order; ++i) {
    std::size_t p = i * static_cast<std::size_t>(e) + 1;
    Rational v = inv_factorial(static_cast<long>(p));
    g[p] = (alternating && i % 2) ? -v : v;
  }
  return g;
}

}  // namespace

std::map<long, Integer> betti_gf(const BettiGfRequest& q) {
  std::map<long, Integer> out;
  long ground = betti_gf_ground_size(q);
  if (ground < 1) throw Error("betti_gf: empty ground set");
  std::size_t N = static_cast<std::size_t>(ground);
  switch (q.family) {
    case BlockFamily::at_least_k: {
      if (q.k < 1) throw Error("at_least_k requires k >= 1");
      std::size_t tdeg = N / static_cast<std::size_t>(q.k) + 1;
      BivariateSeries y(N, tdeg);
      for (std::size_t j = static_cast<std::size_t>(q.k); j <= N; ++j)
        y.coeff(j, j / static_cast<std::size_t>(q.k)) = inv_factorial(static_cast<long>(j));
      // -ln(1 + y) = sum_r (-1)^r y^r / r
      Series mlog(N);
      for (std::size_t r = 1; r <= N; ++r) mlog[r] = Rational(r % 2 ? -1 : 1, static_cast<unsigned long>(r));
      BivariateSeries l = compose(mlog, y);
      for (std::size_t m = 0; m <= tdeg; ++m) {
        Rational c = l.coeff(N, m) * Rational(factorial(ground));
        if (m % 2) c = -c;
        if (sgn(c) != 0) out[static_cast<long>(m) - 2] = as_integer(c);
      }
      break;
    }
    case BlockFamily::zero_mod_d: {
      if (q.d < 1 || q.n < 1) throw Error("zero_mod_d requires n, d >= 1");
      Series c(N);
      for (std::size_t j = 0; j * static_cast<std::size_t>(q.d) <= N; ++j) {
        Rational v = inv_factorial(static_cast<long>(j) * q.d);
        c[j * static_cast<std::size_t>(q.d)] = j % 2 ? -v : v;
      }
      Series f = log(c).scaled(-1);
      out[q.n - 2] = as_integer(f.egf_coefficient(N));
      break;
    }
    case BlockFamily::one_mod_d: {
      if (q.d < 1 || q.n < 0) throw Error("one_mod_d requires n >= 0, d >= 1");
      Series inv = compositional_inverse(odd_block_series(N, q.d, true));
      out[q.n - 2] = as_integer(inv.egf_coefficient(N));
      break;
    }
    case BlockFamily::k_mod_d: {
      if (q.k < 1 || q.k > q.d || q.n < 0) throw Error("k_mod_d requires 1 <= k <= d, n >= 0");
      if (q.k == 1) return betti_gf({BlockFamily::one_mod_d, q.n, q.d, 1});
      int g = std::gcd(q.k, q.d);
      int k0 = q.k / g;
      int d0 = q.d / g;
      Series f = compositional_inverse(odd_block_series(N, d0, false));
      std::size_t tdeg = N * static_cast<std::size_t>(d0) + 2;
      BivariateSeries y(N, tdeg);
      for (std::size_t i = 0; i * static_cast<std::size_t>(q.d) + static_cast<std::size_t>(q.k) <= N; ++i) {
        std::size_t p = i * static_cast<std::size_t>(q.d) + static_cast<std::size_t>(q.k);
        std::size_t e = (i / static_cast<std::size_t>(k0)) * static_cast<std::size_t>(d0) + 1;
        y.coeff(p, e) = inv_factorial(static_cast<long>(p));
      }
      BivariateSeries fy = compose(f, y);
      for (std::size_t e = 1; e <= tdeg; ++e) {
        if ((e - 1) % static_cast<std::size_t>(d0) != 0) continue;
        long m = static_cast<long>((e - 1) / static_cast<std::size_t>(d0)) + 1;
        Rational c = fy.coeff(N, e) * Rational(factorial(ground));
        if ((m - 1) % 2) c = -c;
        if (sgn(c) != 0) out[m - 2] = as_integer(c);
      }
      break;
    }
  }
  return nonzero_only(out);
}

}  // namespace posettop
