#pragma once

#include <map>
#include <vector>

#include "posettop/common.hpp"

namespace posettop {

// Power series in u truncated after u^order, exact rational coefficients.
class Series {
 public:
  explicit Series(std::size_t order = 16) : c_(order + 1, 0) {}
  Series(std::size_t order, const std::vector<Rational>& coeffs);

  std::size_t order() const { return c_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return c_.at(i); }
  Rational& operator[](std::size_t i) { return c_.at(i); }
  const std::vector<Rational>& coefficients() const { return c_; }
  // n! * [u^n]
  Rational egf_coefficient(std::size_t n) const;

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator*(const Series& o) const;
  Series scaled(const Rational& s) const;
  bool operator==(const Series& o) const { return c_ == o.c_; }

  static Series from_egf(std::size_t order, const std::vector<Rational>& egf);

 private:
  std::vector<Rational> c_;
};

Series derivative(const Series& f);
Series integral(const Series& f);
Series exp(const Series& f);   // requires f[0] = 0
Series log(const Series& f);   // requires f[0] = 1
// f(g(u)); requires g[0] = 0.
Series compose(const Series& f, const Series& g);
// g with g(f(u)) = u; requires f[0] = 0 and f[1] != 0.
Series compositional_inverse(const Series& f);

// Series in u with polynomial-in-t coefficients: coeff(n, m) of t^m u^n.
class BivariateSeries {
 public:
  BivariateSeries(std::size_t order, std::size_t t_degree);

  std::size_t order() const { return order_; }
  std::size_t t_degree() const { return t_degree_; }
  const Rational& coeff(std::size_t n, std::size_t m) const { return c_.at(n).at(m); }
  Rational& coeff(std::size_t n, std::size_t m) { return c_.at(n).at(m); }

  BivariateSeries operator+(const BivariateSeries& o) const;
  BivariateSeries operator*(const BivariateSeries& o) const;
  BivariateSeries scaled(const Rational& s) const;

 private:
  std::size_t order_;
  std::size_t t_degree_;
  std::vector<std::vector<Rational>> c_;
};

// sum_i f[i] y^i with y[0] = 0 (as a series in u).
BivariateSeries compose(const Series& f, const BivariateSeries& y);

enum class BlockFamily { at_least_k, zero_mod_d, one_mod_d, k_mod_d };

struct BettiGfRequest {
  BlockFamily family = BlockFamily::at_least_k;
  int n = 0;  // at_least_k: ground set size; mod-d families: number of d-steps
  int d = 2;
  int k = 0;
};

// Reduced Betti numbers of the proper part of the restricted block-size
// partition poset, read off the exponential generating functions.
// Ground set: n (at_least_k), dn (zero_mod_d), dn + 1 (one_mod_d), dn + k (k_mod_d).
std::map<long, Integer> betti_gf(const BettiGfRequest& request);
// Ground set size for a request.
int betti_gf_ground_size(const BettiGfRequest& request);

}  // namespace posettop
