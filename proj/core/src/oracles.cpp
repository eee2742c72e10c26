#include "posettop/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "posettop/series.hpp"

namespace posettop {

bool is_partition(const IntegerPartition& lambda) {
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] <= 0) return false;
    if (i && lambda[i] > lambda[i - 1]) return false;
  }
  return true;
}

IntegerPartition conjugate(const IntegerPartition& lambda) {
  if (!is_partition(lambda)) throw Error("not a partition");
  IntegerPartition c;
  if (lambda.empty()) return c;
  for (int j = 1; j <= lambda.front(); ++j) {
    int count = 0;
    for (int part : lambda)
      if (part >= j) ++count;
    c.push_back(count);
  }
  return c;
}

PartitionInfo partition_tools(const IntegerPartition& lambda) {
  PartitionInfo info;
  info.conjugate = conjugate(lambda);
  info.self_conjugate = info.conjugate == lambda;
  int r = 0;
  while (r < static_cast<int>(lambda.size()) && lambda[static_cast<std::size_t>(r)] >= r + 1) ++r;
  info.durfee_rank = r;
  for (int i = 0; i < r; ++i) {
    info.alpha.push_back(lambda[static_cast<std::size_t>(i)] - (i + 1));
    info.beta.push_back(info.conjugate[static_cast<std::size_t>(i)] - (i + 1));
  }
  Integer prod = 1;
  int n = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    std::vector<int> row;
    for (int j = 0; j < lambda[i]; ++j) {
      int h = lambda[i] - j + info.conjugate[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
      row.push_back(h);
      prod *= h;
    }
    n += lambda[i];
    info.hook_lengths.push_back(std::move(row));
  }
  info.dim_specht = factorial(n) / prod;
  return info;
}

std::vector<IntegerPartition> partitions_of(int n) {
  std::vector<IntegerPartition> out;
  IntegerPartition cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

Integer bouc_betti(int n, int k) {
  if (n < 1) throw Error("bouc_betti requires n >= 1");
  Integer total = 0;
  for (const auto& lambda : partitions_of(n)) {
    PartitionInfo info = partition_tools(lambda);
    if (info.self_conjugate && info.durfee_rank == n - 2 * k) total += info.dim_specht;
  }
  return total;
}

Integer laplacian_eigenvalue(const IntegerPartition& lambda) {
  PartitionInfo info = partition_tools(lambda);
  Integer c = 0;
  for (std::size_t i = 0; i < info.alpha.size(); ++i)
    c += binomial(info.alpha[i] + 1, 2) - binomial(info.beta[i] + 1, 2);
  return c;
}

std::set<Integer> laplacian_eigenvalue_candidates(int n) {
  std::set<Integer> out;
  for (const auto& lambda : partitions_of(n)) {
    PartitionInfo info = partition_tools(lambda);
    bool ok = info.durfee_rank >= 1;
    for (std::size_t i = 0; i < info.alpha.size() && ok; ++i)
      if (info.alpha[i] < info.beta[i]) ok = false;
    if (ok) out.insert(laplacian_eigenvalue(lambda));
  }
  return out;
}

Integer factorial(long n) {
  if (n < 0) throw Error("factorial of a negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer multinomial(const std::vector<long>& parts) {
  long n = 0;
  Integer denom = 1;
  for (long p : parts) {
    if (p < 0) return 0;
    n += p;
    denom *= factorial(p);
  }
  return factorial(n) / denom;
}

Integer double_factorial(long n) {
  Integer r = 1;
  for (long i = n; i > 1; i -= 2) r *= i;
  return r;
}

Integer derangements(int n) {
  Integer d = 1;
  for (int i = 1; i <= n; ++i) d = Integer(i % 2 ? -1 : 1) + i * d;
  return d;
}

Integer derangements_enumerated(int n) {
  if (n > 11) throw Error("enumeration limited to n <= 11");
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  long count = 0;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (p[static_cast<std::size_t>(i)] == i) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

Integer catalan(int n) { return binomial(2L * n, n) / (n + 1); }

Integer catalan_recurrence(int n) {
  std::vector<Integer> c(static_cast<std::size_t>(n + 1), 0);
  c[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int i = 0; i < m; ++i) c[static_cast<std::size_t>(m)] += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - 1 - i)];
  return c[static_cast<std::size_t>(n)];
}

namespace {

// Permutations of [n] with prescribed comparison between positions i and i+1
// (descent[i] true means s(i) > s(i+1)); DP on the rank of the last entry.
Integer count_with_pattern(int n, const std::vector<bool>& descent) {
  if (n <= 0) return 1;
  // f[j]: permutations of length len whose last entry has rank j (0-based) among them.
  std::vector<Integer> f(1, 1);
  for (int len = 1; len < n; ++len) {
    std::vector<Integer> g(static_cast<std::size_t>(len + 1), 0);
    std::vector<Integer> prefix(static_cast<std::size_t>(len + 1), 0);
    for (int j = 0; j < len; ++j) prefix[static_cast<std::size_t>(j + 1)] = prefix[static_cast<std::size_t>(j)] + f[static_cast<std::size_t>(j)];
    for (int j = 0; j <= len; ++j) {
      // New last entry has rank j; previous last had rank i among the old entries.
      if (descent[static_cast<std::size_t>(len - 1)])
        g[static_cast<std::size_t>(j)] = prefix[static_cast<std::size_t>(len)] - prefix[static_cast<std::size_t>(j)];
      else
        g[static_cast<std::size_t>(j)] = prefix[static_cast<std::size_t>(j)];
    }
    f = std::move(g);
  }
  Integer total = 0;
  for (const auto& x : f) total += x;
  return total;
}

}  // namespace

Integer euler_alternating(int m) {
  if (m <= 1) return 1;
  std::vector<bool> pattern(static_cast<std::size_t>(m - 1));
  for (int i = 1; i < m; ++i) pattern[static_cast<std::size_t>(i - 1)] = (i % 2 == 0);
  return count_with_pattern(m, pattern);
}

Integer euler_from_series(int m) {
  std::size_t order = static_cast<std::size_t>(m + 1);
  Series c(order), s(order);
  for (std::size_t i = 0; i <= order; ++i) {
    Rational v = Rational(1) / Rational(factorial(static_cast<long>(i)));
    if (i % 2 == 0) c[i] = (i / 2) % 2 ? -v : v;
    else s[i] = ((i - 1) / 2) % 2 ? -v : v;
  }
  // sec = 1 / cos by the reciprocal recurrence.
  Series sec(order);
  sec[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += c[k] * sec[n - k];
    sec[n] = -acc;
  }
  Series tan = s * sec;
  const Series& use = (m % 2) ? tan : sec;
  Rational v = use[static_cast<std::size_t>(m)] * Rational(factorial(m));
  return v.get_num();
}

Integer descent_class(int n, const std::set<int>& r) {
  std::vector<bool> pattern(static_cast<std::size_t>(std::max(n - 1, 0)), false);
  for (int i : r) {
    if (i < 1 || i >= n) throw Error("descent position out of range");
    pattern[static_cast<std::size_t>(i - 1)] = true;
  }
  return count_with_pattern(n, pattern);
}

Integer descent_class_formula(int n, const std::set<int>& r) {
  std::vector<int> s(r.begin(), r.end());
  for (int i : s)
    if (i < 1 || i >= n) throw Error("descent position out of range");
  Integer total = 0;
  std::size_t k = s.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<long> parts;
    int prev = 0;
    std::size_t size = 0;
    for (std::size_t b = 0; b < k; ++b)
      if ((mask >> b) & 1u) {
        parts.push_back(s[b] - prev);
        prev = s[b];
        ++size;
      }
    parts.push_back(n - prev);
    Integer alpha = multinomial(parts);
    if ((k - size) % 2) total -= alpha;
    else total += alpha;
  }
  return total;
}

Integer descent_class_q(int n, const std::set<int>& r, long q) {
  if (n > 10) throw Error("enumeration limited to n <= 10");
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  Integer total = 0;
  do {
    std::set<int> des;
    for (int i = 0; i + 1 < n; ++i)
      if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(i + 1)]) des.insert(i + 1);
    if (des != r) continue;
    unsigned long inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inv;
    Integer term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(q), inv);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

Integer euler_d(int n, int d) {
  std::set<int> r;
  for (int i = 1; i < n; ++i) r.insert(i * d);
  return descent_class(n * d - 1, r);
}

Integer signed_descent_class(int n, const std::set<int>& r) {
  if (n > 8) throw Error("enumeration limited to n <= 8");
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  long count = 0;
  do {
    for (unsigned signs = 0; signs < (1u << n); ++signs) {
      std::vector<int> w(static_cast<std::size_t>(n + 1), 0);
      for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i + 1)] = ((signs >> i) & 1u) ? -p[static_cast<std::size_t>(i)] : p[static_cast<std::size_t>(i)];
      std::set<int> des;
      for (int i = 0; i < n; ++i)
        if (w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(i + 1)]) des.insert(i);
      if (des == r) ++count;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

Integer gaussian_binomial(long n, long k, long q) {
  if (q < 2) throw Error("gaussian binomial: need q >= 2");
  if (k < 0 || k > n) return 0;
  Integer num = 1, den = 1, qq = q;
  for (long i = 0; i < k; ++i) {
    Integer a, b;
    mpz_pow_ui(a.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(n - i));
    mpz_pow_ui(b.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(i + 1));
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

std::map<long, Integer> kequal_betti(int n, int k) {
  if (k < 2 || n < k) throw Error("kequal betti: need 2 <= k <= n");
  std::map<long, Integer> out;
  std::vector<long> parts;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      std::vector<long> mult(parts);
      mult[0] -= 1;
      Integer term = multinomial(mult);
      for (long j : parts) term *= binomial(j - 1, k - 1);
      long t = static_cast<long>(parts.size());
      out[n - 3 - t * (k - 2)] += term;
      return;
    }
    for (int j = k; j <= rest; ++j) {
      parts.push_back(j);
      rec(rest - j);
      parts.pop_back();
    }
  };
  rec(n);
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace posettop
