#pragma once

// Brute-force reference implementations.  Nothing here calls into the
// library's Möbius, chain complex or Smith form code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "posettop/complex.hpp"
#include "posettop/poset.hpp"

namespace ref {

using posettop::Element;
using posettop::Integer;
using posettop::Poset;
using posettop::Rational;

// Number of strict chains x = c0 < c1 < ... < ck = y of every length k, then
// mu(x, y) = sum (-1)^k c_k.
inline Integer mobius_by_chains(const Poset& p, Element x, Element y) {
  std::function<void(Element, long, std::map<long, Integer>&)> walk = [&](Element at, long len,
                                                                         std::map<long, Integer>& out) {
    if (at == y) {
      out[len] += 1;
      return;
    }
    for (Element z = 0; z < p.size(); ++z)
      if (p.less(at, z) && p.leq(z, y)) walk(z, len + 1, out);
  };
  std::map<long, Integer> counts;
  walk(x, 0, counts);
  Integer mu = 0;
  for (auto& [k, c] : counts) mu += (k % 2 ? -c : c);
  return mu;
}

// Every subset of every facet, bucketed by dimension (-1 holds the empty face).
inline std::map<long, std::vector<std::vector<std::uint32_t>>> all_faces(const posettop::SimplicialComplex& c) {
  std::set<std::vector<std::uint32_t>> seen;
  for (const auto& f : c.facets()) {
    std::size_t k = f.size();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
      std::vector<std::uint32_t> s;
      for (std::size_t i = 0; i < k; ++i)
        if (m >> i & 1) s.push_back(f[i]);
      seen.insert(s);
    }
  }
  std::map<long, std::vector<std::vector<std::uint32_t>>> out;
  for (const auto& s : seen) out[static_cast<long>(s.size()) - 1].push_back(s);
  return out;
}

inline std::size_t dense_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Reduced rational Betti numbers from dense boundary ranks.
inline std::map<long, long> rational_betti(const posettop::SimplicialComplex& c) {
  auto faces = all_faces(c);
  if (faces.empty()) return {};
  long top = faces.rbegin()->first;
  std::map<long, std::size_t> rk;  // rank of d_i : C_i -> C_{i-1}
  for (long i = 0; i <= top; ++i) {
    const auto& hi = faces[i];
    const auto& lo = faces[i - 1];
    std::vector<std::vector<Rational>> m(lo.size(), std::vector<Rational>(hi.size(), 0));
    for (std::size_t j = 0; j < hi.size(); ++j)
      for (std::size_t drop = 0; drop < hi[j].size(); ++drop) {
        auto f = hi[j];
        f.erase(f.begin() + static_cast<long>(drop));
        auto it = std::lower_bound(lo.begin(), lo.end(), f);
        m[static_cast<std::size_t>(it - lo.begin())][j] = (drop % 2 ? -1 : 1);
      }
    rk[i] = dense_rank(m);
  }
  std::map<long, long> out;
  for (long i = -1; i <= top; ++i) {
    long b = static_cast<long>(faces[i].size()) - static_cast<long>(rk[i]) - static_cast<long>(rk[i + 1]);
    if (b != 0) out[i] = b;
  }
  return out;
}

inline posettop::SimplicialComplex chains_complex(const Poset& p) {
  // Maximal chains by explicit DFS over the order relation.
  std::vector<posettop::Face> facets;
  std::vector<posettop::Vertex> cur;
  std::function<void(Element)> go = [&](Element x) {
    cur.push_back(static_cast<posettop::Vertex>(x));
    bool extended = false;
    for (Element z = 0; z < p.size(); ++z) {
      if (!p.less(x, z)) continue;
      bool cover = true;
      for (Element w = 0; w < p.size() && cover; ++w)
        if (p.less(x, w) && p.less(w, z)) cover = false;
      if (cover) {
        extended = true;
        go(z);
      }
    }
    if (!extended) {
      auto f = cur;
      std::sort(f.begin(), f.end());
      facets.push_back(f);
    }
    cur.pop_back();
  };
  for (Element x = 0; x < p.size(); ++x) {
    bool minimal = true;
    for (Element w = 0; w < p.size(); ++w)
      if (p.less(w, x)) minimal = false;
    if (minimal) go(x);
  }
  if (facets.empty()) return posettop::SimplicialComplex::void_complex(0);
  return posettop::SimplicialComplex::from_facets(p.size(), facets);
}

inline Integer stirling2(int n, int k) {
  std::vector<std::vector<Integer>> s(static_cast<std::size_t>(n + 1), std::vector<Integer>(static_cast<std::size_t>(n + 1), 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  return s[n][k];
}

inline Integer bell(int n) {
  Integer b = 0;
  for (int k = 0; k <= n; ++k) b += stirling2(n, k);
  return b;
}

// Random strict order: i < j with probability p, closed transitively.
inline Poset random_poset(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) lt[i][j] = coin(rng);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (lt[i][k] && lt[k][j]) lt[i][j] = true;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  return Poset::from_order(labels, [&](Element a, Element b) { return lt[a][b]; });
}

}  // namespace ref
