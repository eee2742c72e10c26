#include "posettop/families.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>

namespace posettop {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(message);
}

void require_size(std::size_t count, std::size_t limit, const char* what) {
  if (count > limit) throw Infeasible(std::string(what) + ": " + std::to_string(count) + " elements exceeds " + std::to_string(limit));
}

constexpr std::size_t kMaxFamilyElements = 40000;

std::string join_ints(const std::vector<int>& xs, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

// block_of[i - 1] for a set partition.
std::vector<int> block_index(const SetPartition& p, int n) {
  std::vector<int> b(static_cast<std::size_t>(n), -1);
  for (std::size_t j = 0; j < p.size(); ++j)
    for (int e : p[j]) b[static_cast<std::size_t>(e - 1)] = static_cast<int>(j);
  return b;
}

SetPartition canonical(SetPartition p) {
  for (auto& b : p) std::sort(b.begin(), b.end());
  std::sort(p.begin(), p.end());
  return p;
}

PartitionFamily partition_family_from_order(int n, std::vector<SetPartition> parts) {
  require_size(parts.size(), kMaxFamilyElements, "partition family");
  std::vector<std::vector<int>> index;
  index.reserve(parts.size());
  for (const auto& p : parts) index.push_back(block_index(p, n));
  std::vector<std::string> labels;
  for (const auto& p : parts) labels.push_back(partition_label(p, n));
  // x < y iff x refines y and x != y; refinement: y-block constant on x-blocks.
  auto less = [&](Element x, Element y) {
    if (x == y || parts[x].size() <= parts[y].size()) return false;
    const auto& by = index[y];
    for (const auto& block : parts[x])
      for (int e : block)
        if (by[static_cast<std::size_t>(e - 1)] != by[static_cast<std::size_t>(block.front() - 1)]) return false;
    return true;
  };
  PartitionFamily f{Poset::from_order(std::move(labels), less), n, std::move(parts)};
  return f;
}

}  // namespace

std::string partition_label(const SetPartition& p, int n) {
  std::string s;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j) s += "|";
    s += join_ints(p[j], n <= 9 ? "" : ",");
  }
  return s;
}

std::vector<SetPartition> set_partitions(int n) {
  require(n >= 0 && n <= 12, "set partitions limited to n <= 12");
  std::vector<SetPartition> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int max_block) {
    if (pos == n) {
      SetPartition p(static_cast<std::size_t>(max_block + 1));
      for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].push_back(i + 1);
      out.push_back(std::move(p));
      return;
    }
    for (int b = 0; b <= max_block + 1; ++b) {
      rgs[static_cast<std::size_t>(pos)] = b;
      rec(pos + 1, std::max(max_block, b));
    }
  };
  rgs[0] = 0;
  rec(1, 0);
  return out;
}

bool refines(const SetPartition& x, const SetPartition& y, int n) {
  std::vector<int> by = block_index(y, n);
  for (const auto& block : x)
    for (int e : block)
      if (by[static_cast<std::size_t>(e - 1)] != by[static_cast<std::size_t>(block.front() - 1)]) return false;
  return true;
}

Poset boolean_lattice(int n) {
  require(n >= 0 && n <= 16, "boolean lattice limited to n <= 16");
  std::size_t size = std::size_t{1} << n;
  std::vector<std::string> labels;
  std::vector<Cover> covers;
  for (std::size_t m = 0; m < size; ++m) {
    std::vector<int> elems;
    for (int i = 0; i < n; ++i)
      if ((m >> i) & 1u) elems.push_back(i + 1);
      else covers.emplace_back(m, m | (std::size_t{1} << i));
    labels.push_back("{" + join_ints(elems, ",") + "}");
  }
  return Poset::from_covers(std::move(labels), covers);
}

Poset divisor_lattice(long n) {
  require(n >= 1 && n <= 1000000000L, "divisor lattice requires 1 <= n <= 1e9");
  std::vector<long> divs;
  for (long d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      divs.push_back(d);
      if (d != n / d) divs.push_back(n / d);
    }
  std::sort(divs.begin(), divs.end());
  std::vector<long> primes;
  long m = n;
  for (long p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  if (m > 1) primes.push_back(m);
  std::map<long, Element> id;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < divs.size(); ++i) {
    id[divs[i]] = i;
    labels.push_back(std::to_string(divs[i]));
  }
  std::vector<Cover> covers;
  for (long d : divs)
    for (long p : primes)
      if (n % (d * p) == 0) covers.emplace_back(id[d], id[d * p]);
  return Poset::from_covers(std::move(labels), covers);
}

PartitionFamily partition_lattice(int n) {
  require(n >= 1 && n <= 9, "partition lattice limited to 1 <= n <= 9");
  std::vector<SetPartition> parts = set_partitions(n);
  std::map<SetPartition, Element> id;
  for (std::size_t i = 0; i < parts.size(); ++i) id[parts[i]] = i;
  std::vector<Cover> covers;
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < parts.size(); ++x) {
    labels.push_back(partition_label(parts[x], n));
    const auto& p = parts[x];
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = a + 1; b < p.size(); ++b) {
        SetPartition q;
        for (std::size_t c = 0; c < p.size(); ++c)
          if (c != a && c != b) q.push_back(p[c]);
        std::vector<int> merged = p[a];
        merged.insert(merged.end(), p[b].begin(), p[b].end());
        q.push_back(std::move(merged));
        covers.emplace_back(x, id.at(canonical(std::move(q))));
      }
  }
  return {Poset::from_covers(std::move(labels), covers), n, std::move(parts)};
}

PartitionFamily noncrossing_partition_lattice(int n) {
  require(n >= 1 && n <= 10, "noncrossing partitions limited to 1 <= n <= 10");
  std::vector<SetPartition> keep;
  for (auto& p : set_partitions(n)) {
    std::vector<int> b = block_index(p, n);
    bool crossing = false;
    for (int a = 0; a < n && !crossing; ++a)
      for (int c = a + 1; c < n && !crossing; ++c) {
        if (b[static_cast<std::size_t>(a)] != b[static_cast<std::size_t>(c)]) continue;
        for (int x = a + 1; x < c && !crossing; ++x)
          for (int y = c + 1; y < n && !crossing; ++y)
            if (b[static_cast<std::size_t>(x)] == b[static_cast<std::size_t>(y)] && b[static_cast<std::size_t>(x)] != b[static_cast<std::size_t>(a)]) crossing = true;
      }
    if (!crossing) keep.push_back(std::move(p));
  }
  return partition_family_from_order(n, std::move(keep));
}

bool BlockSizeSpec::allows(int size) const {
  switch (kind) {
    case Kind::zero_mod_d: return d > 0 && size % d == 0;
    case Kind::k_mod_d: return d > 0 && size % d == k % d;
    case Kind::at_least_k: return size >= k;
    case Kind::k_equal: return size == 1 || size >= k;
    case Kind::size_set: return sizes.count(size) > 0;
  }
  return false;
}

PartitionFamily block_restricted_partition_poset(int n, const BlockSizeSpec& spec) {
  require(n >= 1 && n <= 10, "block-restricted partitions limited to 1 <= n <= 10");
  std::vector<SetPartition> keep;
  for (auto& p : set_partitions(n)) {
    bool ok = true;
    for (const auto& b : p)
      if (!spec.allows(static_cast<int>(b.size()))) ok = false;
    if (ok) keep.push_back(std::move(p));
  }
  if (keep.empty()) throw Error("no partition of [" + std::to_string(n) + "] has the requested block sizes");
  return partition_family_from_order(n, std::move(keep));
}

namespace {

SignedPartition canonical_signed(SignedPartition p) {
  // Zero block first; other blocks normalized so the minimum |e| is positive.
  for (std::size_t j = 0; j < p.size(); ++j) {
    auto& b = p[j];
    bool zero = std::find(b.begin(), b.end(), 0) != b.end();
    if (zero) {
      for (auto& e : b) e = std::abs(e);
    } else {
      auto it = std::min_element(b.begin(), b.end(), [](int a, int c) { return std::abs(a) < std::abs(c); });
      if (*it < 0)
        for (auto& e : b) e = -e;
    }
    std::sort(b.begin(), b.end(), [](int a, int c) { return std::abs(a) < std::abs(c); });
  }
  std::sort(p.begin(), p.end(), [](const std::vector<int>& a, const std::vector<int>& c) {
    return std::abs(a.front()) < std::abs(c.front());
  });
  return p;
}

std::string signed_label(const SignedPartition& p) {
  std::string s;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j) s += "|";
    s += join_ints(p[j], ",");
  }
  return s;
}

}  // namespace

TypeBFamily type_b_partition_lattice(int n) {
  require(n >= 0 && n <= 5, "type B partition lattice limited to n <= 5");
  SignedPartition bottom;
  for (int i = 0; i <= n; ++i) bottom.push_back({i});
  std::map<SignedPartition, Element> id;
  std::vector<SignedPartition> parts;
  std::vector<Cover> covers;
  std::queue<Element> todo;
  auto intern = [&](SignedPartition p) {
    p = canonical_signed(std::move(p));
    auto [it, fresh] = id.emplace(p, parts.size());
    if (fresh) {
      parts.push_back(std::move(p));
      todo.push(it->second);
    }
    return it->second;
  };
  intern(bottom);
  while (!todo.empty()) {
    Element x = todo.front();
    todo.pop();
    SignedPartition p = parts[x];
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = a + 1; b < p.size(); ++b) {
        // Blocks are sorted by minimum |e|, so p[a] holds the smaller minimum.
        SignedPartition rest;
        for (std::size_t c = 0; c < p.size(); ++c)
          if (c != a && c != b) rest.push_back(p[c]);
        bool zero = p[a].front() == 0;
        std::vector<int> plain = p[a];
        plain.insert(plain.end(), p[b].begin(), p[b].end());
        SignedPartition q1 = rest;
        q1.push_back(plain);
        Element y1 = intern(std::move(q1));
        covers.emplace_back(x, y1);
        if (!zero) {
          std::vector<int> barred = p[a];
          for (int e : p[b]) barred.push_back(-e);
          SignedPartition q2 = rest;
          q2.push_back(barred);
          Element y2 = intern(std::move(q2));
          covers.emplace_back(x, y2);
        }
      }
  }
  std::vector<std::string> labels;
  for (const auto& p : parts) labels.push_back(signed_label(p));
  return {Poset::from_covers(std::move(labels), covers), n, std::move(parts)};
}

namespace {

// GF(q) with elements 0..q-1 as base-p digit vectors of polynomials mod an irreducible.
struct FiniteField {
  int q = 0;
  std::vector<std::vector<int>> add, mul;
  std::vector<int> neg, inv;

  explicit FiniteField(int order) : q(order) {
    int p = 0;
    for (int c = 2; c <= q; ++c)
      if (q % c == 0) {
        p = c;
        break;
      }
    require(p > 0, "field order must be a prime power");
    int e = 0;
    for (int m = q; m > 1; m /= p) {
      require(m % p == 0, "field order must be a prime power");
      ++e;
    }
    auto digits = [&](int x) {
      std::vector<int> d(static_cast<std::size_t>(e), 0);
      for (int i = 0; i < e; ++i, x /= p) d[static_cast<std::size_t>(i)] = x % p;
      return d;
    };
    auto value = [&](const std::vector<int>& d) {
      int x = 0;
      for (int i = e; i-- > 0;) x = x * p + d[static_cast<std::size_t>(i)];
      return x;
    };
    // Monic modulus of degree e with no monic factor of degree 1..e/2.
    auto poly_mod = [&](std::vector<int> a, const std::vector<int>& m) {
      int dm = static_cast<int>(m.size()) - 1;
      for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
        int c = a[static_cast<std::size_t>(i)] % p;
        if (c == 0) continue;
        for (int j = 0; j <= dm; ++j)
          a[static_cast<std::size_t>(i - dm + j)] = ((a[static_cast<std::size_t>(i - dm + j)] - c * m[static_cast<std::size_t>(j)]) % p + p) % p;
      }
      a.resize(static_cast<std::size_t>(std::max(dm, 0)));
      return a;
    };
    auto monic = [&](int degree, int code) {
      std::vector<int> m(static_cast<std::size_t>(degree + 1), 0);
      for (int i = 0; i < degree; ++i, code /= p) m[static_cast<std::size_t>(i)] = code % p;
      m[static_cast<std::size_t>(degree)] = 1;
      return m;
    };
    auto ipow = [&](int b, int x) {
      int r = 1;
      while (x--) r *= b;
      return r;
    };
    std::vector<int> modulus;
    for (int code = 0; code < ipow(p, e) && modulus.empty(); ++code) {
      std::vector<int> f = monic(e, code);
      bool irreducible = true;
      for (int dg = 1; dg <= e / 2 && irreducible; ++dg)
        for (int c2 = 0; c2 < ipow(p, dg) && irreducible; ++c2) {
          auto r = poly_mod(f, monic(dg, c2));
          if (std::all_of(r.begin(), r.end(), [](int v) { return v == 0; })) irreducible = false;
        }
      if (irreducible) modulus = f;
    }
    add.assign(static_cast<std::size_t>(q), std::vector<int>(static_cast<std::size_t>(q)));
    mul = add;
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        auto da = digits(a), db = digits(b);
        std::vector<int> s(static_cast<std::size_t>(e));
        for (int i = 0; i < e; ++i) s[static_cast<std::size_t>(i)] = (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p;
        add[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = value(s);
        std::vector<int> prod(static_cast<std::size_t>(2 * e), 0);
        for (int i = 0; i < e; ++i)
          for (int j = 0; j < e; ++j) prod[static_cast<std::size_t>(i + j)] += da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)];
        for (auto& v : prod) v %= p;
        mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = value(poly_mod(prod, modulus));
      }
    neg.assign(static_cast<std::size_t>(q), 0);
    inv.assign(static_cast<std::size_t>(q), 0);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        if (add[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == 0) neg[static_cast<std::size_t>(a)] = b;
        if (mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == 1) inv[static_cast<std::size_t>(a)] = b;
      }
  }

  int plus(int a, int b) const { return add[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int times(int a, int b) const { return mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int minus(int a, int b) const { return plus(a, neg[static_cast<std::size_t>(b)]); }
};

using FieldMatrix = std::vector<std::vector<int>>;

bool in_row_space(const FiniteField& f, std::vector<int> v, const FieldMatrix& rref) {
  for (const auto& row : rref) {
    std::size_t pivot = 0;
    while (row[pivot] == 0) ++pivot;
    int c = v[pivot];
    if (c == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.minus(v[j], f.times(c, row[j]));
  }
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

}  // namespace

SubspaceFamily subspace_lattice(int n, int q) {
  require(n >= 0 && q >= 2, "subspace lattice requires n >= 0, q >= 2");
  FiniteField f(q);
  SubspaceFamily out;
  out.n = n;
  out.q = q;
  for (int k = 0; k <= n; ++k) {
    std::vector<int> pivots(static_cast<std::size_t>(k));
    std::function<void(int, int)> choose = [&](int idx, int start) {
      if (idx == k) {
        std::vector<std::pair<int, int>> free;
        for (int i = 0; i < k; ++i)
          for (int j = pivots[static_cast<std::size_t>(i)] + 1; j < n; ++j)
            if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) free.emplace_back(i, j);
        std::vector<int> vals(free.size(), 0);
        while (true) {
          FieldMatrix m(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(n), 0));
          for (int i = 0; i < k; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] = 1;
          for (std::size_t t = 0; t < free.size(); ++t) m[static_cast<std::size_t>(free[t].first)][static_cast<std::size_t>(free[t].second)] = vals[t];
          out.rref.push_back(std::move(m));
          out.dims.push_back(k);
          require_size(out.rref.size(), kMaxFamilyElements, "subspace lattice");
          std::size_t t = 0;
          while (t < vals.size() && ++vals[t] == q) vals[t++] = 0;
          if (t == vals.size()) break;
        }
        return;
      }
      for (int c = start; c < n; ++c) {
        pivots[static_cast<std::size_t>(idx)] = c;
        choose(idx + 1, c + 1);
      }
    };
    choose(0, 0);
  }
  std::vector<std::string> labels;
  for (const auto& m : out.rref) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) s += ";";
      s += join_ints(m[i], ",");
    }
    labels.push_back(s + "]");
  }
  std::vector<Cover> covers;
  for (std::size_t x = 0; x < out.rref.size(); ++x)
    for (std::size_t y = 0; y < out.rref.size(); ++y) {
      if (out.dims[y] != out.dims[x] + 1) continue;
      bool inside = true;
      for (const auto& row : out.rref[x])
        if (!in_row_space(f, row, out.rref[y])) {
          inside = false;
          break;
        }
      if (inside) covers.emplace_back(x, y);
    }
  out.poset = Poset::from_covers(std::move(labels), covers);
  return out;
}

Poset cross_polytope_face_lattice(int n) {
  require(n >= 0 && n <= 8, "cross-polytope limited to n <= 8");
  std::size_t count = 1;
  for (int i = 0; i < n; ++i) count *= 3;
  // Digit i in {0, 1, 2}: absent, +(i+1), -(i+1).
  std::vector<std::string> labels;
  std::vector<Cover> covers;
  std::vector<std::size_t> pow3(static_cast<std::size_t>(n + 1), 1);
  for (int i = 1; i <= n; ++i) pow3[static_cast<std::size_t>(i)] = pow3[static_cast<std::size_t>(i - 1)] * 3;
  Element top = count;
  for (std::size_t code = 0; code < count; ++code) {
    std::vector<int> elems;
    std::size_t c = code;
    bool full = true;
    for (int i = 0; i < n; ++i, c /= 3) {
      std::size_t digit = c % 3;
      if (digit == 1) elems.push_back(i + 1);
      else if (digit == 2) elems.push_back(-(i + 1));
      else {
        full = false;
        covers.emplace_back(code, code + pow3[static_cast<std::size_t>(i)]);
        covers.emplace_back(code, code + 2 * pow3[static_cast<std::size_t>(i)]);
      }
    }
    if (full) covers.emplace_back(code, top);
    labels.push_back("{" + join_ints(elems, ",") + "}");
  }
  labels.push_back("1^");
  return Poset::from_covers(std::move(labels), covers);
}

namespace {

long inversions(const std::vector<int>& p) {
  long inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv;
}

}  // namespace

PermutationFamily bruhat_order(int n) {
  require(n >= 1 && n <= 6, "Bruhat order limited to 1 <= n <= 6");
  PermutationFamily out;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do out.perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, Element> id;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < out.perms.size(); ++i) {
    id[out.perms[i]] = i;
    labels.push_back(join_ints(out.perms[i], ""));
  }
  std::vector<Cover> covers;
  for (std::size_t x = 0; x < out.perms.size(); ++x) {
    const auto& s = out.perms[x];
    long len = inversions(s);
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) {
        // t s with t = (a b): swap the values a and b.
        std::vector<int> t = s;
        for (auto& v : t)
          if (v == a) v = b;
          else if (v == b) v = a;
        if (inversions(t) == len + 1) covers.emplace_back(x, id.at(t));
      }
  }
  out.poset = Poset::from_covers(std::move(labels), covers);
  return out;
}

namespace {

bool is_subword(const std::vector<int>& u, const std::vector<int>& w) {
  std::size_t i = 0;
  for (std::size_t j = 0; j < w.size() && i < u.size(); ++j)
    if (w[j] == u[i]) ++i;
  return i == u.size();
}

}  // namespace

WordFamily word_poset(int n, int k, WordKind kind) {
  require(n >= 1 && k >= 0, "word poset requires n >= 1, k >= 0");
  WordFamily out;
  std::vector<int> w;
  std::function<void()> rec = [&]() {
    out.words.push_back(w);
    require_size(out.words.size(), 5000, "word poset");
    if (static_cast<int>(w.size()) == k) return;
    for (int a = 1; a <= n; ++a) {
      if (kind == WordKind::injective && std::find(w.begin(), w.end(), a) != w.end()) continue;
      if (kind == WordKind::normal && !w.empty() && w.back() == a) continue;
      w.push_back(a);
      rec();
      w.pop_back();
    }
  };
  rec();
  std::stable_sort(out.words.begin(), out.words.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) { return a.size() < b.size(); });
  std::vector<std::string> labels;
  for (const auto& word : out.words) labels.push_back(word.empty() ? "e" : join_ints(word, n <= 9 ? "" : ","));
  const auto& words = out.words;
  out.poset = Poset::from_order(std::move(labels), [&](Element x, Element y) {
    return words[x].size() < words[y].size() && is_subword(words[x], words[y]);
  });
  return out;
}

int edge_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::vector<std::pair<int, int>> graph_edges(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return e;
}

namespace {

// Connectivity of the subgraph induced on the vertex mask.
bool connected_on(int n, std::uint32_t edges, std::uint32_t vertices) {
  if (vertices == 0) return true;
  std::uint32_t seen = vertices & (~vertices + 1);
  std::uint32_t frontier = seen;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < n; ++v) {
      if (!((frontier >> v) & 1u)) continue;
      for (int u = 0; u < n; ++u)
        if (u != v && ((vertices >> u) & 1u) && ((edges >> edge_index(n, u, v)) & 1u)) next |= 1u << u;
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == vertices;
}

bool matching_on(int n, std::uint32_t edges, std::uint32_t vertices) {
  if (vertices == 0) return true;
  int v = __builtin_ctz(vertices);
  for (int u = v + 1; u < n; ++u)
    if (((vertices >> u) & 1u) && ((edges >> edge_index(n, u, v)) & 1u))
      if (matching_on(n, edges, vertices & ~(1u << u) & ~(1u << v))) return true;
  return false;
}

}  // namespace

bool graph_connected(int n, std::uint32_t edges) {
  return connected_on(n, edges, n == 0 ? 0u : (n >= 32 ? ~0u : (1u << n) - 1));
}

bool graph_k_connected(int n, std::uint32_t edges, int k) {
  if (n <= k) return false;
  std::uint32_t all = (1u << n) - 1;
  for (std::uint32_t cut = 0; cut <= all; ++cut)
    if (__builtin_popcount(cut) < k && !connected_on(n, edges, all & ~cut)) return false;
  return true;
}

bool graph_d_edge_connected(int n, std::uint32_t edges, int d) {
  if (n <= 1) return true;
  for (std::uint32_t s = 1; s < (1u << (n - 1)); ++s) {
    // s ranges over nonempty vertex sets avoiding vertex n-1.
    int crossing = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((((s >> i) & 1u) != ((s >> j) & 1u)) && ((edges >> edge_index(n, i, j)) & 1u)) ++crossing;
    if (crossing < d) return false;
  }
  return true;
}

bool graph_has_perfect_matching(int n, std::uint32_t edges) {
  if (n % 2) return false;
  return matching_on(n, edges, (1u << n) - 1);
}

GraphFamily graph_property_poset(int n, GraphPredicate predicate, int param) {
  require(n >= 1 && n <= 6, "graph posets limited to 1 <= n <= 6");
  int m = n * (n - 1) / 2;
  auto keep = [&](std::uint32_t g) {
    switch (predicate) {
      case GraphPredicate::any: return true;
      case GraphPredicate::disconnected: return !graph_connected(n, g);
      case GraphPredicate::connected: return graph_connected(n, g);
      case GraphPredicate::not_k_connected: return !graph_k_connected(n, g, param);
      case GraphPredicate::not_d_edge_connected: return !graph_d_edge_connected(n, g, param);
      case GraphPredicate::no_perfect_matching: return !graph_has_perfect_matching(n, g);
    }
    return false;
  };
  GraphFamily out;
  out.n = n;
  std::map<std::uint32_t, Element> id;
  for (std::uint32_t g = 0; g < (1u << m); ++g)
    if (keep(g)) {
      id[g] = out.graphs.size();
      out.graphs.push_back(g);
    }
  require_size(out.graphs.size(), kMaxFamilyElements, "graph poset");
  auto edges = graph_edges(n);
  std::vector<std::string> labels;
  std::vector<Cover> covers;
  for (std::size_t x = 0; x < out.graphs.size(); ++x) {
    std::uint32_t g = out.graphs[x];
    std::string s;
    for (int e = 0; e < m; ++e) {
      if ((g >> e) & 1u) {
        if (!s.empty()) s += ",";
        s += std::to_string(edges[static_cast<std::size_t>(e)].first + 1) + std::to_string(edges[static_cast<std::size_t>(e)].second + 1);
      } else {
        // All supported predicates are monotone, so single-edge steps generate the order.
        auto it = id.find(g | (1u << e));
        if (it != id.end()) covers.emplace_back(x, it->second);
      }
    }
    labels.push_back("{" + s + "}");
  }
  out.poset = Poset::from_covers(std::move(labels), covers);
  return out;
}

SimplicialComplex matching_complex(int n) {
  require(n >= 0 && n <= 12, "matching complex limited to n <= 12");
  auto edges = graph_edges(n);
  std::vector<Face> facets;
  Face cur;
  std::function<void(std::uint32_t, std::size_t)> rec = [&](std::uint32_t used, std::size_t start) {
    bool extended = false;
    for (std::size_t e = start; e < edges.size(); ++e) {
      auto [i, j] = edges[e];
      if (((used >> i) & 1u) || ((used >> j) & 1u)) continue;
      extended = true;
      cur.push_back(static_cast<Vertex>(e));
      rec(used | (1u << i) | (1u << j), e + 1);
      cur.pop_back();
    }
    if (!extended) facets.push_back(cur);
  };
  rec(0, 0);
  return SimplicialComplex::from_facets(edges.size(), std::move(facets));
}

SimplicialComplex chessboard_complex(int m, int n) {
  require(m >= 0 && n >= 0 && m <= 8 && n <= 8, "chessboard complex limited to m, n <= 8");
  if (m > n) {
    // Transpose so rows are the smaller side, then map ids back.
    SimplicialComplex t = chessboard_complex(n, m);
    std::vector<Face> facets;
    for (const auto& f : t.facets()) {
      Face g;
      for (Vertex v : f) g.push_back(static_cast<Vertex>((v % static_cast<Vertex>(m)) * static_cast<Vertex>(n) + v / static_cast<Vertex>(m)));
      std::sort(g.begin(), g.end());
      facets.push_back(std::move(g));
    }
    return SimplicialComplex::from_maximal_facets(static_cast<std::size_t>(m * n), std::move(facets));
  }
  std::vector<Face> facets;
  Face cur;
  std::function<void(int, std::uint32_t)> rec = [&](int row, std::uint32_t cols) {
    if (row == m) {
      Face f = cur;
      std::sort(f.begin(), f.end());
      facets.push_back(std::move(f));
      return;
    }
    for (int c = 0; c < n; ++c) {
      if ((cols >> c) & 1u) continue;
      cur.push_back(static_cast<Vertex>(row * n + c));
      rec(row + 1, cols | (1u << c));
      cur.pop_back();
    }
  };
  rec(0, 0);
  std::sort(facets.begin(), facets.end());
  return SimplicialComplex::from_maximal_facets(static_cast<std::size_t>(m * n), std::move(facets));
}

SimplicialComplex inflation(const SimplicialComplex& c, const std::vector<int>& m) {
  require(m.size() == c.vertex_count(), "inflation needs one multiplicity per vertex");
  std::vector<Vertex> offset(m.size() + 1, 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    require(m[i] >= 1, "inflation multiplicities must be positive");
    offset[i + 1] = offset[i] + static_cast<Vertex>(m[i]);
  }
  if (c.is_degenerate()) return SimplicialComplex::degenerate(offset.back());
  std::vector<Face> facets;
  for (const auto& f : c.facets()) {
    Face cur(f.size());
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
      if (pos == f.size()) {
        facets.push_back(cur);
        return;
      }
      for (int col = 0; col < m[f[pos]]; ++col) {
        cur[pos] = offset[f[pos]] + static_cast<Vertex>(col);
        rec(pos + 1);
      }
    };
    rec(0);
  }
  std::sort(facets.begin(), facets.end());
  return SimplicialComplex::from_maximal_facets(offset.back(), std::move(facets));
}

SimplicialComplex colored_chessboard_complex(int m, int n, int r) {
  SimplicialComplex base = chessboard_complex(m, n);
  return inflation(base, std::vector<int>(base.vertex_count(), r));
}

std::vector<Element> splitting_subposet(const PartitionFamily& pi, const std::vector<int>& sigma) {
  int n = pi.n;
  require(static_cast<int>(sigma.size()) == n, "permutation length must match the partition lattice");
  std::map<SetPartition, Element> id;
  for (std::size_t i = 0; i < pi.partitions.size(); ++i) id[pi.partitions[i]] = i;
  std::vector<Element> out;
  for (std::uint32_t cuts = 0; cuts < (1u << (n > 0 ? n - 1 : 0)); ++cuts) {
    SetPartition p(1);
    for (int i = 0; i < n; ++i) {
      if (i > 0 && ((cuts >> (i - 1)) & 1u)) p.emplace_back();
      p.back().push_back(sigma[static_cast<std::size_t>(i)]);
    }
    auto it = id.find(canonical(std::move(p)));
    require(it != id.end(), "splitting partition not in the family");
    out.push_back(it->second);
  }
  std::sort(out.begin(), out.end());
  return out;
}

EdgeLabeling boolean_labeling(const Poset& boolean) {
  EdgeLabeling lab;
  for (const auto& [x, y] : boolean.covers()) {
    std::size_t diff = x ^ y;
    require(diff && !(diff & (diff - 1)) && (x & diff) == 0, "boolean labeling expects ids equal to subset masks");
    lab[{x, y}] = {static_cast<std::int64_t>(__builtin_ctzll(diff)) + 1};
  }
  return lab;
}

namespace {

// Blocks of x merged into the single new block of y.
std::vector<std::vector<int>> merged_blocks(const SetPartition& x, const SetPartition& y) {
  std::vector<std::vector<int>> fresh;
  for (const auto& b : y)
    if (std::find(x.begin(), x.end(), b) == x.end()) fresh.push_back(b);
  if (fresh.size() != 1) throw Error("cover does not merge into a single new block");
  std::vector<std::vector<int>> parts;
  for (const auto& b : x)
    if (std::includes(fresh[0].begin(), fresh[0].end(), b.begin(), b.end())) parts.push_back(b);
  return parts;
}

}  // namespace

EdgeLabeling partition_labeling(const PartitionFamily& pi, PartitionLabeling kind) {
  EdgeLabeling lab;
  for (const auto& [x, y] : pi.poset.covers()) {
    auto parts = merged_blocks(pi.partitions[x], pi.partitions[y]);
    require(parts.size() == 2, "partition labelings need covers merging two blocks");
    std::int64_t v = 0;
    if (kind == PartitionLabeling::min_max) v = std::max(parts[0].front(), parts[1].front());
    else v = std::max(parts[0].back(), parts[1].back());
    lab[{x, y}] = {v};
  }
  return lab;
}

EdgeLabeling k_equal_labeling(const PartitionFamily& pi) {
  EdgeLabeling lab;
  for (const auto& [x, y] : pi.poset.covers()) {
    auto parts = merged_blocks(pi.partitions[x], pi.partitions[y]);
    std::vector<std::vector<int>> big, single;
    int top = 0;
    for (const auto& b : parts) {
      (b.size() == 1 ? single : big).push_back(b);
      top = std::max(top, b.back());
    }
    if (big.empty()) lab[{x, y}] = {1, top};
    else if (big.size() == 1 && single.size() == 1) lab[{x, y}] = {1, single[0][0]};
    else if (big.size() == 2 && single.empty()) lab[{x, y}] = {0, top};
    else throw Error("cover is not one of the three k-equal merge types");
  }
  return lab;
}

EdgeLabeling noncrossing_labeling(const PartitionFamily& nc) {
  EdgeLabeling lab;
  for (const auto& [x, y] : nc.poset.covers()) {
    auto parts = merged_blocks(nc.partitions[x], nc.partitions[y]);
    require(parts.size() == 2, "noncrossing labeling needs covers merging two blocks");
    const auto& b1 = parts[0].front() < parts[1].front() ? parts[0] : parts[1];
    const auto& b2 = parts[0].front() < parts[1].front() ? parts[1] : parts[0];
    std::int64_t v = 0;
    for (int e : b1)
      if (e < b2.front()) v = e;
    lab[{x, y}] = {v};
  }
  return lab;
}

EdgeLabeling geometric_labeling(const Poset& lattice, const std::vector<Element>& atom_order) {
  EdgeLabeling lab;
  for (const auto& [x, y] : lattice.covers()) {
    bool found = false;
    for (std::size_t i = 0; i < atom_order.size() && !found; ++i) {
      auto j = join(lattice, x, atom_order[i]);
      if (j && *j == y) {
        lab[{x, y}] = {static_cast<std::int64_t>(i) + 1};
        found = true;
      }
    }
    if (!found) throw Error("cover " + lattice.label(x) + " < " + lattice.label(y) + " is not reached by joining an atom");
  }
  return lab;
}

}  // namespace posettop
