#include "posettop/poset.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace posettop {

std::size_t BitMatrix::row_count(std::size_t i) const {
  std::size_t c = 0;
  const std::uint64_t* r = row(i);
  for (std::size_t w = 0; w < words_; ++w) c += static_cast<std::size_t>(__builtin_popcountll(r[w]));
  return c;
}

std::vector<std::size_t> BitMatrix::row_members(std::size_t i) const {
  std::vector<std::size_t> out;
  const std::uint64_t* r = row(i);
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      out.push_back(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

struct Poset::MobiusCache {
  std::mutex mutex;
  std::vector<std::unique_ptr<std::vector<Integer>>> rows;
};

Poset::Poset() : mobius_(std::make_shared<MobiusCache>()) {}

namespace {

std::string describe_cycle(const std::vector<std::string>& labels,
                           const std::vector<std::vector<Element>>& succ,
                           const std::vector<char>& alive) {
  std::size_t n = labels.size();
  std::vector<int> state(n, 0);
  std::vector<Element> stack;
  std::vector<Element> cycle;
  std::function<bool(Element)> dfs = [&](Element v) -> bool {
    state[v] = 1;
    stack.push_back(v);
    for (Element w : succ[v]) {
      if (!alive[w]) continue;
      if (state[w] == 1) {
        auto it = std::find(stack.begin(), stack.end(), w);
        cycle.assign(it, stack.end());
        cycle.push_back(w);
        return true;
      }
      if (state[w] == 0 && dfs(w)) return true;
    }
    stack.pop_back();
    state[v] = 2;
    return false;
  };
  for (Element v = 0; v < n && cycle.empty(); ++v)
    if (alive[v] && state[v] == 0) dfs(v);
  std::ostringstream os;
  os << "cycle:";
  for (std::size_t i = 0; i < cycle.size(); ++i) os << (i ? " -> " : " ") << labels[cycle[i]];
  return os.str();
}

}  // namespace

Poset Poset::from_covers(std::vector<std::string> labels, const std::vector<Cover>& relations) {
  std::size_t n = labels.size();
  std::vector<std::vector<Element>> succ(n);
  std::vector<std::size_t> indeg(n, 0);
  for (auto [x, y] : relations) {
    if (x >= n || y >= n) throw Error("cover pair out of range");
    if (x == y) throw Error("cover pair is a self-pair");
    succ[x].push_back(y);
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (Element y : s) ++indeg[y];
  }
  std::vector<Element> order;
  order.reserve(n);
  for (Element v = 0; v < n; ++v)
    if (indeg[v] == 0) order.push_back(v);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Element w : succ[order[i]])
      if (--indeg[w] == 0) order.push_back(w);
  if (order.size() != n) {
    std::vector<char> alive(n, 1);
    for (Element v : order) alive[v] = 0;
    throw Error(describe_cycle(labels, succ, alive));
  }
  Poset p;
  p.labels_ = std::move(labels);
  p.up_ = BitMatrix(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    p.up_.set(*it, *it);
    for (Element w : succ[*it]) p.up_.or_row(*it, w);
  }
  p.finish_from_up();
  return p;
}

Poset Poset::from_order(std::vector<std::string> labels,
                        const std::function<bool(Element, Element)>& less) {
  std::size_t n = labels.size();
  Poset p;
  p.labels_ = std::move(labels);
  p.up_ = BitMatrix(n);
  for (Element x = 0; x < n; ++x) {
    p.up_.set(x, x);
    for (Element y = 0; y < n; ++y)
      if (x != y && less(x, y)) {
        if (p.up_.test(y, x)) throw Error("relation is not antisymmetric");
        p.up_.set(x, y);
      }
  }
  p.finish_from_up();
  if (!check_invariants(p)) throw Error("relation is not transitive");
  return p;
}

void Poset::finish_from_up() {
  std::size_t n = labels_.size();
  down_ = BitMatrix(n);
  for (Element x = 0; x < n; ++x)
    for (Element y : up_.row_members(x)) down_.set(y, x);
  upper_.assign(n, {});
  lower_.assign(n, {});
  std::size_t words = up_.words();
  for (Element x = 0; x < n; ++x) {
    const std::uint64_t* ux = up_.row(x);
    for (Element z : up_.row_members(x)) {
      if (z == x) continue;
      // x < z is a cover iff [x, z] has exactly two elements
      const std::uint64_t* dz = down_.row(z);
      std::size_t between = 0;
      for (std::size_t w = 0; w < words && between <= 2; ++w)
        between += static_cast<std::size_t>(__builtin_popcountll(ux[w] & dz[w]));
      if (between == 2) upper_[x].push_back(z);
    }
  }
  for (Element x = 0; x < n; ++x)
    for (Element y : upper_[x]) lower_[y].push_back(x);
  for (auto& l : lower_) std::sort(l.begin(), l.end());
  std::vector<std::size_t> indeg(n);
  topo_.clear();
  for (Element v = 0; v < n; ++v) {
    indeg[v] = lower_[v].size();
    if (indeg[v] == 0) topo_.push_back(v);
  }
  for (std::size_t i = 0; i < topo_.size(); ++i)
    for (Element w : upper_[topo_[i]])
      if (--indeg[w] == 0) topo_.push_back(w);
  mobius_ = std::make_shared<MobiusCache>();
}

std::vector<Cover> Poset::covers() const {
  std::vector<Cover> out;
  for (Element x = 0; x < size(); ++x)
    for (Element y : upper_[x]) out.emplace_back(x, y);
  return out;
}

std::size_t Poset::cover_count() const {
  std::size_t c = 0;
  for (const auto& u : upper_) c += u.size();
  return c;
}

std::optional<Element> Poset::bottom() const {
  for (Element x = 0; x < size(); ++x)
    if (up_.row_count(x) == size()) return x;
  return std::nullopt;
}

std::optional<Element> Poset::top() const {
  for (Element x = 0; x < size(); ++x)
    if (down_.row_count(x) == size()) return x;
  return std::nullopt;
}

std::vector<Element> Poset::minimal_elements() const {
  std::vector<Element> out;
  for (Element x = 0; x < size(); ++x)
    if (lower_[x].empty()) out.push_back(x);
  return out;
}

std::vector<Element> Poset::maximal_elements() const {
  std::vector<Element> out;
  for (Element x = 0; x < size(); ++x)
    if (upper_[x].empty()) out.push_back(x);
  return out;
}

const std::vector<Integer>& Poset::mobius_row(Element x) const {
  if (x >= size()) throw Error("element out of range");
  std::lock_guard<std::mutex> lock(mobius_->mutex);
  auto& rows = mobius_->rows;
  if (rows.size() != size()) rows.resize(size());
  if (rows[x]) return *rows[x];
  auto row = std::make_unique<std::vector<Integer>>(size());
  auto& mu = *row;
  std::size_t words = up_.words();
  const std::uint64_t* ux = up_.row(x);
  for (Element y : topo_) {
    if (!up_.test(x, y)) continue;
    if (y == x) {
      mu[y] = 1;
      continue;
    }
    Integer s = 0;
    const std::uint64_t* dy = down_.row(y);
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = ux[w] & dy[w];
      while (bits) {
        Element z = w * 64 + static_cast<Element>(__builtin_ctzll(bits));
        bits &= bits - 1;
        if (z != y) s += mu[z];
      }
    }
    mu[y] = -s;
  }
  rows[x] = std::move(row);
  return *rows[x];
}

Integer Poset::mobius(Element x, Element y) const {
  if (x >= size() || y >= size()) throw Error("element out of range");
  if (!leq(x, y)) throw Error("mobius requires x <= y");
  return mobius_row(x)[y];
}

Integer mobius_invariant(const Poset& p) {
  auto b = p.bottom();
  auto t = p.top();
  if (!b || !t) throw Error("mobius invariant requires a bounded poset");
  return p.mobius(*b, *t);
}

Poset direct_product(const Poset& p, const Poset& q) {
  std::size_t m = q.size();
  std::vector<std::string> labels;
  labels.reserve(p.size() * m);
  for (Element i = 0; i < p.size(); ++i)
    for (Element j = 0; j < m; ++j) labels.push_back("(" + p.label(i) + "," + q.label(j) + ")");
  std::vector<Cover> rel;
  for (Element i = 0; i < p.size(); ++i)
    for (Element j = 0; j < m; ++j) {
      for (Element k : p.upper_covers(i)) rel.emplace_back(i * m + j, k * m + j);
      for (Element k : q.upper_covers(j)) rel.emplace_back(i * m + j, i * m + k);
    }
  return Poset::from_covers(std::move(labels), rel);
}

Poset ordinal_join(const Poset& p, const Poset& q) {
  std::vector<std::string> labels = p.labels();
  labels.insert(labels.end(), q.labels().begin(), q.labels().end());
  std::size_t off = p.size();
  std::vector<Cover> rel = p.covers();
  for (auto [a, b] : q.covers()) rel.emplace_back(a + off, b + off);
  for (Element a : p.maximal_elements())
    for (Element b : q.minimal_elements()) rel.emplace_back(a, b + off);
  return Poset::from_covers(std::move(labels), rel);
}

Poset disjoint_union(const Poset& p, const Poset& q) {
  std::vector<std::string> labels = p.labels();
  labels.insert(labels.end(), q.labels().begin(), q.labels().end());
  std::size_t off = p.size();
  std::vector<Cover> rel = p.covers();
  for (auto [a, b] : q.covers()) rel.emplace_back(a + off, b + off);
  return Poset::from_covers(std::move(labels), rel);
}

Poset chain_poset(std::size_t length) {
  std::vector<std::string> labels;
  std::vector<Cover> rel;
  for (std::size_t i = 0; i <= length; ++i) {
    labels.push_back(std::to_string(i));
    if (i) rel.emplace_back(i - 1, i);
  }
  return Poset::from_covers(std::move(labels), rel);
}

Poset antichain_poset(std::size_t size) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < size; ++i) labels.push_back(std::to_string(i));
  return Poset::from_covers(std::move(labels), {});
}

Derived induced_subposet(const Poset& p, const std::vector<Element>& elements) {
  std::vector<Element> ids = elements;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (Element e : ids)
    if (e >= p.size()) throw Error("element out of range");
  std::vector<std::string> labels;
  for (Element e : ids) labels.push_back(p.label(e));
  // Covers of the induced order: y covers x when nothing of the subset lies between.
  std::vector<Cover> rel;
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = 0; j < ids.size(); ++j)
      if (i != j && p.less(ids[i], ids[j])) rel.emplace_back(i, j);
  Derived d{Poset::from_covers(std::move(labels), rel), ids};
  return d;
}

Derived dual(const Poset& p) {
  std::vector<Cover> rel;
  for (auto [a, b] : p.covers()) rel.emplace_back(b, a);
  std::vector<Element> parent(p.size());
  for (Element i = 0; i < p.size(); ++i) parent[i] = i;
  return {Poset::from_covers(p.labels(), rel), parent};
}

Derived proper_part(const Poset& p) {
  auto b = p.bottom();
  auto t = p.top();
  std::vector<Element> keep;
  for (Element x = 0; x < p.size(); ++x)
    if ((!b || x != *b) && (!t || x != *t)) keep.push_back(x);
  return induced_subposet(p, keep);
}

Derived bounded_extension(const Poset& p) {
  std::size_t n = p.size();
  std::vector<std::string> labels;
  labels.push_back("0^");
  labels.insert(labels.end(), p.labels().begin(), p.labels().end());
  labels.push_back("1^");
  std::vector<Cover> rel;
  for (auto [a, b] : p.covers()) rel.emplace_back(a + 1, b + 1);
  for (Element x : p.minimal_elements()) rel.emplace_back(0, x + 1);
  for (Element x : p.maximal_elements()) rel.emplace_back(x + 1, n + 1);
  if (n == 0) rel.emplace_back(0, 1);
  std::vector<Element> parent(n + 2, kNoElement);
  for (Element x = 0; x < n; ++x) parent[x + 1] = x;
  return {Poset::from_covers(std::move(labels), rel), parent};
}

namespace {

Derived interval(const Poset& p, Element x, Element y, bool open) {
  if (x >= p.size() || y >= p.size()) throw Error("element out of range");
  if (!p.leq(x, y)) throw Error("interval endpoints are not comparable as x <= y");
  std::vector<Element> keep;
  for (Element z = 0; z < p.size(); ++z)
    if (p.leq(x, z) && p.leq(z, y) && (!open || (z != x && z != y))) keep.push_back(z);
  return induced_subposet(p, keep);
}

}  // namespace

Derived open_interval(const Poset& p, Element x, Element y) { return interval(p, x, y, true); }
Derived closed_interval(const Poset& p, Element x, Element y) { return interval(p, x, y, false); }

Derived upper_set(const Poset& p, Element x, bool strict) {
  if (x >= p.size()) throw Error("element out of range");
  std::vector<Element> keep;
  for (Element z = 0; z < p.size(); ++z)
    if (p.leq(x, z) && (!strict || z != x)) keep.push_back(z);
  return induced_subposet(p, keep);
}

Derived lower_set(const Poset& p, Element x, bool strict) {
  if (x >= p.size()) throw Error("element out of range");
  std::vector<Element> keep;
  for (Element z = 0; z < p.size(); ++z)
    if (p.leq(z, x) && (!strict || z != x)) keep.push_back(z);
  return induced_subposet(p, keep);
}

std::vector<long> heights(const Poset& p) {
  std::vector<long> h(p.size(), 0);
  for (Element x : p.linear_extension())
    for (Element y : p.upper_covers(x)) h[y] = std::max(h[y], h[x] + 1);
  return h;
}

long poset_length(const Poset& p) {
  if (p.empty()) return -1;
  auto h = heights(p);
  return *std::max_element(h.begin(), h.end());
}

bool is_pure(const Poset& p) {
  if (p.empty()) return true;
  auto h = heights(p);
  long len = *std::max_element(h.begin(), h.end());
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y : p.upper_covers(x))
      if (h[y] != h[x] + 1) return false;
    if (p.upper_covers(x).empty() && h[x] != len) return false;
  }
  return true;
}

bool is_bounded(const Poset& p) { return p.bottom().has_value() && p.top().has_value(); }

namespace {

std::optional<Element> extremal_bound(const BitMatrix& m, Element x, Element y) {
  std::size_t words = m.words();
  const std::uint64_t* a = m.row(x);
  const std::uint64_t* b = m.row(y);
  std::vector<std::uint64_t> common(words);
  std::size_t count = 0;
  for (std::size_t w = 0; w < words; ++w) {
    common[w] = a[w] & b[w];
    count += static_cast<std::size_t>(__builtin_popcountll(common[w]));
  }
  if (count == 0) return std::nullopt;
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t bits = common[w];
    while (bits) {
      Element z = w * 64 + static_cast<Element>(__builtin_ctzll(bits));
      bits &= bits - 1;
      // z is the extremal bound when every common bound lies beyond it in m.
      const std::uint64_t* rz = m.row(z);
      std::size_t inside = 0;
      for (std::size_t v = 0; v < words; ++v)
        inside += static_cast<std::size_t>(__builtin_popcountll(rz[v] & common[v]));
      if (inside == count) return z;
    }
  }
  return std::nullopt;
}

}  // namespace

// down(z) contains all common lower bounds iff z is the meet.
std::optional<Element> meet(const Poset& p, Element x, Element y) {
  return extremal_bound(p.down_matrix(), x, y);
}

std::optional<Element> join(const Poset& p, Element x, Element y) {
  return extremal_bound(p.up_matrix(), x, y);
}

bool is_meet_semilattice(const Poset& p) {
  if (p.empty()) return false;
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = x + 1; y < p.size(); ++y)
      if (!p.comparable(x, y) && !meet(p, x, y)) return false;
  return true;
}

bool is_lattice(const Poset& p) {
  if (p.empty()) return false;
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = x + 1; y < p.size(); ++y)
      if (!p.comparable(x, y) && (!meet(p, x, y) || !join(p, x, y))) return false;
  return true;
}

std::vector<long> rank_function(const Poset& p) {
  if (!p.bottom()) throw Error("rank function requires a minimum");
  if (!is_pure(p)) throw Error("rank function requires a pure poset");
  return heights(p);
}

std::vector<Element> atoms(const Poset& p) {
  if (auto b = p.bottom()) return p.upper_covers(*b);
  return p.minimal_elements();
}

std::vector<Element> coatoms(const Poset& p) {
  if (auto t = p.top()) return p.lower_covers(*t);
  return p.maximal_elements();
}

std::vector<Chain> maximal_chains(const Poset& p) {
  std::vector<Chain> out;
  if (p.empty()) {
    out.push_back(Chain{});
    return out;
  }
  std::vector<Element> path;
  std::function<void(Element)> walk = [&](Element x) {
    path.push_back(x);
    if (p.upper_covers(x).empty()) {
      out.push_back(Chain{path});
    } else {
      for (Element y : p.upper_covers(x)) walk(y);
    }
    path.pop_back();
  };
  for (Element m : p.minimal_elements()) walk(m);
  return out;
}

Integer count_maximal_chains(const Poset& p) {
  if (p.empty()) return 1;
  std::vector<Integer> ways(p.size(), 0);
  Integer total = 0;
  for (Element x : p.linear_extension()) {
    if (p.lower_covers(x).empty()) ways[x] = 1;
    for (Element y : p.upper_covers(x)) ways[y] += ways[x];
    if (p.upper_covers(x).empty()) total += ways[x];
  }
  return total;
}

StructureInfo structure(const Poset& p) {
  StructureInfo s;
  s.is_pure = is_pure(p);
  s.is_bounded = is_bounded(p);
  s.is_lattice = is_lattice(p);
  s.is_meet_semilattice = is_meet_semilattice(p);
  s.length = poset_length(p);
  if (s.is_pure && p.bottom()) s.rank = heights(p);
  s.atoms = atoms(p);
  s.coatoms = coatoms(p);
  s.maximal_chains = maximal_chains(p);
  return s;
}

bool check_invariants(const Poset& p) {
  std::size_t n = p.size();
  BitMatrix closure(n);
  for (auto it = p.linear_extension().rbegin(); it != p.linear_extension().rend(); ++it) {
    closure.set(*it, *it);
    for (Element y : p.upper_covers(*it)) closure.or_row(*it, y);
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (closure.test(x, y) != p.leq(x, y)) return false;
      if (x != y && p.leq(x, y) && p.leq(y, x)) return false;
    }
  for (auto [x, z] : p.covers())
    for (Element y = 0; y < n; ++y)
      if (p.less(x, y) && p.less(y, z)) return false;
  return true;
}

}  // namespace posettop
