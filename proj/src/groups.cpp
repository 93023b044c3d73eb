#include "fga/groups.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <set>

namespace fga::groups {

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, std::string name) {
  FiniteGroup g;
  const int n = static_cast<int>(table.size());
  if (n == 0) throw GroupError("Cayley table is empty");
  g.n_ = n;
  g.table_.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw GroupError("Cayley table is not square");
    std::vector<char> seen(n, 0);
    for (int v : row) {
      if (v < 0 || v >= n || seen[v]) throw GroupError("Cayley table row is not a permutation");
      seen[v] = 1;
      g.table_.push_back(v);
    }
  }
  for (int j = 0; j < n; ++j) {
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
      const int v = g.mul(i, j);
      if (seen[v]) throw GroupError("Cayley table column is not a permutation");
      seen[v] = 1;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (g.mul(0, i) != i || g.mul(i, 0) != i) throw GroupError("element 0 is not the identity");
  }
  auto assoc = [&](int a, int b, int c) {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) throw GroupError("Cayley table is not associative");
  };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) assoc(a, b, c);
  } else {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next = [&] {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      return static_cast<int>((state >> 33) % static_cast<std::uint64_t>(n));
    };
    for (int s = 0; s < 20000; ++s) assoc(next(), next(), next());
  }
  g.name_ = std::move(name);
  g.finish();
  // greedy generating set in index order
  std::vector<char> in(n, 0);
  in[0] = 1;
  int covered = 1;
  for (int x = 1; x < n && covered < n; ++x) {
    if (in[x]) continue;
    g.generators_.push_back(x);
    const Subgroup s = generated_subgroup(g, g.generators_);
    for (int e : s.elements()) in[e] = 1;
    covered = s.order();
  }
  return g;
}

void FiniteGroup::finish() {
  inverses_.assign(n_, 0);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (mul(a, b) == 0) {
        inverses_[a] = b;
        break;
      }
    }
  }
  orders_.assign(n_, 1);
  for (int a = 0; a < n_; ++a) {
    int x = a, o = 1;
    while (x != 0) {
      x = mul(x, a);
      ++o;
    }
    orders_[a] = o;
  }
}

int FiniteGroup::pow(int a, long long e) const {
  const int o = orders_[a];
  long long r = e % o;
  if (r < 0) r += o;
  int x = 0;
  for (long long i = 0; i < r; ++i) x = mul(x, a);
  return x;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> t(n_);
  for (int a = 0; a < n_; ++a) t[a].assign(row(a).begin(), row(a).end());
  return t;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::string FiniteGroup::fingerprint() const {
  std::uint64_t h = 1469598103934665603ull;
  auto feed = [&](std::uint32_t v) {
    for (int i = 0; i < 4; ++i) {
      h ^= (v >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  feed(static_cast<std::uint32_t>(n_));
  for (int v : table_) feed(static_cast<std::uint32_t>(v));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---------------------------------------------------------------------------
// constructors

FiniteGroup group_from_permutations(int degree, const std::vector<std::vector<int>>& gens, std::string name,
                                    int max_order) {
  if (degree < 0) throw GroupError("negative permutation degree");
  for (const auto& p : gens) {
    if (static_cast<int>(p.size()) != degree) throw GroupError("generator length differs from degree");
    std::vector<char> seen(degree, 0);
    for (int v : p) {
      if (v < 0 || v >= degree || seen[v]) throw GroupError("generator is not a permutation");
      seen[v] = 1;
    }
  }
  auto compose = [&](const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> r(degree);
    for (int i = 0; i < degree; ++i) r[i] = y[x[i]];
    return r;
  };
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  for (std::size_t at = 0; at < elems.size(); ++at) {
    for (const auto& gen : gens) {
      auto p = compose(elems[at], gen);
      if (index.emplace(p, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(p));
        if (static_cast<int>(elems.size()) > max_order) {
          throw OrderBoundError("group closure exceeds order bound " + std::to_string(max_order));
        }
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
  FiniteGroup g = FiniteGroup::from_table(std::move(table), std::move(name));
  if (!gens.empty()) {
    g.generators_.clear();
    for (const auto& gen : gens) {
      const int idx = index.at(gen);
      if (idx != 0 && std::find(g.generators_.begin(), g.generators_.end(), idx) == g.generators_.end())
        g.generators_.push_back(idx);
    }
  }
  return g;
}

FiniteGroup metacyclic_group(int n, int m, int t, int r, std::string name) {
  if (n < 1 || m < 1) throw GroupError("metacyclic_group: orders must be positive");
  auto md = [](long long v, long long k) { return static_cast<int>(((v % k) + k) % k); };
  // s = r^{-1} mod n, so that b a^k = a^{k s} b
  int s = -1;
  for (int c = 0; c < n; ++c) {
    if (md(static_cast<long long>(c) * r, n) == md(1, n)) {
      s = c;
      break;
    }
  }
  if (s < 0) throw GroupError("metacyclic_group: r is not a unit");
  std::vector<int> spow(m + 1, 1 % n);
  for (int j = 1; j <= m; ++j) spow[j] = md(static_cast<long long>(spow[j - 1]) * s, n);
  const int order = n * m;
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int x = 0; x < order; ++x) {
    const int i = x % n, j = x / n;
    for (int y = 0; y < order; ++y) {
      const int k = y % n, l = y / n;
      long long ai = i + static_cast<long long>(k) * spow[j];
      int bj = j + l;
      if (bj >= m) {
        bj -= m;
        ai += t;
      }
      table[x][y] = md(ai, n) + n * bj;
    }
  }
  return FiniteGroup::from_table(std::move(table), std::move(name));
}

FiniteGroup cyclic_group(int n) { return metacyclic_group(n, 1, 0, 1, "C" + std::to_string(n)); }

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::string name) {
  const int na = a.order(), nb = b.order();
  std::vector<std::vector<int>> table(na * nb, std::vector<int>(na * nb));
  for (int x = 0; x < na * nb; ++x)
    for (int y = 0; y < na * nb; ++y) table[x][y] = a.mul(x % na, y % na) + na * b.mul(x / na, y / na);
  if (name.empty()) name = a.name() + "x" + b.name();
  return FiniteGroup::from_table(std::move(table), std::move(name));
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(Unchecked, int parent_order, std::vector<int> elements)
    : elements_(std::move(elements)), mask_(parent_order, 0) {
  std::sort(elements_.begin(), elements_.end());
  for (int e : elements_) mask_[e] = 1;
}

Subgroup::Subgroup(const FiniteGroup& g, std::vector<int> elements)
    : Subgroup(Unchecked{}, g.order(), std::move(elements)) {
  if (elements_.empty() || elements_.front() != 0) throw GroupError("subgroup must contain the identity");
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
    throw GroupError("subgroup has repeated elements");
  for (int a : elements_) {
    if (!contains(g.inv(a))) throw GroupError("subgroup not closed under inverses");
    for (int b : elements_)
      if (!contains(g.mul(a, b))) throw GroupError("subgroup not closed under multiplication");
  }
}

Subgroup Subgroup::trivial(const FiniteGroup& g) { return Subgroup(Unchecked{}, g.order(), {0}); }

Subgroup Subgroup::whole(const FiniteGroup& g) {
  std::vector<int> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(Unchecked{}, g.order(), std::move(all));
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::all_of(elements_.begin(), elements_.end(), [&](int x) { return other.contains(x); });
}

bool Subgroup::operator<(const Subgroup& o) const {
  if (order() != o.order()) return order() < o.order();
  return elements_ < o.elements_;
}

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const int> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> elems{0};
  in[0] = 1;
  for (std::size_t at = 0; at < elems.size(); ++at) {
    for (int x : gens) {
      const int y = g.mul(elems[at], x);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  }
  return Subgroup(Subgroup::Unchecked{}, g.order(), std::move(elems));
}

Subgroup cyclic_subgroup(const FiniteGroup& g, int x) {
  const int one[1] = {x};
  return generated_subgroup(g, one);
}

Subgroup join(const FiniteGroup& g, const Subgroup& s, int x) {
  // right multiplication by x, closing under S by adding whole cosets yS
  std::vector<char> in(g.order(), 0);
  std::vector<int> elems;
  auto add_coset = [&](int y) {
    for (int e : s.elements()) {
      const int z = g.mul(y, e);
      if (!in[z]) {
        in[z] = 1;
        elems.push_back(z);
      }
    }
  };
  add_coset(0);
  for (std::size_t at = 0; at < elems.size(); ++at) {
    const int y = g.mul(elems[at], x);
    if (!in[y]) add_coset(y);
  }
  return Subgroup(Subgroup::Unchecked{}, g.order(), std::move(elems));
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<int> out;
  for (int x : a.elements())
    if (b.contains(x)) out.push_back(x);
  return Subgroup(Subgroup::Unchecked{}, static_cast<int>(a.mask_.size()), std::move(out));
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  std::vector<Subgroup> list;
  std::set<std::vector<int>> seen;
  std::vector<int> cyclic_gens;
  for (int x = 0; x < g.order(); ++x) {
    Subgroup c = cyclic_subgroup(g, x);
    if (seen.insert(c.elements()).second) {
      list.push_back(std::move(c));
      cyclic_gens.push_back(x);
    }
  }
  for (std::size_t at = 0; at < list.size(); ++at) {
    for (int x : cyclic_gens) {
      if (list[at].contains(x)) continue;
      Subgroup j = join(g, list[at], x);
      if (seen.insert(j.elements()).second) list.push_back(std::move(j));
    }
  }
  std::sort(list.begin(), list.end());
  return list;
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& k) {
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (int h : k.elements()) {
      if (!k.contains(g.conj(h, x))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return Subgroup(g, std::move(out));
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (int x : g.generators())
    for (int e : h.elements())
      if (!h.contains(g.conj(e, x))) return false;
  return true;
}

bool is_normal_in(const FiniteGroup& g, const Subgroup& k, const Subgroup& h) {
  for (int x : h.elements())
    for (int e : k.elements())
      if (!k.contains(g.conj(e, x))) return false;
  return true;
}

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, int x) {
  std::vector<int> out;
  out.reserve(h.elements().size());
  for (int e : h.elements()) out.push_back(g.conj(e, x));
  return Subgroup(g, std::move(out));
}

Subgroup centralizer_mod(const FiniteGroup& g, const Subgroup& within, const Subgroup& set, const Subgroup& k) {
  std::vector<int> out;
  for (int x : within.elements()) {
    bool ok = true;
    for (int s : set.elements()) {
      // [x, s] = x^{-1} s^{-1} x s
      const int c = g.mul(g.mul(g.inv(x), g.inv(s)), g.mul(x, s));
      if (!k.contains(c)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return Subgroup(g, std::move(out));
}

// ---------------------------------------------------------------------------
// quotients

Subgroup QuotientGroup::preimage(const FiniteGroup& g, const Subgroup& s) const {
  std::vector<int> out;
  for (int x : domain.elements())
    if (s.contains(projection[x])) out.push_back(x);
  return Subgroup(g, std::move(out));
}

QuotientGroup section_quotient(const FiniteGroup& g, const Subgroup& e, const Subgroup& k) {
  if (!k.is_subset_of(e)) throw GroupError("quotient: kernel is not contained in the domain");
  if (!is_normal_in(g, k, e)) throw GroupError("quotient: kernel is not normal");
  QuotientGroup out;
  out.domain = e;
  out.kernel = k;
  out.projection.assign(g.order(), -1);
  for (int x : e.elements()) {
    if (out.projection[x] >= 0) continue;
    const int idx = static_cast<int>(out.lift.size());
    out.lift.push_back(x);
    for (int y : k.elements()) out.projection[g.mul(x, y)] = idx;
  }
  const int m = static_cast<int>(out.lift.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) table[i][j] = out.projection[g.mul(out.lift[i], out.lift[j])];
  out.quotient = FiniteGroup::from_table(std::move(table));
  return out;
}

QuotientGroup quotient(const FiniteGroup& g, const Subgroup& k) { return section_quotient(g, Subgroup::whole(g), k); }

std::optional<int> is_cyclic(const FiniteGroup& g, const Subgroup& h) {
  for (int x : h.elements())
    if (g.element_order(x) == h.order()) return x;
  return std::nullopt;
}

std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& q) {
  std::vector<Subgroup> normal;
  for (auto& s : all_subgroups(q))
    if (s.order() > 1 && is_normal(q, s)) normal.push_back(std::move(s));
  std::vector<Subgroup> out;
  for (const auto& s : normal) {
    const bool minimal = std::none_of(normal.begin(), normal.end(), [&](const Subgroup& t) {
      return t.order() < s.order() && t.is_subset_of(s);
    });
    if (minimal) out.push_back(s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// nilpotent splitting

int p_valuation(long long n, long long p) {
  if (n < 1 || p < 2) throw GroupError("p_valuation: needs n >= 1 and p >= 2");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::vector<int> prime_divisors(long long n) {
  std::vector<int> out;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(static_cast<int>(p));
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(static_cast<int>(n));
  return out;
}

namespace {

bool is_p_power(long long n, long long p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<int> p_elements(const FiniteGroup& g, int p) {
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x)
    if (is_p_power(g.element_order(x), p)) out.push_back(x);
  return out;
}

}  // namespace

bool is_nilpotent(const FiniteGroup& g) {
  for (int p : prime_divisors(g.order())) {
    long long expected = 1;
    for (int i = 0; i < p_valuation(g.order(), p); ++i) expected *= p;
    if (static_cast<long long>(p_elements(g, p).size()) != expected) return false;
  }
  return true;
}

std::map<int, Subgroup> sylow_decomposition(const FiniteGroup& g) {
  if (!is_nilpotent(g)) throw GroupError("sylow_decomposition: group is not nilpotent");
  std::map<int, Subgroup> out;
  for (int p : prime_divisors(g.order())) out.emplace(p, Subgroup(g, p_elements(g, p)));
  return out;
}

std::pair<Subgroup, Subgroup> two_part_split(const FiniteGroup& g) {
  if (!is_nilpotent(g)) throw GroupError("two_part_split: group is not nilpotent");
  std::vector<int> two, odd;
  for (int x = 0; x < g.order(); ++x) {
    const int o = g.element_order(x);
    if (is_p_power(o, 2)) two.push_back(x);
    if (o % 2 == 1) odd.push_back(x);
  }
  return {Subgroup(g, std::move(two)), Subgroup(g, std::move(odd))};
}

std::pair<int, int> element_two_split(const FiniteGroup& g, int x) {
  const int o = g.element_order(x);
  int o2 = 1;
  while ((o / o2) % 2 == 0) o2 *= 2;
  const int odd = o / o2;
  // e = 1 mod o2, e = 0 mod odd
  int e = 0;
  for (int t = 0; t < o2; ++t) {
    if ((static_cast<long long>(odd) * t) % o2 == 1 % o2) {
      e = odd * t;
      break;
    }
  }
  if (o2 == 1) e = 0;
  return {g.pow(x, e), g.pow(x, 1 - e)};
}

std::optional<Subgroup> find_complement(const FiniteGroup& q, const Subgroup& a) {
  for (auto& m : all_subgroups(q)) {
    if (m.order() * a.order() != q.order()) continue;
    if (intersection(m, a).order() == 1) return m;
  }
  return std::nullopt;
}

std::optional<std::pair<Subgroup, int>> find_cyclic_complement(const FiniteGroup& q, const Subgroup& a) {
  for (auto& m : all_subgroups(q)) {
    if (m.order() * a.order() != q.order()) continue;
    if (intersection(m, a).order() != 1) continue;
    if (auto gen = is_cyclic(q, m)) return std::make_pair(m, *gen);
  }
  return std::nullopt;
}

std::vector<int> right_transversal(const FiniteGroup& g, const Subgroup& e) {
  std::vector<char> done(g.order(), 0);
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    out.push_back(x);
    for (int y : e.elements()) done[g.mul(y, x)] = 1;
  }
  return out;
}

}  // namespace fga::groups
