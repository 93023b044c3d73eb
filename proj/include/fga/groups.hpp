#pragma once

// Finite groups given by Cayley tables, with the subgroup and quotient
// machinery needed to enumerate strong Shoda pairs and to split nilpotent
// groups into 2- and 2'-parts. Elements are indices 0..n-1; 0 is the
// identity. Every choice (subgroup order, complements, transversals) is
// fixed by element-index order so downstream output is reproducible.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fga::groups {

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a closure grows past the configured order bound.
class OrderBoundError : public GroupError {
 public:
  using GroupError::GroupError;
};

inline constexpr int kDefaultMaxOrder = 128;

class FiniteGroup {
 public:
  FiniteGroup() = default;

  /// Validates the Latin-square property, identity at 0 and associativity
  /// (exhaustive up to order 64, sampled above).
  static FiniteGroup from_table(std::vector<std::vector<int>> table, std::string name = {});

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inverses_[a]; }
  int element_order(int a) const { return orders_[a]; }
  /// g^{-1} h g
  int conj(int h, int g) const { return mul(mul(inv(g), h), g); }
  int pow(int a, long long e) const;

  const std::vector<int>& generators() const { return generators_; }
  const std::vector<int>& element_orders() const { return orders_; }
  const std::vector<int>& inverses() const { return inverses_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  std::vector<std::vector<int>> table() const;
  std::span<const int> row(int a) const {
    return {table_.data() + static_cast<std::size_t>(a) * n_, static_cast<std::size_t>(n_)};
  }
  bool is_abelian() const;

  /// 16 hex digits (FNV-1a over the Cayley table).
  std::string fingerprint() const;

  bool operator==(const FiniteGroup& other) const { return n_ == other.n_ && table_ == other.table_; }

 private:
  friend FiniteGroup group_from_permutations(int, const std::vector<std::vector<int>>&, std::string, int);
  void finish();

  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inverses_;
  std::vector<int> orders_;
  std::vector<int> generators_;
  std::string name_;
};

/// Closure of permutation generators (image arrays, composed left to right:
/// i^{xy} = (i^x)^y). Elements are numbered breadth-first from the identity,
/// multiplying on the right by the generators in the given order.
FiniteGroup group_from_permutations(int degree, const std::vector<std::vector<int>>& gens,
                                    std::string name = {}, int max_order = kDefaultMaxOrder);

/// <a, b | a^n = 1, b^m = a^t, a^b = a^r>, elements a^i b^j numbered i + n*j.
FiniteGroup metacyclic_group(int n, int m, int t, int r, std::string name = {});
FiniteGroup cyclic_group(int n);
/// Pairs (x, y) numbered x + |A| * y.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::string name = {});

class Subgroup {
 public:
  Subgroup() = default;
  /// Elements must form a subgroup of g; checked.
  Subgroup(const FiniteGroup& g, std::vector<int> elements);

  static Subgroup trivial(const FiniteGroup& g);
  static Subgroup whole(const FiniteGroup& g);

  const std::vector<int>& elements() const { return elements_; }
  int order() const { return static_cast<int>(elements_.size()); }
  bool contains(int x) const { return x >= 0 && x < static_cast<int>(mask_.size()) && mask_[x]; }
  bool is_subset_of(const Subgroup& other) const;

  bool operator==(const Subgroup& o) const { return elements_ == o.elements_; }
  bool operator!=(const Subgroup& o) const { return !(*this == o); }
  /// (order, element list)
  bool operator<(const Subgroup& o) const;

 private:
  struct Unchecked {};
  Subgroup(Unchecked, int parent_order, std::vector<int> elements);
  friend Subgroup generated_subgroup(const FiniteGroup&, std::span<const int>);
  friend Subgroup join(const FiniteGroup&, const Subgroup&, int);
  friend Subgroup intersection(const Subgroup&, const Subgroup&);

  std::vector<int> elements_;
  std::vector<char> mask_;
};

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const int> gens);
Subgroup cyclic_subgroup(const FiniteGroup& g, int x);
/// <S, x>
Subgroup join(const FiniteGroup& g, const Subgroup& s, int x);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
/// Sorted by (order, element set).
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

Subgroup normalizer(const FiniteGroup& g, const Subgroup& k);
bool is_normal(const FiniteGroup& g, const Subgroup& h);
/// K normal in H (K <= H assumed).
bool is_normal_in(const FiniteGroup& g, const Subgroup& k, const Subgroup& h);
Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, int x);
/// Elements x of `within` with [x, s] in K for all s in `set`; K = 1 gives the centralizer.
Subgroup centralizer_mod(const FiniteGroup& g, const Subgroup& within, const Subgroup& set, const Subgroup& k);

/// E/K for K normal in E <= G. projection maps G-indices of E to quotient
/// indices (-1 outside E); lift picks the least G-index in each coset.
struct QuotientGroup {
  FiniteGroup quotient;
  Subgroup domain;
  Subgroup kernel;
  std::vector<int> projection;
  std::vector<int> lift;

  /// Preimage in G of a subgroup of the quotient.
  Subgroup preimage(const FiniteGroup& g, const Subgroup& s) const;
};

QuotientGroup quotient(const FiniteGroup& g, const Subgroup& k);
QuotientGroup section_quotient(const FiniteGroup& g, const Subgroup& e, const Subgroup& k);

/// Least-index element of order |H|, when H is cyclic.
std::optional<int> is_cyclic(const FiniteGroup& g, const Subgroup& h);
std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& q);

int p_valuation(long long n, long long p);
std::vector<int> prime_divisors(long long n);

bool is_nilpotent(const FiniteGroup& g);
/// Sylow p-subgroups of a nilpotent group (elements of p-power order).
std::map<int, Subgroup> sylow_decomposition(const FiniteGroup& g);
/// Elements of 2-power order and of odd order.
std::pair<Subgroup, Subgroup> two_part_split(const FiniteGroup& g);
/// x = x_2 x_2' with commuting parts of 2-power and odd order (CRT on the
/// exponent of x).
std::pair<int, int> element_two_split(const FiniteGroup& g, int x);

/// First subgroup M (all_subgroups order) with M cap A = 1 and MA = Q.
std::optional<Subgroup> find_complement(const FiniteGroup& q, const Subgroup& a);
std::optional<std::pair<Subgroup, int>> find_cyclic_complement(const FiniteGroup& q, const Subgroup& a);

/// Least element of each right coset Ex, ordered by that representative.
std::vector<int> right_transversal(const FiniteGroup& g, const Subgroup& e);

}  // namespace fga::groups
