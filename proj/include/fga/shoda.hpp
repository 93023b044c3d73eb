#pragma once

// Strong Shoda pairs, q^m-cyclotomic classes of H/K, the stabilizer
// E = E_G(H/K) computed from the conjugation action on exponents, and the
// primitive central idempotents e_C(G, H, K) with their predicted shapes.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fga/galg.hpp"
#include "fga/groups.hpp"

namespace fga::shoda {

using groups::FiniteGroup;
using groups::Subgroup;

struct StrongShodaPair {
  Subgroup H;
  Subgroup K;
  /// H/K
  groups::QuotientGroup quotient;
  /// Least element of H whose coset generates H/K.
  int generator = 0;
  Subgroup normalizer_of_K;

  int index() const { return H.order() / K.order(); }
};

/// (SS1) K <= H normal in N_G(K).
bool satisfies_ss1(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);
/// (SS2) H/K cyclic and maximal abelian in N_G(K)/K.
bool satisfies_ss2(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);
/// (SS3) eps(H,K) eps(H,K)^x = 0 for x outside N_G(K), checked over the rationals.
bool satisfies_ss3(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);

StrongShodaPair make_pair(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);

/// Every strong Shoda pair, ordered by (|H|, |K|, H, K).
std::vector<StrongShodaPair> strong_shoda_pairs(const FiniteGroup& g);

struct CyclotomicClass {
  int modulus = 1;
  /// Sorted; {0} for the trivial class when modulus is 1.
  std::vector<int> exponents;

  int representative() const { return exponents.front(); }
  bool contains(int j) const;
  bool operator==(const CyclotomicClass&) const = default;
};

/// Orbits of the units mod k under multiplication by qm, ordered by least member.
std::vector<CyclotomicClass> cyclotomic_classes(int k, std::uint64_t qm);

/// s with x^{-1} a x = a^s mod K, for x normalizing H and K.
int conjugation_exponent(const FiniteGroup& g, const StrongShodaPair& pair, int x);
/// Elements of N_G(H) cap N_G(K) mapping the class onto itself.
Subgroup stabilizer_of_class(const FiniteGroup& g, const StrongShodaPair& pair, const CyclotomicClass& c);
/// E_G(H/K) for base field size qm.
Subgroup stabilizer_E(const FiniteGroup& g, const StrongShodaPair& pair, std::uint64_t qm);

struct ComponentShape {
  /// [G:H]
  int matrix_size = 1;
  /// multiplicative order of q^m modulo [H:K]
  std::uint64_t o = 1;
  int index_E_H = 1;
  int index_E_K = 1;
  /// o / [E:H]: degree of the centre over F.
  std::uint64_t degree_over_F = 1;
  /// m o / [E:H]: the centre has q^exponent elements.
  std::uint64_t exponent = 1;
  /// m o / [E:K] in lowest terms.
  std::uint64_t printed_numerator = 1;
  std::uint64_t printed_denominator = 1;
  Subgroup E;
};

ComponentShape component_shape(const FiniteGroup& g, const StrongShodaPair& pair, const Subgroup& e,
                               std::uint64_t qm, std::uint32_t m);

struct Component {
  int pair_index = 0;
  int class_index = 0;
  CyclotomicClass cls;
  galg::AlgebraElement e;
  ComponentShape shape;
  /// Further (pair, class) labels yielding the same idempotent.
  std::vector<std::pair<int, int>> aliases;
};

struct CentralDecomposition {
  std::vector<StrongShodaPair> pairs;
  /// Classes of each pair, parallel to `pairs`.
  std::vector<std::vector<CyclotomicClass>> classes;
  std::vector<Component> components;
  bool nilpotent = false;
};

/// Trace tables for each [H:K] occurring among the pairs.
std::map<int, galg::TraceTable> trace_tables(const ff::SmallField& f, const std::vector<StrongShodaPair>& pairs);

galg::AlgebraElement epsilon_C(const galg::AlgebraPtr& alg, const StrongShodaPair& pair, const CyclotomicClass& c,
                               const galg::TraceTable& traces);

/// e_C for every pair and class, deduplicated by value in (pair, class)
/// order; the first label of each value names the component. `jobs` <= 0
/// uses the OpenMP default.
CentralDecomposition central_decomposition(const galg::AlgebraPtr& alg, int jobs = 0);

}  // namespace fga::shoda
