#pragma once

// A complete set of orthogonal primitive idempotents and matrix units of a
// simple component FG e_C of a nilpotent group algebra: split E/K into its
// 2- and 2'-parts, fit the 2-part to one of the three presentation cases,
// and conjugate beta = b~_{2'} beta_2 eps_C by T = T_{2'} T_2 T_E.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fga/galg.hpp"
#include "fga/groups.hpp"
#include "fga/shoda.hpp"

namespace fga::construct {

using galg::AlgebraElement;
using groups::FiniteGroup;
using groups::Subgroup;

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CaseTag { cyclic_G_equals_H, case1i, case1ii, case2 };
std::string to_string(CaseTag tag);

/// Coset representatives used for elements of E/K.
enum class LiftChoice { least, greatest };

/// E/K with its 2- and 2'-parts. Indices are elements of `ek.quotient`.
struct SplitEK {
  groups::QuotientGroup ek;
  Subgroup e2;
  Subgroup e2prime;
  int a2 = 0;
  int a2prime = 0;
  Subgroup h2;
  Subgroup h2prime;
  /// Generator of a cyclic complement of H_{2'}/K in E_{2'}/K.
  int b2prime = 0;
};

SplitEK split_EK(const FiniteGroup& g, const shoda::StrongShodaPair& pair, const Subgroup& e);

/// Group elements below are in G (lifted from E/K).
struct CaseWitness {
  CaseTag tag = CaseTag::cyclic_G_equals_H;
  int a2 = 0;
  int a2prime = 0;
  int b2 = 0;
  std::optional<int> c2;
  int b2prime = 0;
  /// Preimage in G of the complement of H_2/K (case 1).
  std::optional<Subgroup> m2;
  /// |a2 K| = 2^n, |b2 K| = 2^k, a2^b2 = a2^r mod K.
  int n = 0;
  int k = 0;
  int r = 1;
  /// [E_2 : H_2]
  int d = 1;
  /// x^2 + y^2 = -1 with y != 0 (case 2).
  std::optional<std::pair<galg::Code, galg::Code>> xy;
};

/// Fits the 2-part of E/K. Quotient indices in the returned witness are
/// lifted to G with `lift`.
CaseWitness classify_case(const FiniteGroup& g, const SplitEK& split, const ff::SmallField& f,
                          LiftChoice lift = LiftChoice::least);

struct IdempotentSet {
  AlgebraElement e_C;
  AlgebraElement epsilon_C;
  AlgebraElement beta;
  /// T_{e_C}, ordered as the triples (t_{2'}, t_2, t_E).
  std::vector<int> transversal;
  /// beta^t for t in transversal.
  std::vector<AlgebraElement> idempotents;
  CaseWitness witness;
};

IdempotentSet build_idempotents(const galg::AlgebraPtr& alg, const shoda::StrongShodaPair& pair,
                                const shoda::CyclotomicClass& cls, const galg::TraceTable& traces,
                                const Subgroup& e, LiftChoice lift = LiftChoice::least);

/// E_{tt'} = t^{-1} beta t', row-major over the transversal.
struct MatrixUnits {
  std::vector<int> transversal;
  std::vector<AlgebraElement> units;

  std::size_t size() const { return transversal.size(); }
  const AlgebraElement& at(std::size_t i, std::size_t j) const { return units[i * size() + j]; }
};

MatrixUnits matrix_units(const IdempotentSet& set);

}  // namespace fga::construct
