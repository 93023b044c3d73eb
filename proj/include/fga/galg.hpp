#pragma once

// The group algebra FG over a small finite field, and the idempotent
// building blocks: averaging idempotents, epsilon(H, K), epsilon_C(H, K) and
// the sum of the distinct G-conjugates e_C(G, H, K).

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "fga/ff.hpp"
#include "fga/groups.hpp"

namespace fga::galg {

using Code = ff::SmallField::Code;

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// FG: a group and a base field F = F_{q^m}.
struct Algebra {
  groups::FiniteGroup group;
  ff::SmallFieldPtr field;

  int dim() const { return group.order(); }
  bool semisimple() const;
};
using AlgebraPtr = std::shared_ptr<const Algebra>;

AlgebraPtr make_algebra(groups::FiniteGroup group, ff::SmallFieldPtr field);

namespace kernels {

/// out[g] = sum_h a[h] b[h^{-1} g], scattering over non-zero pairs.
void convolve_serial(const Algebra& alg, std::span<const Code> a, std::span<const Code> b, std::span<Code> out);
/// Same product, one output coefficient per iteration, OpenMP over outputs.
void convolve_omp(const Algebra& alg, std::span<const Code> a, std::span<const Code> b, std::span<Code> out);

/// Group order from which AlgebraElement::operator* threads the product.
inline constexpr int kParallelThreshold = 96;

}  // namespace kernels

class AlgebraElement {
 public:
  AlgebraElement() = default;
  /// The zero element.
  explicit AlgebraElement(AlgebraPtr alg);
  AlgebraElement(AlgebraPtr alg, std::vector<Code> coeffs);

  static AlgebraElement one(const AlgebraPtr& alg);
  static AlgebraElement basis(const AlgebraPtr& alg, int g, Code c = 1);

  const Algebra& algebra() const { return *alg_; }
  const AlgebraPtr& context() const { return alg_; }
  std::span<const Code> coeffs() const { return coeffs_; }
  Code coeff(int g) const { return coeffs_[g]; }
  void set(int g, Code c) { coeffs_[g] = c; }

  AlgebraElement operator+(const AlgebraElement& rhs) const;
  AlgebraElement operator-(const AlgebraElement& rhs) const;
  AlgebraElement operator*(const AlgebraElement& rhs) const;
  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement scale(Code c) const;
  /// g^{-1} a g
  AlgebraElement conjugate(int g) const;
  /// Left or right multiplication by a group element.
  AlgebraElement left_mul(int g) const;
  AlgebraElement right_mul(int g) const;

  std::vector<int> support() const;
  bool is_zero() const;
  bool operator==(const AlgebraElement& rhs) const { return coeffs_ == rhs.coeffs_; }
  bool operator!=(const AlgebraElement& rhs) const { return !(*this == rhs); }
  /// Lexicographic on coefficient codes; gives a canonical ordering.
  bool operator<(const AlgebraElement& rhs) const { return coeffs_ < rhs.coeffs_; }

 private:
  void require_same(const AlgebraElement& rhs) const;

  AlgebraPtr alg_;
  std::vector<Code> coeffs_;
};

/// |H|^{-1} sum_{h in H} h
AlgebraElement averaging_idempotent(const AlgebraPtr& alg, const groups::Subgroup& h);

/// K~ when H = K, else prod over minimal normal M/K of H/K of (K~ - M~).
AlgebraElement epsilon(const AlgebraPtr& alg, const groups::Subgroup& h, const groups::Subgroup& k);

/// tr_{F(xi_k)/F}(xi_k^i) for i in [0, k), pulled back to F.
struct TraceTable {
  int k = 1;
  /// multiplicative order of q^m modulo k
  std::uint64_t o = 1;
  std::vector<Code> values;
};

TraceTable make_trace_table(const ff::SmallField& base, int k);

/// |H|^{-1} sum_h tr(chi(hK)) h^{-1} with chi(a^i K) = xi_k^{j i}, where a is
/// `generator` and j is `exponent`.
AlgebraElement epsilon_C(const AlgebraPtr& alg, const groups::Subgroup& h, const groups::Subgroup& k,
                         int generator, int exponent, const TraceTable& traces);

/// Sum of the distinct G-conjugates of a.
AlgebraElement sum_of_conjugates(const AlgebraElement& a);

AlgebraElement e_C(const AlgebraPtr& alg, const groups::Subgroup& h, const groups::Subgroup& k, int generator,
                   int exponent, const TraceTable& traces);

bool is_idempotent(const AlgebraElement& a);
bool is_central(const AlgebraElement& a);
groups::Subgroup centralizer_in_G(const AlgebraElement& a);

enum class Side { left, two_sided };
/// F-dimension of FG a (left) or FG a FG (two-sided).
int ideal_dimension(const AlgebraElement& a, Side side);

// ---------------------------------------------------------------------------
// epsilon(H, K) over the rationals, up to a positive integer multiple

using IntVector = std::vector<std::int64_t>;

IntVector scaled_rational_epsilon(const groups::FiniteGroup& g, const groups::Subgroup& h,
                                  const groups::Subgroup& k);
IntVector int_convolve(const groups::FiniteGroup& g, const IntVector& a, const IntVector& b);
IntVector int_conjugate(const groups::FiniteGroup& g, const IntVector& a, int x);

}  // namespace fga::galg
