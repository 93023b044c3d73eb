#pragma once

// Independent checks of decompositions. Products here go through the serial
// convolution kernel directly and shapes are measured by rank computations,
// so nothing is taken on trust from the construction.

#include <cstdint>
#include <string>
#include <vector>

#include "fga/galg.hpp"
#include "fga/shoda.hpp"

namespace fga::verify {

using galg::AlgebraElement;

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;

  bool passed() const;
  void add(std::string name, bool ok, std::string detail = {});
  void append(const Report& other, const std::string& prefix = {});
  /// First failing check, or empty.
  std::string first_failure() const;
};

/// Serial convolution product.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

struct Shape {
  /// F-dimension of FG e
  int D = 0;
  /// F-dimension of the centre of FG e
  int Z = 0;
  /// FG e = M_N(field of degree d over F)
  int N = 0;
  int d = 0;
  bool exact = false;
};

/// Requires e central; N^2 d = D is checked and recorded in `exact`.
Shape measure_shape(const AlgebraElement& e);

Report check_central_decomposition(const galg::AlgebraPtr& alg, const std::vector<AlgebraElement>& es);

Report check_idempotent_set(const AlgebraElement& e_C, const std::vector<AlgebraElement>& idempotents,
                            const Shape& shape);

/// units is row-major N x N. Every quadruple when N <= exhaustive_limit,
/// otherwise `samples` pseudo-random ones.
Report check_matrix_units(const AlgebraElement& e_C, const std::vector<AlgebraElement>& units, std::size_t n,
                          std::size_t exhaustive_limit = 4, int samples = 200);

struct CornerRing {
  int dimension = 0;
  bool commutative = false;
  bool units_ok = false;
  bool exhaustive = false;
};

/// f FG f for an idempotent f: dimension, commutativity and whether every
/// non-zero element is invertible (all elements when there are at most
/// `exhaustive_limit` of them, otherwise a deterministic sample).
CornerRing corner_ring(const AlgebraElement& f, std::uint64_t exhaustive_limit = 81);

Report check_corner_rings(const std::vector<AlgebraElement>& idempotents, const Shape& shape);

/// eps(H,K) = sum_C eps_C(H,K), and e(G,H,K) = sum of e_C over representatives
/// of the N_G(K)-orbits on the classes.
Report check_epsilon_projection(const galg::AlgebraPtr& alg, const shoda::StrongShodaPair& pair,
                                const std::vector<shoda::CyclotomicClass>& classes, const galg::TraceTable& traces);

}  // namespace fga::verify
