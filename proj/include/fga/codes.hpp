#pragma once

// Left ideals FG a as linear codes of length |G|, coordinates in element
// index order.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fga/galg.hpp"
#include "fga/linalg.hpp"

namespace fga::codes {

class CodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultEnumerationBound = 1u << 20;

struct LinearCode {
  ff::SmallFieldPtr field;
  int length = 0;
  /// Reduced row echelon generator matrix.
  linalg::Echelon basis;
  std::optional<int> min_distance;
  std::string label;

  int dimension() const { return static_cast<int>(basis.rank()); }
};

LinearCode left_ideal_code(const galg::AlgebraElement& a, std::string label = {});

/// Minimum weight over all non-zero codewords. Throws when the code is zero
/// or has more than `bound` codewords.
int min_distance(const LinearCode& code, std::uint64_t bound = kDefaultEnumerationBound);

/// g . row stays in the row space for every basis row and g in G.
bool is_left_ideal(const LinearCode& code, const groups::FiniteGroup& g);

/// One row per line; integers over a prime field, parenthesised coefficient
/// tuples otherwise.
std::string generator_matrix_text(const LinearCode& code);

}  // namespace fga::codes
