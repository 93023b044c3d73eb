#include "fga/codes.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace fga::codes {

using galg::Code;

LinearCode left_ideal_code(const galg::AlgebraElement& a, std::string label) {
  const auto& alg = a.algebra();
  LinearCode c;
  c.field = alg.field;
  c.length = alg.dim();
  linalg::Matrix m(0, static_cast<std::size_t>(c.length));
  for (int g = 0; g < c.length; ++g) m.append_row(a.left_mul(g).coeffs());
  c.basis = linalg::row_reduce(*alg.field, std::move(m));
  c.label = std::move(label);
  return c;
}

int min_distance(const LinearCode& code, std::uint64_t bound) {
  const std::size_t k = code.basis.rank();
  if (k == 0) throw CodeError("min_distance: the zero code has no non-zero codewords");
  const ff::SmallField& f = *code.field;
  const std::uint64_t q = f.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > bound / q) throw CodeError("min_distance: more than " + std::to_string(bound) + " codewords");
    total *= q;
  }
  const std::size_t n = static_cast<std::size_t>(code.length);
  const std::size_t rest = k - 1;
  std::uint64_t inner = total / q;
  int best = std::numeric_limits<int>::max();
  // split on the coefficient of the first row; each block is an odometer over the others
#pragma omp parallel for schedule(dynamic) reduction(min : best)
  for (long long lead = 0; lead < static_cast<long long>(q); ++lead) {
    std::vector<Code> word(n, 0);
    const auto first = code.basis.rows.row(0);
    for (std::size_t j = 0; j < n; ++j) word[j] = f.mul(static_cast<Code>(lead), first[j]);
    std::vector<Code> digits(rest, 0);
    for (std::uint64_t t = 0; t < inner; ++t) {
      if (t > 0) {
        // increment the odometer over field codes; each changed digit moves one row coefficient
        std::size_t pos = 0;
        while (true) {
          const auto row = code.basis.rows.row(pos + 1);
          const Code old = digits[pos];
          digits[pos] = (old + 1) % static_cast<Code>(q);
          const Code delta = f.sub(digits[pos], old);
          for (std::size_t j = 0; j < n; ++j) word[j] = f.add(word[j], f.mul(delta, row[j]));
          if (digits[pos] != 0) break;
          ++pos;
        }
      }
      if (lead == 0 && t == 0) continue;
      const int w = static_cast<int>(std::count_if(word.begin(), word.end(), [](Code c) { return c != 0; }));
      best = std::min(best, w);
    }
  }
  return best;
}

bool is_left_ideal(const LinearCode& code, const groups::FiniteGroup& g) {
  for (std::size_t i = 0; i < code.basis.rank(); ++i) {
    const auto row = code.basis.rows.row(i);
    for (int x = 0; x < g.order(); ++x) {
      std::vector<Code> moved(row.size(), 0);
      for (int h = 0; h < g.order(); ++h) moved[g.mul(x, h)] = row[h];
      if (!linalg::in_row_space(*code.field, code.basis, moved)) return false;
    }
  }
  return true;
}

std::string generator_matrix_text(const LinearCode& code) {
  std::ostringstream out;
  const ff::SmallField& f = *code.field;
  for (std::size_t i = 0; i < code.basis.rank(); ++i) {
    const auto row = code.basis.rows.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ' ';
      if (f.is_prime_field()) {
        out << row[j];
      } else {
        out << '(';
        const auto d = f.digits(row[j]);
        for (std::size_t t = 0; t < d.size(); ++t) out << (t ? "," : "") << d[t];
        out << ')';
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace fga::codes
