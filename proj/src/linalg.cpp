#include "fga/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace fga::linalg {

void Matrix::append_row(std::span<const Code> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw std::invalid_argument("Matrix::append_row: width mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

namespace {

// row -= factor * pivot_row
void axpy(const ff::SmallField& f, std::span<Code> row, Code factor, std::span<const Code> pivot_row,
          std::size_t from) {
  const Code negf = f.neg(factor);
  for (std::size_t j = from; j < row.size(); ++j) {
    if (pivot_row[j] != 0) row[j] = f.add(row[j], f.mul(negf, pivot_row[j]));
  }
}

}  // namespace

Echelon row_reduce(const ff::SmallField& f, Matrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m.at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      auto a = m.row(piv);
      auto b = m.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const Code inv = f.inv(m.at(r, c));
    for (auto& v : m.row(r)) v = f.mul(v, inv);
    const std::span<const Code> prow = m.row(r);
    const auto n_rows = static_cast<long long>(rows);
    // independent row updates; worth threading only for wide systems
#pragma omp parallel for schedule(static) if (rows * cols > (1u << 16))
    for (long long i = 0; i < n_rows; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      if (ui == r) continue;
      const Code factor = m.at(ui, c);
      if (factor != 0) axpy(f, m.row(ui), factor, prow, c);
    }
    pivots.push_back(c);
    ++r;
  }
  Echelon out;
  out.rows = Matrix(0, cols);
  for (std::size_t i = 0; i < r; ++i) out.rows.append_row(m.row(i));
  out.pivots = std::move(pivots);
  return out;
}

std::size_t rank(const ff::SmallField& f, const Matrix& m) { return row_reduce(f, m).rank(); }

std::vector<Code> reduce_against(const ff::SmallField& f, const Echelon& e, std::span<const Code> v) {
  std::vector<Code> w(v.begin(), v.end());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    const Code factor = w[e.pivots[i]];
    if (factor != 0) axpy(f, w, factor, e.rows.row(i), 0);
  }
  return w;
}

bool in_row_space(const ff::SmallField& f, const Echelon& e, std::span<const Code> v) {
  const auto w = reduce_against(f, e, v);
  return std::all_of(w.begin(), w.end(), [](Code c) { return c == 0; });
}

bool extend(const ff::SmallField& f, Echelon& e, std::span<const Code> v) {
  if (e.rows.cols() == 0 && e.rows.rows() == 0) e.rows = Matrix(0, v.size());
  auto w = reduce_against(f, e, v);
  auto it = std::find_if(w.begin(), w.end(), [](Code c) { return c != 0; });
  if (it == w.end()) return false;
  Matrix m = e.rows;
  m.append_row(w);
  e = row_reduce(f, std::move(m));
  return true;
}

}  // namespace fga::linalg
