#pragma once

// Dense Gaussian elimination over a SmallField.

#include <cstdint>
#include <span>
#include <vector>

#include "fga/ff.hpp"

namespace fga::linalg {

using Code = ff::SmallField::Code;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Code& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Code at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Code> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Code> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  void append_row(std::span<const Code> r);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Code> data_;
};

/// Reduced row echelon form; only the non-zero rows are kept.
struct Echelon {
  Matrix rows;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

Echelon row_reduce(const ff::SmallField& f, Matrix m);
std::size_t rank(const ff::SmallField& f, const Matrix& m);

/// Reduces v against the echelon basis; zero iff v is in the row space.
std::vector<Code> reduce_against(const ff::SmallField& f, const Echelon& e, std::span<const Code> v);
bool in_row_space(const ff::SmallField& f, const Echelon& e, std::span<const Code> v);
/// Adds v to the echelon basis when it is independent; returns whether it was.
bool extend(const ff::SmallField& f, Echelon& e, std::span<const Code> v);

}  // namespace fga::linalg
