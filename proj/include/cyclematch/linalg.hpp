#pragma once

#include <cstddef>
#include <vector>

#include "cyclematch/field.hpp"
#include "cyclematch/types.hpp"

namespace cyclematch {

// Dense row-major matrix over Z/p. Small sizes only.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  coefficient_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  coefficient_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_, cols_;
  std::vector<coefficient_t> data_;
};

std::size_t matrix_rank(DenseMatrix m, const PrimeField& field);

// Basis of {x : M x = 0}.
std::vector<std::vector<coefficient_t>> nullspace(DenseMatrix m, const PrimeField& field);

// Row space built one vector at a time.
class RowBasis {
 public:
  RowBasis(std::size_t width, const PrimeField& field) : width_(width), field_(&field) {}

  // Reduces v against the basis; true if it was independent (and is kept).
  bool insert(std::vector<coefficient_t> v);
  // True if v lies in the span.
  bool contains(std::vector<coefficient_t> v) const;
  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  void reduce(std::vector<coefficient_t>& v) const;

  std::size_t width_;
  const PrimeField* field_;
  std::vector<std::vector<coefficient_t>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace cyclematch
