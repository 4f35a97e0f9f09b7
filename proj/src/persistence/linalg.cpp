#include "cyclematch/linalg.hpp"

#include "cyclematch/error.hpp"

namespace cyclematch {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(DenseMatrix& m, const PrimeField& field) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(sel, c), m.at(row, c));
    const coefficient_t inv = field.inverse(m.at(row, col));
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(row, c) = field.mul(m.at(row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const coefficient_t factor = m.at(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c)
        m.at(r, c) = field.sub(m.at(r, c), field.mul(factor, m.at(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t matrix_rank(DenseMatrix m, const PrimeField& field) { return rref(m, field).size(); }

std::vector<std::vector<coefficient_t>> nullspace(DenseMatrix m, const PrimeField& field) {
  const auto pivots = rref(m, field);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<coefficient_t>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<coefficient_t> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = field.neg(m.at(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

void RowBasis::reduce(std::vector<coefficient_t>& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const coefficient_t x = v[pivots_[i]];
    if (x == 0) continue;
    for (std::size_t c = 0; c < width_; ++c) v[c] = field_->sub(v[c], field_->mul(x, rows_[i][c]));
  }
}

bool RowBasis::insert(std::vector<coefficient_t> v) {
  if (v.size() != width_) throw InvariantError("row width mismatch");
  for (auto& x : v) x = field_->normalize(x);
  reduce(v);
  std::size_t pivot = 0;
  while (pivot < width_ && v[pivot] == 0) ++pivot;
  if (pivot == width_) return false;
  const coefficient_t inv = field_->inverse(v[pivot]);
  for (auto& x : v) x = field_->mul(x, inv);
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool RowBasis::contains(std::vector<coefficient_t> v) const {
  if (v.size() != width_) throw InvariantError("row width mismatch");
  for (auto& x : v) x = field_->normalize(x);
  reduce(v);
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace cyclematch
