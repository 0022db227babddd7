#pragma once

#include <optional>
#include <vector>

#include "subcan/field.hpp"

namespace subcan {

// Dense matrices over Z/p, row major.  Big enough for the graded pieces this
// project touches; no attempt at cache blocking.
class FpMatrix {
public:
  FpMatrix() = default;
  FpMatrix(const PrimeField* F, size_t rows, size_t cols)
      : F_(F), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  const PrimeField* field() const { return F_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  int64_t at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  void set(size_t i, size_t j, int64_t v) { a_[i * cols_ + j] = F_->reduce(v); }

  std::vector<int64_t> row(size_t i) const {
    return std::vector<int64_t>(a_.begin() + static_cast<long>(i * cols_),
                                a_.begin() + static_cast<long>((i + 1) * cols_));
  }
  void append_row(const std::vector<int64_t>& r);

  // in-place reduced row echelon form; returns rank, records pivot columns
  size_t rref(std::vector<size_t>* pivot_cols = nullptr);
  size_t rank() const;

  // basis of { x : A x = 0 }, one kernel vector per returned row
  FpMatrix kernel() const;

  // one solution of A x = b, if any
  std::optional<std::vector<int64_t>> solve(const std::vector<int64_t>& b) const;

  FpMatrix multiply(const FpMatrix& o) const;
  FpMatrix transpose() const;

  // rows of `other` reduced against this RREF matrix (must already be in
  // RREF); used to project onto a complement of a row space
  std::vector<int64_t> reduce_against_rref(std::vector<int64_t> v,
                                           const std::vector<size_t>& pivots) const;

private:
  const PrimeField* F_ = nullptr;
  size_t rows_ = 0, cols_ = 0;
  std::vector<int64_t> a_;
};

}  // namespace subcan
