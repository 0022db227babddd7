#include "subcan/linalg.hpp"

#include <stdexcept>

namespace subcan {

void FpMatrix::append_row(const std::vector<int64_t>& r) {
  if (cols_ == 0 && rows_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
  a_.insert(a_.end(), r.begin(), r.end());
  for (size_t j = 0; j < cols_; ++j) a_[rows_ * cols_ + j] = F_->reduce(a_[rows_ * cols_ + j]);
  ++rows_;
}

size_t FpMatrix::rref(std::vector<size_t>* pivot_cols) {
  if (pivot_cols) pivot_cols->clear();
  const int64_t p = F_->p();
  size_t r = 0;
  for (size_t c = 0; c < cols_ && r < rows_; ++c) {
    size_t piv = r;
    while (piv < rows_ && a_[piv * cols_ + c] == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != r)
      for (size_t j = c; j < cols_; ++j) std::swap(a_[piv * cols_ + j], a_[r * cols_ + j]);
    int64_t inv = F_->inv(a_[r * cols_ + c]);
    for (size_t j = c; j < cols_; ++j) a_[r * cols_ + j] = (a_[r * cols_ + j] * inv) % p;
    for (size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      int64_t f = a_[i * cols_ + c];
      if (f == 0) continue;
      int64_t nf = p - f;
      for (size_t j = c; j < cols_; ++j)
        a_[i * cols_ + j] = (a_[i * cols_ + j] + nf * a_[r * cols_ + j]) % p;
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  return r;
}

size_t FpMatrix::rank() const {
  FpMatrix copy(*this);
  return copy.rref();
}

FpMatrix FpMatrix::kernel() const {
  FpMatrix copy(*this);
  std::vector<size_t> piv;
  size_t rank = copy.rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (size_t c : piv) is_pivot[c] = true;
  FpMatrix K(F_, cols_ - rank, cols_);
  size_t k = 0;
  for (size_t c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    K.set(k, c, 1);
    for (size_t r = 0; r < rank; ++r) K.set(k, piv[r], F_->neg(copy.at(r, c)));
    ++k;
  }
  return K;
}

std::optional<std::vector<int64_t>> FpMatrix::solve(const std::vector<int64_t>& b) const {
  if (b.size() != rows_) throw std::invalid_argument("rhs length mismatch");
  FpMatrix aug(F_, rows_, cols_ + 1);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) aug.set(i, j, at(i, j));
    aug.set(i, cols_, b[i]);
  }
  std::vector<size_t> piv;
  aug.rref(&piv);
  std::vector<int64_t> x(cols_, 0);
  for (size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] == cols_) return std::nullopt;  // pivot in rhs column: inconsistent
    x[piv[r]] = aug.at(r, cols_);
  }
  return x;
}

FpMatrix FpMatrix::multiply(const FpMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matmul shape mismatch");
  const int64_t p = F_->p();
  FpMatrix r(F_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      int64_t v = a_[i * cols_ + k];
      if (v == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j)
        r.a_[i * o.cols_ + j] = (r.a_[i * o.cols_ + j] + v * o.a_[k * o.cols_ + j]) % p;
    }
  return r;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix r(F_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.a_[j * rows_ + i] = a_[i * cols_ + j];
  return r;
}

std::vector<int64_t> FpMatrix::reduce_against_rref(std::vector<int64_t> v,
                                                   const std::vector<size_t>& pivots) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  const int64_t p = F_->p();
  for (size_t r = 0; r < pivots.size(); ++r) {
    int64_t f = v[pivots[r]] % p;
    if (f == 0) continue;
    int64_t nf = p - f;
    for (size_t j = 0; j < cols_; ++j) v[j] = (v[j] + nf * a_[r * cols_ + j]) % p;
  }
  return v;
}

}  // namespace subcan
