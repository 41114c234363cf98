#include "pps/sparse.hpp"

#include <stdexcept>

namespace pps {

void accumulate(SparseVector& v, std::size_t key, const Scalar& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = v.emplace(key, value);
  if (inserted) return;
  it->second += value;
  if (it->second.is_zero()) v.erase(it);
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& [r, row] : data_) n += row.size();
  return n;
}

Scalar SparseMatrix::at(std::size_t r, std::size_t c) const {
  auto row = data_.find(r);
  if (row == data_.end()) return Scalar(0);
  auto it = row->second.find(c);
  return it == row->second.end() ? Scalar(0) : it->second;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Scalar& value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("sparse matrix index");
  if (value.is_zero()) return;
  Row& row = data_[r];
  accumulate(row, c, value);
  if (row.empty()) data_.erase(r);
}

SparseMatrix SparseMatrix::adjoint() const {
  SparseMatrix out(cols_, rows_);
  for (const auto& [r, row] : data_) {
    for (const auto& [c, v] : row) out.data_[c].emplace(r, v.conj());
  }
  return out;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  SparseVector out;
  for (const auto& [r, row] : data_) {
    Scalar sum;
    for (const auto& [c, a] : row) {
      auto it = v.find(c);
      if (it != v.end()) sum += a * it->second;
    }
    accumulate(out, r, sum);
  }
  return out;
}

SparseVector SparseMatrix::flatten() const {
  SparseVector out;
  for (const auto& [r, row] : data_) {
    for (const auto& [c, v] : row) out.emplace(c * rows_ + r, v);
  }
  return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("sparse matrix shape mismatch");
  SparseMatrix out(a.rows_, b.cols_);
  for (const auto& [r, row] : a.data_) {
    SparseMatrix::Row acc;
    for (const auto& [k, v] : row) {
      auto brow = b.data_.find(k);
      if (brow == b.data_.end()) continue;
      for (const auto& [c, w] : brow->second) accumulate(acc, c, v * w);
    }
    if (!acc.empty()) out.data_.emplace(r, std::move(acc));
  }
  return out;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("sparse matrix shape mismatch");
  }
  SparseMatrix out = a;
  for (const auto& [r, row] : b.data_) {
    for (const auto& [c, v] : row) out.add(r, c, v);
  }
  return out;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return a + Scalar(-1) * b; }

SparseMatrix operator*(const Scalar& c, const SparseMatrix& a) {
  SparseMatrix out(a.rows_, a.cols_);
  if (c.is_zero()) return out;
  for (const auto& [r, row] : a.data_) {
    for (const auto& [col, v] : row) out.data_[r].emplace(col, c * v);
  }
  return out;
}

std::size_t rank(const std::vector<SparseVector>& vectors) {
  // pivot key -> reduced vector whose smallest key is the pivot, normalised to 1
  std::map<std::size_t, SparseVector> pivots;
  for (SparseVector v : vectors) {
    while (!v.empty()) {
      const auto [lead, coeff] = *v.begin();
      auto p = pivots.find(lead);
      if (p == pivots.end()) {
        const Scalar inv = Scalar(1) / coeff;
        for (auto& [k, x] : v) x *= inv;
        pivots.emplace(lead, std::move(v));
        break;
      }
      const Scalar factor = -coeff;
      for (const auto& [k, x] : p->second) accumulate(v, k, factor * x);
    }
  }
  return pivots.size();
}

}  // namespace pps
