#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pps/scalar.hpp"

namespace pps {

using SparseVector = std::map<std::size_t, Scalar>;

void accumulate(SparseVector& v, std::size_t key, const Scalar& value);

/// Exact sparse matrix, row-major; zero entries are never stored.
class SparseMatrix {
 public:
  using Row = std::map<std::size_t, Scalar>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] const std::map<std::size_t, Row>& data() const { return data_; }
  [[nodiscard]] bool is_zero() const { return data_.empty(); }
  [[nodiscard]] std::size_t nonzeros() const;

  [[nodiscard]] Scalar at(std::size_t r, std::size_t c) const;
  void add(std::size_t r, std::size_t c, const Scalar& value);

  [[nodiscard]] SparseMatrix adjoint() const;
  [[nodiscard]] SparseVector apply(const SparseVector& v) const;
  /// Keeps only the given columns (the rest become zero).
  template <typename Pred>
  [[nodiscard]] SparseMatrix restrict_columns(Pred keep) const {
    SparseMatrix out(rows_, cols_);
    for (const auto& [r, row] : data_) {
      for (const auto& [c, v] : row) {
        if (keep(c)) out.add(r, c, v);
      }
    }
    return out;
  }
  /// Entries keyed column-major (c·rows + r), for rank computations over matrices.
  [[nodiscard]] SparseVector flatten() const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator*(const Scalar& c, const SparseMatrix& a);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<std::size_t, Row> data_;
};

/// Exact rank of a family of vectors (Gaussian elimination over ℚ(i)).
std::size_t rank(const std::vector<SparseVector>& vectors);

}  // namespace pps
