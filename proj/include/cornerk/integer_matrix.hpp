#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "cornerk/error.hpp"
#include "cornerk/numeric.hpp"

namespace cornerk {

/// Dense matrix over arbitrary-precision integers. Zero-dimensional shapes
/// (0 x n, n x 0) are legal and behave like the corresponding empty maps;
/// several K-theory slots at the ends of a filtration need them.
class IntegerMatrix {
public:
  IntegerMatrix() = default;

  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  IntegerMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long long> entries)
      : rows_(rows), cols_(cols), data_(rows * cols) {
    if (entries.size() != rows * cols) {
      fail("ktheory_engine.integer_matrix", "entry count does not match shape");
    }
    std::size_t k = 0;
    for (long long e : entries) data_[k++] = e;
  }

  static IntegerMatrix identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  [[nodiscard]] Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  [[nodiscard]] const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] bool is_zero() const {
    for (const Int& e : data_) {
      if (e != 0) return false;
    }
    return true;
  }

  bool operator==(const IntegerMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }
  bool operator!=(const IntegerMatrix& other) const { return !(*this == other); }

  [[nodiscard]] IntegerMatrix operator*(const IntegerMatrix& rhs) const {
    if (cols_ != rhs.rows_) {
      fail("ktheory_engine.integer_matrix", "shape mismatch in matrix product");
    }
    IntegerMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& a = at(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
          const Int& b = rhs.at(k, j);
          if (b != 0) out.at(i, j) += a * b;
        }
      }
    }
    return out;
  }

  [[nodiscard]] IntegerMatrix transposed() const {
    IntegerMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    }
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
  }

  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) at(r, j) = -at(r, j);
  }

  void negate_col(std::size_t c) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, c) = -at(i, c);
  }

  /// row[dst] += q * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) at(dst, j) += q * at(src, j);
  }

  /// col[dst] += q * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) at(i, dst) += q * at(i, src);
  }

  /// Fraction-free Bareiss elimination; exact for any integer matrix.
  [[nodiscard]] Int determinant() const {
    if (rows_ != cols_) {
      fail("ktheory_engine.integer_matrix", "determinant of a non-square matrix");
    }
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntegerMatrix b = *this;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (b.at(k, k) == 0) {
        std::size_t pivot = k;
        while (pivot < n && b.at(pivot, k) == 0) ++pivot;
        if (pivot == n) return 0;
        b.swap_rows(k, pivot);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          b.at(i, j) = (b.at(i, j) * b.at(k, k) - b.at(i, k) * b.at(k, j)) / prev;
        }
        b.at(i, k) = 0;
      }
      prev = b.at(k, k);
    }
    return sign > 0 ? b.at(n - 1, n - 1) : -b.at(n - 1, n - 1);
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

} // namespace cornerk
