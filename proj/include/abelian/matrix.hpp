#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "abelian/numeric.hpp"

namespace abelian {

// Arbitrary-precision integers for the linear algebra layer. Intermediate
// entries of a Smith reduction can blow up far past 64 bits even for small
// inputs, so the matrices are exact by construction.
using BigInt = boost::multiprecision::cpp_int;

// Least nonnegative residue of v modulo m (m > 0).
inline BigInt mod_reduce(const BigInt& v, const BigInt& m) {
  BigInt r = v % m;
  return r < 0 ? r + m : r;
}

// Conversion back to the 64-bit world of group coordinates; values that do
// not fit are a hard error, never a silent truncation.
inline std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("matrix entry does not fit in 64 bits");
  return v.convert_to<std::int64_t>();
}

// Dense exact integer matrix, row-major.
class IntMatrix {
public:
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, BigInt(0)) {}

  IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw std::invalid_argument("entry count does not match rows*cols");
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    if (rows.empty()) return IntMatrix(0, 0);
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols())
        throw std::invalid_argument("ragged row lengths");
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const BigInt& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  // row a += factor * row b
  void add_row(std::size_t a, std::size_t b, const BigInt& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) += factor * (*this)(b, j);
  }

  // col a += factor * col b
  void add_col(std::size_t a, std::size_t b, const BigInt& factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) += factor * (*this)(i, b);
  }

  void negate_row(std::size_t a) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) = -(*this)(a, j);
  }

  bool operator==(const IntMatrix&) const = default;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> entries_;
};

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix dimension mismatch in product");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

// Exact determinant via Bareiss fraction-free elimination.
inline BigInt determinant(IntMatrix a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("determinant requires a square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t pivot = k;
      while (pivot < n && a(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      a.swap_rows(k, pivot);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;  // exact (Bareiss)
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace abelian
