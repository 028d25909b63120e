#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace catalg {

using BigInt = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Fraction-free (Bareiss) elimination. The empty matrix has determinant 1.
  /// Throws std::invalid_argument if not square.
  BigInt determinant() const;

  bool is_upper_unitriangular() const;

  std::string to_string() const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

}  // namespace catalg
