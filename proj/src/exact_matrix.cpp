#include "catalg/exact_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace catalg {

BigInt ExactMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;

  ExactMatrix m = *this;
  BigInt prev_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        // Sylvester's identity guarantees exact division.
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev_pivot.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev_pivot = m(k, k);
  }
  BigInt det = m(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

bool ExactMatrix::is_upper_unitriangular() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if ((*this)(i, i) != 1) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if ((*this)(i, j) != 0) return false;
    }
  }
  return true;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << (*this)(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace catalg
