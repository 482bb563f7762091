#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zroot2/types.hpp"

namespace zroot2 {

// Dense matrix over Z with arbitrary-precision entries, row-major.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  bool is_zero() const {
    for (const Int& v : a_)
      if (v != 0) return false;
    return true;
  }

  bool is_square() const { return rows_ == cols_; }

  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  friend IntMatrix operator+(const IntMatrix& x, const IntMatrix& y) {
    check_same_shape(x, y);
    IntMatrix r(x.rows_, x.cols_);
    for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
    return r;
  }

  friend IntMatrix operator-(const IntMatrix& x, const IntMatrix& y) {
    check_same_shape(x, y);
    IntMatrix r(x.rows_, x.cols_);
    for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
    return r;
  }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols_ != y.rows_)
      throw std::invalid_argument("matrix product: inner dimensions differ (" +
                                  std::to_string(x.cols_) + " vs " + std::to_string(y.rows_) + ")");
    IntMatrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const Int& xik = x.at(i, k);
        if (xik == 0) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) r.at(i, j) += xik * y.at(k, j);
      }
    return r;
  }

  // Elementary operations; these are the only mutators besides at().
  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
  }
  // row[dst] += q * row[src]
  void add_multiple_of_row(std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t c = 0; c < cols_; ++c) at(dst, c) += q * at(src, c);
  }
  // col[dst] += q * col[src]
  void add_multiple_of_col(std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, dst) += q * at(r, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
  }

 private:
  static void check_same_shape(const IntMatrix& x, const IntMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
      throw std::invalid_argument("matrix sum: shapes differ");
  }

  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

namespace detail {

// Fraction-free (Bareiss) elimination with full pivoting. Returns the rank
// and, for square input, the determinant. Divisions are exact by the
// Sylvester identity.
inline std::pair<std::size_t, Int> bareiss_eliminate(IntMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  Int prev(1);
  int sign = 1;
  std::size_t t = 0;
  const std::size_t tmax = rows < cols ? rows : cols;
  for (; t < tmax; ++t) {
    std::size_t pr = t, pc = t;
    bool found = false;
    for (std::size_t i = t; i < rows && !found; ++i)
      for (std::size_t j = t; j < cols && !found; ++j)
        if (m.at(i, j) != 0) {
          pr = i;
          pc = j;
          found = true;
        }
    if (!found) break;
    if (pr != t) {
      m.swap_rows(pr, t);
      sign = -sign;
    }
    if (pc != t) {
      m.swap_cols(pc, t);
      sign = -sign;
    }
    const Int pivot = m.at(t, t);
    for (std::size_t i = t + 1; i < rows; ++i) {
      for (std::size_t j = t + 1; j < cols; ++j) {
        Int num = m.at(i, j) * pivot - m.at(i, t) * m.at(t, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, t) = 0;
    }
    prev = pivot;
  }
  Int det(0);
  if (rows == cols) det = (t == rows) ? Int(sign * prev) : Int(0);
  return {t, det};
}

}  // namespace detail

inline std::size_t rank_fraction_free(const IntMatrix& m) {
  return detail::bareiss_eliminate(m).first;
}

inline Int determinant(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: matrix is not square");
  if (m.rows() == 0) return Int(1);
  return detail::bareiss_eliminate(m).second;
}

}  // namespace zroot2
