#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "defperm/rational.hpp"

namespace defperm {

/// Dense matrix of exact rationals. Row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void append_row(std::vector<Rat> row) {
    if (cols_ == 0 && rows_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

namespace detail {
inline std::size_t bit_size(const Rat& r) {
  return msb(abs(numerator(r)) + 1) + msb(denominator(r) + 1);
}
}  // namespace detail

/// Rank over the rationals by exact Gaussian elimination.
/// Pivot choice: any nonzero entry of smallest bit length in the column block,
/// a cheap guard against coefficient growth.
inline std::size_t rank(RatMatrix m) {
  std::size_t r = 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    std::size_t best_bits = 0;
    for (std::size_t i = r; i < rows; ++i) {
      if (m.at(i, c) == 0) continue;
      std::size_t bits = detail::bit_size(m.at(i, c));
      if (best == rows || bits < best_bits) {
        best = i;
        best_bits = bits;
      }
    }
    if (best == rows) continue;
    if (best != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m.at(r, j), m.at(best, j));
    const Rat pivot = m.at(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m.at(i, c) == 0) continue;
      const Rat factor = m.at(i, c) / pivot;
      m.at(i, c) = 0;
      for (std::size_t j = c + 1; j < cols; ++j)
        if (m.at(r, j) != 0) m.at(i, j) -= factor * m.at(r, j);
    }
    ++r;
  }
  return r;
}

inline std::size_t nullspace_dim(const RatMatrix& m) { return m.cols() - rank(m); }

/// Solves the square system a x = b. Returns false when a is singular.
inline bool solve_square(RatMatrix a, std::vector<Rat> b, std::vector<Rat>& x) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("not square");
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = n;
    std::size_t best_bits = 0;
    for (std::size_t i = c; i < n; ++i) {
      if (a.at(i, c) == 0) continue;
      std::size_t bits = detail::bit_size(a.at(i, c));
      if (best == n || bits < best_bits) {
        best = i;
        best_bits = bits;
      }
    }
    if (best == n) return false;
    if (best != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(c, j), a.at(best, j));
      std::swap(b[c], b[best]);
    }
    const Rat pivot = a.at(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a.at(i, c) == 0) continue;
      const Rat factor = a.at(i, c) / pivot;
      a.at(i, c) = 0;
      for (std::size_t j = c + 1; j < n; ++j) a.at(i, j) -= factor * a.at(c, j);
      b[i] -= factor * b[c];
    }
  }
  x.assign(n, Rat(0));
  for (std::size_t i = n; i-- > 0;) {
    Rat acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= a.at(i, j) * x[j];
    x[i] = acc / a.at(i, i);
  }
  return true;
}

}  // namespace defperm
