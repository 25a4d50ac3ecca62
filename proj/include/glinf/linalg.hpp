#pragma once

// Dense exact linear algebra over the rationals. Matrices here are the
// weight blocks of graded spaces, so they stay small.

#include "glinf/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace glinf {

using RationalVector = std::vector<Rational>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void append_row(const RationalVector& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
  }

  /// In-place reduced row echelon form; returns the pivot columns.
  std::vector<std::size_t> reduce() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && (*this)(p, c) == 0) ++p;
      if (p == rows_) continue;
      if (p != r)
        for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(p, k), (*this)(r, k));
      Rational inv = 1 / (*this)(r, c);
      for (std::size_t k = c; k < cols_; ++k) (*this)(r, k) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || (*this)(i, c) == 0) continue;
        Rational f = (*this)(i, c);
        for (std::size_t k = c; k < cols_; ++k)
          if ((*this)(r, k) != 0) (*this)(i, k) -= f * (*this)(r, k);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

inline std::size_t rank(RationalMatrix m) { return m.reduce().size(); }

/// Basis of {x : m x = 0}, one vector per free column.
inline std::vector<RationalVector> kernel_basis(RationalMatrix m) {
  const std::size_t n = m.cols();
  auto pivots = m.reduce();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Rank of a list of row vectors of equal width.
inline std::size_t rank_of(const std::vector<RationalVector>& rows) {
  RationalMatrix m;
  for (const auto& r : rows) m.append_row(r);
  return rank(std::move(m));
}

/// Scales a rational vector to a primitive integer vector whose first nonzero
/// entry is positive.
inline std::vector<std::int64_t> primitive_integer_vector(const RationalVector& v) {
  BigInt lcm = 1;
  for (const auto& x : v)
    if (x != 0) lcm = boost::multiprecision::lcm(lcm, BigInt(boost::multiprecision::denominator(x)));
  std::vector<BigInt> ints;
  BigInt g = 0;
  for (const auto& x : v) {
    BigInt i = BigInt(boost::multiprecision::numerator(x)) * (lcm / BigInt(boost::multiprecision::denominator(x)));
    ints.push_back(i);
    g = boost::multiprecision::gcd(g, i);
  }
  std::vector<std::int64_t> out;
  int sign = 0;
  for (auto& i : ints) {
    if (g != 0) i /= g;
    if (sign == 0 && i != 0) sign = i > 0 ? 1 : -1;
  }
  for (auto& i : ints) {
    BigInt s = sign < 0 ? BigInt(-i) : i;
    if (s > std::numeric_limits<std::int64_t>::max() || s < std::numeric_limits<std::int64_t>::min())
      throw std::overflow_error("primitive_integer_vector: entry exceeds 64 bits");
    out.push_back(static_cast<std::int64_t>(s));
  }
  return out;
}

}  // namespace glinf
