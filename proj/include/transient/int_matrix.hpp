#pragma once

#include "transient/bigint.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace transient {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<BigInt>& values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return entries_.empty(); }
  bool is_square() const noexcept { return rows_ == cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  const std::vector<BigInt>& entries() const noexcept { return entries_; }

  IntMatrix transpose() const;
  bool is_symmetric() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  // col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  void negate_row(std::size_t r);

  // Copies with one row (column) appended, or with one row and column removed.
  IntMatrix with_row(const std::vector<BigInt>& row) const;
  IntMatrix with_col(const std::vector<BigInt>& col) const;
  IntMatrix without_row_col(std::size_t r, std::size_t c) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);

/// Parses `-2 1; 1 -2` style text (rows split on `;`, entries on whitespace
/// or `,`) and bracketed row lists such as `[[-1, 0], [-1, -1]]`. An empty
/// string or `[]` is the 0x0 matrix. Throws ParseError on ragged rows or
/// non-integer tokens.
IntMatrix parse_matrix(std::string_view text);

/// Inverse of parse_matrix in the `;`-separated form: `1 0; 0 6`.
std::string format_matrix(const IntMatrix& m);

}  // namespace transient
