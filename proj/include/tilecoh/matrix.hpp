#pragma once
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "tilecoh/errors.hpp"
#include "tilecoh/ints.hpp"

namespace tilecoh {

/// Dense exact integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(const std::vector<std::vector<Int>>& cols, std::size_t nrows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Int> column(std::size_t c) const;
  std::vector<std::vector<Int>> columns() const;

  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  bool is_zero() const;

  /// exact determinant (fraction-free elimination); square only
  Int determinant() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

}  // namespace tilecoh
