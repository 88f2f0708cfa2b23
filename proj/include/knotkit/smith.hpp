#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "knotkit/checked.hpp"

namespace knotkit {

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<Coeff>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  Coeff& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Coeff operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);
  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Coeff> data_;
};

std::string to_string(const IntMatrix& m);

// left * input * right == diagonal, with left and right unimodular and the
// nonzero diagonal entries positive and forming a divisibility chain.
struct SmithForm {
  IntMatrix diagonal;
  IntMatrix left;
  IntMatrix right;
  std::vector<Coeff> invariant_factors;  // the nonzero diagonal entries, in order
  std::size_t rank() const { return invariant_factors.size(); }
};

SmithForm smith_normal_form(const IntMatrix& m);

// Determinant of a square integer matrix (Bareiss), used to check unimodularity.
Coeff determinant(const IntMatrix& m);

}  // namespace knotkit
