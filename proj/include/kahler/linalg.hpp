#pragma once

// Dense matrices over an exact field, with exact Gauss-Jordan elimination.

#include <cstddef>
#include <vector>

#include "kahler/field.hpp"

namespace kahler {

class Matrix {
 public:
  Matrix(const FieldDescriptor& field, std::size_t rows, std::size_t cols);

  const FieldDescriptor& field() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix operator*(const Matrix& o) const;
  bool operator==(const Matrix& o) const;
  bool is_zero() const;

  // Reduced row echelon form; pivot columns returned through `pivots`.
  Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  std::size_t rank() const;
  // Basis of {v : M v = 0}, each vector of length cols().
  std::vector<std::vector<FieldElement>> nullspace() const;

 private:
  const FieldDescriptor* field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> data_;
};

}  // namespace kahler
