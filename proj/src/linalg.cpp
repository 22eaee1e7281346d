#include "kahler/linalg.hpp"

#include <utility>

#include "kahler/error.hpp"

namespace kahler {

Matrix::Matrix(const FieldDescriptor& field, std::size_t rows, std::size_t cols)
    : field_(&field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw MismatchError("matrix shapes do not compose");
  if (field_ != o.field_) throw MismatchError("matrices over different fields");
  Matrix out(*field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const FieldElement& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o.at(k, j).is_zero()) out.at(i, j) += a * o.at(k, j);
    }
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool Matrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const {
  Matrix m = *this;
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t r = row;
    while (r < rows_ && m.at(r, col).is_zero()) ++r;
    if (r == rows_) continue;
    if (r != row)
      for (std::size_t c = 0; c < cols_; ++c) std::swap(m.at(r, c), m.at(row, c));
    FieldElement inv = m.at(row, col).inverse();
    for (std::size_t c = col; c < cols_; ++c)
      if (!m.at(row, c).is_zero()) m.at(row, c) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      FieldElement f = m.at(i, col);
      for (std::size_t c = col; c < cols_; ++c)
        if (!m.at(row, c).is_zero()) m.at(i, c) -= f * m.at(row, c);
    }
    piv.push_back(col);
    ++row;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

std::size_t Matrix::rank() const {
  std::vector<std::size_t> piv;
  rref(&piv);
  return piv.size();
}

std::vector<std::vector<FieldElement>> Matrix::nullspace() const {
  std::vector<std::size_t> piv;
  Matrix r = rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<FieldElement>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(cols_, field_->zero());
    v[free] = field_->one();
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace kahler
