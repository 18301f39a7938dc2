#pragma once

#include <cstddef>
#include <vector>

#include "heaps/field.hpp"

namespace heaps {

/// Dense matrix over an exact field.  Sized for desk-scale work; rank is
/// computed by fraction-free (Bareiss) elimination over the rationals and by
/// plain elimination over GF(p).
class Matrix {
public:
  Matrix(Field field, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  FieldScalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldScalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::size_t rank() const;
  std::size_t nullity() const { return cols_ - rank(); }

  /// Appends `column` (length rows()) on the right.
  Matrix with_column(const std::vector<FieldScalar>& column) const;

private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<FieldScalar> data_;
};

/// Whether `column` lies in the span of the matrix columns (exact rank test).
bool in_column_span(const Matrix& m, const std::vector<FieldScalar>& column);

}  // namespace heaps
