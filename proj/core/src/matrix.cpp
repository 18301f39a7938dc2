#include "heaps/matrix.hpp"

#include <cassert>

#include "heaps/errors.hpp"

namespace heaps {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols),
      data_(rows * cols, FieldScalar::zero(field)) {}

Matrix Matrix::with_column(const std::vector<FieldScalar>& column) const {
  assert(column.size() == rows_);
  Matrix out(field_, rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
    out.at(r, cols_) = column[r];
  }
  return out;
}

namespace {

// Fraction-free elimination on an integer matrix; exact divisions only.
std::size_t bareiss_rank(std::vector<mpz_class> a, std::size_t rows, std::size_t cols) {
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(a[pivot * cols + j], a[rank * cols + j]);
    const mpz_class piv = a[rank * cols + col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const mpz_class factor = a[i * cols + col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class t = piv * a[i * cols + j] - factor * a[rank * cols + j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i * cols + j] = std::move(t);
      }
      a[i * cols + col] = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

std::size_t gf_rank(std::vector<std::uint64_t> a, std::size_t rows, std::size_t cols,
                    std::uint64_t p) {
  auto inv = [p](std::uint64_t x) {
    std::uint64_t result = 1, base = x % p, exp = p - 2;
    while (exp) {
      if (exp & 1) result = (result * base) % p;
      base = (base * base) % p;
      exp >>= 1;
    }
    return result;
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(a[pivot * cols + j], a[rank * cols + j]);
    const std::uint64_t scale = inv(a[rank * cols + col]);
    for (std::size_t j = col; j < cols; ++j)
      a[rank * cols + j] = (a[rank * cols + j] * scale) % p;
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const std::uint64_t factor = a[i * cols + col];
      if (factor == 0) continue;
      for (std::size_t j = col; j < cols; ++j)
        a[i * cols + j] = (a[i * cols + j] + (p - factor) * a[rank * cols + j]) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t Matrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  if (field_.is_rationals()) {
    // Clear denominators row by row (row scaling preserves rank).
    std::vector<mpz_class> a(rows_ * cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      mpz_class lcm = 1;
      for (std::size_t c = 0; c < cols_; ++c)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), at(r, c).rational().get_den().get_mpz_t());
      for (std::size_t c = 0; c < cols_; ++c) {
        mpq_class scaled = at(r, c).rational() * mpq_class(lcm);
        scaled.canonicalize();
        assert(scaled.get_den() == 1);
        a[r * cols_ + c] = scaled.get_num();
      }
    }
    return bareiss_rank(std::move(a), rows_, cols_);
  }
  std::vector<std::uint64_t> a(rows_ * cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) a[r * cols_ + c] = at(r, c).residue();
  return gf_rank(std::move(a), rows_, cols_, field_.modulus());
}

bool in_column_span(const Matrix& m, const std::vector<FieldScalar>& column) {
  return m.with_column(column).rank() == m.rank();
}

}  // namespace heaps
