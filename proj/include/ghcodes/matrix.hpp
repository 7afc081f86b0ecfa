#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ghcodes/gf.hpp"

namespace ghcodes {

/// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const FieldElement& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::span<FieldElement> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }
  std::span<const FieldElement> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<FieldElement> a_;
};

/// In-place reduced row echelon form with fixed left-to-right pivot order;
/// zero rows sink to the bottom. Returns the rank.
std::size_t rref_in_place(const FieldCtx& f, Matrix& m);

Matrix rref(const FieldCtx& f, Matrix m);

/// Drops trailing zero rows, keeping the first `rank` rows.
Matrix take_rows(const Matrix& m, std::size_t rank);

/// Basis (as RREF rows) of { v : m v^T = 0 }.
Matrix null_space(const FieldCtx& f, const Matrix& m);

Matrix mat_mul(const FieldCtx& f, const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
bool is_zero_matrix(const Matrix& m);

/// Reduces v against an RREF matrix; true iff v lies in its row space.
bool in_row_space(const FieldCtx& f, const Matrix& rref_m, std::span<const FieldElement> v);

}  // namespace ghcodes
