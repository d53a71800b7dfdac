#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hlx/field.hpp"

namespace hlx {

using Vec = std::vector<FieldElement>;

Vec zero_vec(Field f, size_t n);
Vec unit_vec(Field f, size_t n, size_t i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const FieldElement& c, const Vec& v);
Vec neg(const Vec& v);
bool is_zero_vec(const Vec& v);

/// Dense exact matrix; all entries share one field, enforced at construction.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, size_t rows, size_t cols);
  static Matrix identity(Field f, size_t n);
  static Matrix from_rows(Field f, size_t cols, const std::vector<Vec>& rows);
  static Matrix from_cols(Field f, size_t rows, const std::vector<Vec>& cols);

  Field field() const { return field_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  FieldElement& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
  const FieldElement& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }
  void set(size_t i, size_t j, FieldElement v);

  Vec row(size_t i) const;
  Vec col(size_t j) const;
  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Vec apply(const Vec& x) const;  // column-vector convention: y = A x
  bool operator==(const Matrix& o) const;
  bool is_zero() const;
  bool is_identity() const;

  Matrix hstack(const Matrix& o) const;
  Matrix vstack(const Matrix& o) const;
  Matrix submatrix(size_t r0, size_t c0, size_t nrows, size_t ncols) const;

  /// Lexicographic row-major comparison; canonical tie-breaking only.
  int cmp(const Matrix& o) const;

 private:
  Field field_;
  size_t rows_ = 0, cols_ = 0;
  std::vector<FieldElement> e_;
};

struct RrefResult {
  Matrix mat;
  std::vector<size_t> pivots;
};

/// Unique reduced row-echelon form with its pivot columns.
RrefResult rref(const Matrix& m);
size_t rank(const Matrix& m);

/// Rows form the canonical basis of the right null space.
Matrix kernel_basis(const Matrix& m);

/// One solution of a x = b with free variables set to zero, or nothing.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

/// Solves a X = B column by column (free variables zero), or nothing.
std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);

}  // namespace hlx
