#pragma once

#include <optional>
#include <vector>

#include "braidrep/scalar.hpp"

namespace braidrep {

/// Dense matrix over the Gaussian rationals. Row-major, immutable in spirit:
/// operations return fresh values.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols);
  Matrix(int rows, int cols, std::vector<Scalar> entries);

  static Matrix identity(int n);
  /// Single-column matrix from a vector of entries.
  static Matrix column(std::vector<Scalar> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Scalar& at(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
  Scalar& at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }

  Matrix conjugate_transpose() const;
  Scalar trace() const;
  bool is_zero() const;
  /// True iff the matrix equals lambda * I for some scalar lambda.
  bool is_scalar_multiple_of_identity() const;

  Matrix block(int row0, int col0, int rows, int cols) const;
  void set_block(int row0, int col0, const Matrix& b);

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  int rows_, cols_;
  std::vector<Scalar> e_;
};

/// Exact basis of the right nullspace { v : m v = 0 }, via fraction-free
/// (Bareiss) elimination over the Gaussian integers after clearing row
/// denominators. The basis is canonical: each vector has entry 1 at its own
/// free column and 0 at every other free column. Empty iff m is injective.
std::vector<Matrix> kernel_basis(const Matrix& m);

int rank(const Matrix& m);

/// Pivot columns of the echelon form; the corresponding columns of m form a
/// basis of the column space.
std::vector<int> pivot_columns(const Matrix& m);

/// Exact inverse. Throws std::domain_error when singular.
Matrix inverse(const Matrix& m);

/// Solves a x = b exactly (any shapes with a.rows == b.rows). Free variables
/// are set to zero. std::nullopt when inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Stacks matrices with equal column counts on top of each other.
Matrix vstack(const std::vector<Matrix>& parts);

/// Concatenates matrices with equal row counts side by side.
Matrix hstack(const std::vector<Matrix>& parts);

/// m flattened row-major into a (rows*cols) x 1 column.
Matrix vectorize(const Matrix& m);

}  // namespace braidrep
