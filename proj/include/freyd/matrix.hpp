#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "freyd/ring.hpp"

namespace freyd {

/// Dense row-major matrix over one of the supported rings.  Zero row or
/// column counts are legal; a 0xn matrix is the unique map out of the rank-0
/// module and behaves as expected under all operations.
class Matrix {
 public:
  Matrix(RingId ring, int rows, int cols);

  static Matrix zero(const RingId& ring, int rows, int cols) {
    return Matrix(ring, rows, cols);
  }
  static Matrix identity(const RingId& ring, int n);
  /// Builds a matrix from integer literals (test and CLI convenience).
  static Matrix from_int_rows(const RingId& ring,
                              std::initializer_list<std::initializer_list<long>> rows);
  static Matrix diagonal(const RingId& ring, const std::vector<mpz_class>& d);

  const RingId& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const RingElement& operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }
  RingElement& operator()(int i, int j) {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }

  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator-() const;
  Matrix operator*(const RingElement& scalar) const;
  bool operator==(const Matrix& other) const;
  bool operator!=(const Matrix& other) const { return !(*this == other); }

  bool is_zero() const;
  bool is_identity() const;

  Matrix transposed() const;
  Matrix submatrix(int row0, int col0, int nrows, int ncols) const;
  void set_submatrix(int row0, int col0, const Matrix& block);

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  /// row_i += c * row_j
  void add_row_multiple(int i, int j, const RingElement& c);
  void add_col_multiple(int i, int j, const RingElement& c);
  void scale_row(int i, const RingElement& c);

  std::string to_string() const;

 private:
  RingId ring_;
  int rows_;
  int cols_;
  std::vector<RingElement> entries_;
};

Matrix hstack(const Matrix& left, const Matrix& right);
Matrix vstack(const Matrix& top, const Matrix& bottom);
Matrix hstack(std::span<const Matrix> blocks, const RingId& ring, int rows);
Matrix vstack(std::span<const Matrix> blocks, const RingId& ring, int cols);

/// Kronecker product with row-major index pairing (i,k) -> i*b.rows()+k.
Matrix kronecker(const Matrix& a, const Matrix& b);

/// Interprets entries of an integer or residue matrix over Z (residues by
/// their canonical representatives).
Matrix lift_to_integers(const Matrix& m);
/// Entrywise reduction of an integer matrix modulo n.
Matrix reduce_mod(const Matrix& m, const mpz_class& n);

}  // namespace freyd
