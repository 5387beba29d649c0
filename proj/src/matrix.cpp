#include "freyd/matrix.hpp"

#include <sstream>

namespace freyd {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace

Matrix::Matrix(RingId ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  require(rows >= 0 && cols >= 0, "matrix dimensions must be nonnegative");
  entries_.assign(static_cast<std::size_t>(rows) * cols,
                  RingElement::zero(ring_));
}

Matrix Matrix::identity(const RingId& ring, int n) {
  Matrix m(ring, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = RingElement::one(ring);
  return m;
}

Matrix Matrix::from_int_rows(
    const RingId& ring,
    std::initializer_list<std::initializer_list<long>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  Matrix m(ring, r, c);
  int i = 0;
  for (const auto& row : rows) {
    require(static_cast<int>(row.size()) == c, "ragged rows");
    int j = 0;
    for (long v : row) m(i, j++) = RingElement(ring, v);
    ++i;
  }
  return m;
}

Matrix Matrix::diagonal(const RingId& ring, const std::vector<mpz_class>& d) {
  const int n = static_cast<int>(d.size());
  Matrix m(ring, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = RingElement(ring, d[i]);
  return m;
}

Matrix Matrix::operator*(const Matrix& other) const {
  require(ring_ == other.ring_, "ring mismatch in matrix product");
  require(cols_ == other.rows_, "dimension mismatch in matrix product");
  Matrix out(ring_, rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const RingElement& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < other.cols_; ++j) {
        out(i, j) = out(i, j) + a * other(k, j);
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
  require(ring_ == other.ring_, "ring mismatch in matrix sum");
  require(rows_ == other.rows_ && cols_ == other.cols_,
          "dimension mismatch in matrix sum");
  Matrix out = *this;
  for (std::size_t t = 0; t < entries_.size(); ++t) {
    out.entries_[t] = entries_[t] + other.entries_[t];
  }
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const { return *this + (-other); }

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

Matrix Matrix::operator*(const RingElement& scalar) const {
  Matrix out = *this;
  for (auto& e : out.entries_) e = e * scalar;
  return out;
}

bool Matrix::operator==(const Matrix& other) const {
  if (ring_ != other.ring_ || rows_ != other.rows_ || cols_ != other.cols_) {
    return false;
  }
  return entries_ == other.entries_;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

Matrix Matrix::transposed() const {
  Matrix out(ring_, cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

Matrix Matrix::submatrix(int row0, int col0, int nrows, int ncols) const {
  require(row0 >= 0 && col0 >= 0 && row0 + nrows <= rows_ &&
              col0 + ncols <= cols_,
          "submatrix out of range");
  Matrix out(ring_, nrows, ncols);
  for (int i = 0; i < nrows; ++i) {
    for (int j = 0; j < ncols; ++j) out(i, j) = (*this)(row0 + i, col0 + j);
  }
  return out;
}

void Matrix::set_submatrix(int row0, int col0, const Matrix& block) {
  require(ring_ == block.ring_, "ring mismatch in set_submatrix");
  require(row0 + block.rows_ <= rows_ && col0 + block.cols_ <= cols_,
          "set_submatrix out of range");
  for (int i = 0; i < block.rows_; ++i) {
    for (int j = 0; j < block.cols_; ++j) {
      (*this)(row0 + i, col0 + j) = block(i, j);
    }
  }
}

void Matrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void Matrix::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void Matrix::add_row_multiple(int i, int j, const RingElement& c) {
  for (int k = 0; k < cols_; ++k) {
    (*this)(i, k) = (*this)(i, k) + c * (*this)(j, k);
  }
}

void Matrix::add_col_multiple(int i, int j, const RingElement& c) {
  for (int k = 0; k < rows_; ++k) {
    (*this)(k, i) = (*this)(k, i) + c * (*this)(k, j);
  }
}

void Matrix::scale_row(int i, const RingElement& c) {
  for (int k = 0; k < cols_; ++k) (*this)(i, k) = (*this)(i, k) * c;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) {
      os << (j ? " " : "") << (*this)(i, j).to_string();
    }
  }
  os << "] (" << rows_ << "x" << cols_ << " over " << ring_.to_string() << ")";
  return os.str();
}

Matrix hstack(const Matrix& left, const Matrix& right) {
  require(left.ring() == right.ring(), "ring mismatch in hstack");
  require(left.rows() == right.rows(), "row mismatch in hstack");
  Matrix out(left.ring(), left.rows(), left.cols() + right.cols());
  out.set_submatrix(0, 0, left);
  out.set_submatrix(0, left.cols(), right);
  return out;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  require(top.ring() == bottom.ring(), "ring mismatch in vstack");
  require(top.cols() == bottom.cols(), "column mismatch in vstack");
  Matrix out(top.ring(), top.rows() + bottom.rows(), top.cols());
  out.set_submatrix(0, 0, top);
  out.set_submatrix(top.rows(), 0, bottom);
  return out;
}

Matrix hstack(std::span<const Matrix> blocks, const RingId& ring, int rows) {
  int cols = 0;
  for (const auto& b : blocks) cols += b.cols();
  Matrix out(ring, rows, cols);
  int at = 0;
  for (const auto& b : blocks) {
    require(b.rows() == rows, "row mismatch in hstack");
    out.set_submatrix(0, at, b);
    at += b.cols();
  }
  return out;
}

Matrix vstack(std::span<const Matrix> blocks, const RingId& ring, int cols) {
  int rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  Matrix out(ring, rows, cols);
  int at = 0;
  for (const auto& b : blocks) {
    require(b.cols() == cols, "column mismatch in vstack");
    out.set_submatrix(at, 0, b);
    at += b.rows();
  }
  return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  require(a.ring() == b.ring(), "ring mismatch in kronecker");
  Matrix out(a.ring(), a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k) {
        for (int l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

Matrix lift_to_integers(const Matrix& m) {
  require(m.ring().kind() != RingKind::rationals,
          "cannot lift rational matrix to Z");
  Matrix out(RingId::integers(), m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      out(i, j) = RingElement(RingId::integers(), m(i, j).num());
    }
  }
  return out;
}

Matrix reduce_mod(const Matrix& m, const mpz_class& n) {
  require(m.ring().kind() == RingKind::integers, "reduce_mod expects Z");
  const RingId ring = RingId::residues(n);
  Matrix out(ring, m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      out(i, j) = RingElement(ring, m(i, j).num());
    }
  }
  return out;
}

}  // namespace freyd
