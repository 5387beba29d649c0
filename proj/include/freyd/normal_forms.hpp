#pragma once

#include <optional>

#include "freyd/matrix.hpp"

namespace freyd {

struct HermiteResult {
  Matrix h;  // row Hermite normal form, zero rows last
  Matrix u;  // unimodular transform with u * m == h
  int rank = 0;
};

/// Row-style Hermite normal form over Z: pivots positive, entries above each
/// pivot reduced into [0, pivot), pivot columns strictly increasing, zero
/// rows last.  The result is the canonical basis of the row lattice.
HermiteResult hermite_normal_form(const Matrix& m);

struct SmithResult {
  Matrix s;  // diagonal, d_i >= 0, d_i | d_{i+1}
  Matrix u;  // unimodular
  Matrix v;  // unimodular, u * m * v == s
};

/// Smith normal form over Z.
SmithResult smith_normal_form(const Matrix& m);

/// Row echelon form with transform over a field (Q or Z/p); pivots are 1 and
/// pivot columns are cleared above and below.
HermiteResult field_echelon(const Matrix& m);

/// Decides the left-sided linear system X * A = B over the shared ring and
/// returns a particular solution when one exists.  Absence of a value is a
/// decision that no solution exists.
std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b);

/// A matrix L with L * A = 0 such that every T with T * A = 0 factors as
/// T = C * L (L generates the row syzygies).  Generators are normal-form
/// reduced.
Matrix row_syzygies(const Matrix& a);

}  // namespace freyd
