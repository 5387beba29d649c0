#include "freyd/normal_forms.hpp"

#include <tuple>

namespace freyd {

namespace {

const RingId kZ = RingId::integers();

// Row combination sending (H(i,col), H(r,col)) to (gcd, 0) while keeping the
// transform unimodular.  Applied to H and U in lockstep.
void gcd_row_combine(Matrix& h, Matrix& u, int i, int r, int col) {
  const mpz_class a = h(i, col).num();
  const mpz_class b = h(r, col).num();
  if (b == 0) return;
  if (a == 0) {
    h.swap_rows(i, r);
    u.swap_rows(i, r);
    return;
  }
  if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
    const RingElement q(kZ, mpz_class(-b / a));
    h.add_row_multiple(r, i, q);
    u.add_row_multiple(r, i, q);
    return;
  }
  mpz_class g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  const mpz_class af = a / g, bf = b / g;
  for (Matrix* m : {&h, &u}) {
    Matrix& mm = *m;
    for (int c = 0; c < mm.cols(); ++c) {
      const mpz_class x = mm(i, c).num();
      const mpz_class y = mm(r, c).num();
      mm(i, c) = RingElement(kZ, s * x + t * y);
      mm(r, c) = RingElement(kZ, af * y - bf * x);
    }
  }
}

void gcd_col_combine(Matrix& s_mat, Matrix& v, int j, int c, int row) {
  const mpz_class a = s_mat(row, j).num();
  const mpz_class b = s_mat(row, c).num();
  if (b == 0) return;
  if (a == 0) {
    s_mat.swap_cols(j, c);
    v.swap_cols(j, c);
    return;
  }
  if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
    const RingElement q(kZ, mpz_class(-b / a));
    s_mat.add_col_multiple(c, j, q);
    v.add_col_multiple(c, j, q);
    return;
  }
  mpz_class g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  const mpz_class af = a / g, bf = b / g;
  for (Matrix* m : {&s_mat, &v}) {
    Matrix& mm = *m;
    for (int r = 0; r < mm.rows(); ++r) {
      const mpz_class x = mm(r, j).num();
      const mpz_class y = mm(r, c).num();
      mm(r, j) = RingElement(kZ, s * x + t * y);
      mm(r, c) = RingElement(kZ, af * y - bf * x);
    }
  }
}

// Clears row and column t of S outside the diagonal position, leaving the
// gcd of the affected entries at (t, t).
void snf_clear_position(Matrix& s, Matrix& u, Matrix& v, int t) {
  for (;;) {
    bool dirty = false;
    for (int r = 0; r < s.rows(); ++r) {
      if (r != t && !s(r, t).is_zero()) {
        gcd_row_combine(s, u, t, r, t);
        dirty = true;
      }
    }
    for (int c = 0; c < s.cols(); ++c) {
      if (c != t && !s(t, c).is_zero()) {
        gcd_col_combine(s, v, t, c, t);
        dirty = true;
      }
    }
    if (!dirty) return;
  }
}

void solve_row_against_echelon(const Matrix& h, const Matrix& u,
                               const std::vector<std::pair<int, int>>& pivots,
                               const Matrix& b, int row, bool integral,
                               Matrix* out, bool* ok) {
  const RingId& ring = h.ring();
  std::vector<RingElement> residual;
  residual.reserve(b.cols());
  for (int c = 0; c < b.cols(); ++c) residual.push_back(b(row, c));
  Matrix y(ring, 1, h.rows());
  for (const auto& [pr, pc] : pivots) {
    const RingElement& piv = h(pr, pc);
    if (residual[pc].is_zero()) continue;
    if (integral && !residual[pc].divisible_by(piv)) {
      *ok = false;
      return;
    }
    const RingElement coef = residual[pc].exact_div(piv);
    y(0, pr) = coef;
    for (int c = pc; c < b.cols(); ++c) {
      residual[c] = residual[c] - coef * h(pr, c);
    }
  }
  for (const auto& e : residual) {
    if (!e.is_zero()) {
      *ok = false;
      return;
    }
  }
  const Matrix x = y * u;
  for (int c = 0; c < x.cols(); ++c) (*out)(row, c) = x(0, c);
}

std::vector<std::pair<int, int>> pivot_positions(const Matrix& h, int rank) {
  std::vector<std::pair<int, int>> pivots;
  for (int r = 0; r < rank; ++r) {
    for (int c = 0; c < h.cols(); ++c) {
      if (!h(r, c).is_zero()) {
        pivots.emplace_back(r, c);
        break;
      }
    }
  }
  return pivots;
}

}  // namespace

HermiteResult hermite_normal_form(const Matrix& m) {
  if (m.ring().kind() != RingKind::integers) {
    throw std::invalid_argument("hermite_normal_form expects a matrix over Z");
  }
  Matrix h = m;
  Matrix u = Matrix::identity(kZ, m.rows());
  int pivot_row = 0;
  for (int col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    int first = -1;
    for (int r = pivot_row; r < h.rows(); ++r) {
      if (!h(r, col).is_zero()) {
        first = r;
        break;
      }
    }
    if (first < 0) continue;
    h.swap_rows(pivot_row, first);
    u.swap_rows(pivot_row, first);
    for (int r = pivot_row + 1; r < h.rows(); ++r) {
      gcd_row_combine(h, u, pivot_row, r, col);
    }
    if (h(pivot_row, col).num() < 0) {
      h.scale_row(pivot_row, RingElement(kZ, -1));
      u.scale_row(pivot_row, RingElement(kZ, -1));
    }
    const mpz_class& piv = h(pivot_row, col).num();
    for (int r = 0; r < pivot_row; ++r) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), h(r, col).num().get_mpz_t(), piv.get_mpz_t());
      if (q != 0) {
        const RingElement c(kZ, mpz_class(-q));
        h.add_row_multiple(r, pivot_row, c);
        u.add_row_multiple(r, pivot_row, c);
      }
    }
    ++pivot_row;
  }
  return HermiteResult{std::move(h), std::move(u), pivot_row};
}

HermiteResult field_echelon(const Matrix& m) {
  if (!m.ring().is_field()) {
    throw std::invalid_argument("field_echelon expects a field");
  }
  Matrix h = m;
  Matrix u = Matrix::identity(m.ring(), m.rows());
  int pivot_row = 0;
  for (int col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    int first = -1;
    for (int r = pivot_row; r < h.rows(); ++r) {
      if (!h(r, col).is_zero()) {
        first = r;
        break;
      }
    }
    if (first < 0) continue;
    h.swap_rows(pivot_row, first);
    u.swap_rows(pivot_row, first);
    const RingElement inv =
        RingElement::one(m.ring()).exact_div(h(pivot_row, col));
    h.scale_row(pivot_row, inv);
    u.scale_row(pivot_row, inv);
    for (int r = 0; r < h.rows(); ++r) {
      if (r == pivot_row || h(r, col).is_zero()) continue;
      const RingElement c = -h(r, col);
      h.add_row_multiple(r, pivot_row, c);
      u.add_row_multiple(r, pivot_row, c);
    }
    ++pivot_row;
  }
  return HermiteResult{std::move(h), std::move(u), pivot_row};
}

SmithResult smith_normal_form(const Matrix& m) {
  if (m.ring().kind() != RingKind::integers) {
    throw std::invalid_argument("smith_normal_form expects a matrix over Z");
  }
  Matrix s = m;
  Matrix u = Matrix::identity(kZ, m.rows());
  Matrix v = Matrix::identity(kZ, m.cols());
  const int k = std::min(m.rows(), m.cols());
  for (int t = 0; t < k; ++t) {
    int pi = -1, pj = -1;
    for (int i = t; i < s.rows(); ++i) {
      for (int j = t; j < s.cols(); ++j) {
        if (s(i, j).is_zero()) continue;
        if (pi < 0 || cmp(abs(s(i, j).num()), abs(s(pi, pj).num())) < 0) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;
    s.swap_rows(t, pi);
    u.swap_rows(t, pi);
    s.swap_cols(t, pj);
    v.swap_cols(t, pj);
    snf_clear_position(s, u, v, t);
  }
  for (int t = 0; t < k; ++t) {
    if (s(t, t).num() < 0) {
      s.scale_row(t, RingElement(kZ, -1));
      u.scale_row(t, RingElement(kZ, -1));
    }
  }
  // Enforce the divisibility chain d_t | d_{t+1}; zeros sink to the end.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int t = 0; t + 1 < k; ++t) {
      const mpz_class a = s(t, t).num();
      const mpz_class b = s(t + 1, t + 1).num();
      if (a == 0 && b != 0) {
        s.swap_rows(t, t + 1);
        u.swap_rows(t, t + 1);
        s.swap_cols(t, t + 1);
        v.swap_cols(t, t + 1);
        changed = true;
        continue;
      }
      if (a != 0 && b != 0 && !mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
        const RingElement one = RingElement::one(kZ);
        s.add_row_multiple(t, t + 1, one);
        u.add_row_multiple(t, t + 1, one);
        snf_clear_position(s, u, v, t);
        if (s(t, t).num() < 0) {
          s.scale_row(t, RingElement(kZ, -1));
          u.scale_row(t, RingElement(kZ, -1));
        }
        if (s(t + 1, t + 1).num() < 0) {
          s.scale_row(t + 1, RingElement(kZ, -1));
          u.scale_row(t + 1, RingElement(kZ, -1));
        }
        changed = true;
      }
    }
  }
  return SmithResult{std::move(s), std::move(u), std::move(v)};
}

std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b) {
  if (a.ring() != b.ring()) {
    throw std::invalid_argument("solve_left: ring mismatch");
  }
  if (a.cols() != b.cols()) {
    throw std::invalid_argument("solve_left: column mismatch");
  }
  switch (a.ring().kind()) {
    case RingKind::residues: {
      // Lift X*A = B (mod n) to [X K] * [A; n*I] = B over Z.
      const mpz_class& n = a.ring().modulus();
      const Matrix az = lift_to_integers(a);
      const Matrix stacked =
          vstack(az, Matrix::identity(kZ, a.cols()) * RingElement(kZ, n));
      auto lifted = solve_left(stacked, lift_to_integers(b));
      if (!lifted) return std::nullopt;
      return reduce_mod(lifted->submatrix(0, 0, b.rows(), a.rows()), n);
    }
    case RingKind::integers:
    case RingKind::rationals: {
      const bool integral = a.ring().kind() == RingKind::integers;
      const HermiteResult he =
          integral ? hermite_normal_form(a) : field_echelon(a);
      const auto pivots = pivot_positions(he.h, he.rank);
      Matrix x(a.ring(), b.rows(), a.rows());
      bool ok = true;
      for (int r = 0; r < b.rows() && ok; ++r) {
        solve_row_against_echelon(he.h, he.u, pivots, b, r, integral, &x, &ok);
      }
      if (!ok) return std::nullopt;
      return x;
    }
  }
  throw std::logic_error("unreachable ring kind");
}

Matrix row_syzygies(const Matrix& a) {
  switch (a.ring().kind()) {
    case RingKind::residues: {
      const mpz_class& n = a.ring().modulus();
      const Matrix az = lift_to_integers(a);
      const Matrix stacked =
          vstack(az, Matrix::identity(kZ, a.cols()) * RingElement(kZ, n));
      const Matrix lifted = row_syzygies(stacked);
      const Matrix projected =
          reduce_mod(lifted.submatrix(0, 0, lifted.rows(), a.rows()), n);
      int nonzero = 0;
      for (int r = 0; r < projected.rows(); ++r) {
        if (!projected.submatrix(r, 0, 1, projected.cols()).is_zero()) {
          ++nonzero;
        }
      }
      Matrix out(a.ring(), nonzero, a.rows());
      int at = 0;
      for (int r = 0; r < projected.rows(); ++r) {
        const Matrix row = projected.submatrix(r, 0, 1, projected.cols());
        if (!row.is_zero()) out.set_submatrix(at++, 0, row);
      }
      return out;
    }
    case RingKind::integers:
    case RingKind::rationals: {
      const bool integral = a.ring().kind() == RingKind::integers;
      const HermiteResult he =
          integral ? hermite_normal_form(a) : field_echelon(a);
      const Matrix raw =
          he.u.submatrix(he.rank, 0, a.rows() - he.rank, a.rows());
      if (raw.rows() == 0) return raw;
      const HermiteResult norm =
          integral ? hermite_normal_form(raw) : field_echelon(raw);
      return norm.h.submatrix(0, 0, norm.rank, raw.cols());
    }
  }
  throw std::logic_error("unreachable ring kind");
}

}  // namespace freyd
