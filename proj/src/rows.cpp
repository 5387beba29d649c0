#include "freyd/normal_forms.hpp"

#include "detail.hpp"

namespace freyd::detail {

namespace {

Obj rows_obj_like(const Mor& m, int rank) {
  return Obj::rows(m.descriptor(), rank);
}

}  // namespace

WeakKernel rows_weak_kernel(const Mor& alpha) {
  const Matrix syz = row_syzygies(alpha.matrix());
  WeakKernel wk;
  wk.obj = rows_obj_like(alpha, syz.rows());
  wk.embedding = Mor::rows(wk.obj, alpha.source(), syz);
  return wk;
}

Mor rows_weak_kernel_lift(const WeakKernel& wk, const Mor& tau) {
  auto u = solve_left(wk.embedding.matrix(), tau.matrix());
  if (!u) {
    throw std::logic_error("row syzygies failed to generate a syzygy");
  }
  return Mor::rows(tau.source(), wk.obj, std::move(*u));
}

WeakCokernel rows_weak_cokernel(const Mor& alpha) {
  // Column syzygies via transposition; valid over commutative rings.
  const Matrix syz = row_syzygies(alpha.matrix().transposed());
  WeakCokernel wc;
  wc.obj = rows_obj_like(alpha, syz.rows());
  wc.projection = Mor::rows(alpha.target(), wc.obj, syz.transposed());
  return wc;
}

Mor rows_weak_cokernel_colift(const WeakCokernel& wc, const Mor& tau) {
  auto u = solve_left(wc.projection.matrix().transposed(),
                      tau.matrix().transposed());
  if (!u) {
    throw std::logic_error("column syzygies failed to generate a syzygy");
  }
  return Mor::rows(wc.obj, tau.target(), u->transposed());
}

std::optional<Mor> rows_lift(const Mor& alpha, const Mor& gamma) {
  auto x = solve_left(gamma.matrix(), alpha.matrix());
  if (!x) return std::nullopt;
  return Mor::rows(alpha.source(), gamma.source(), std::move(*x));
}

std::optional<Mor> rows_colift(const Mor& alpha, const Mor& gamma) {
  auto xt = solve_left(gamma.matrix().transposed(),
                       alpha.matrix().transposed());
  if (!xt) return std::nullopt;
  return Mor::rows(gamma.target(), alpha.target(), xt->transposed());
}

}  // namespace freyd::detail
