#pragma once

#include "freyd/category.hpp"

namespace freyd {

// Retained construction state; consumed by the corresponding lift/colift
// operations so they act on the very objects returned by the construction.

struct WeakKernelImpl {
  std::optional<KernelData> kernel_state;       // FREYD: kernels are weak kernels
  std::optional<WeakCokernel> op_state;         // OP: dual weak cokernel
};

struct WeakCokernelImpl {
  std::optional<CokernelData> cokernel_state;   // FREYD
  std::optional<WeakKernel> op_state;           // OP
};

struct KernelImplState {
  // FREYD case: the two weak pullbacks of the construction.
  std::optional<WeakPullback> wp1;  // R_B x_B A
  std::optional<WeakPullback> wp2;  // (R_B x_B A) x_A R_A
  // OP case: the inner cokernel.
  std::optional<CokernelData> op_inner;
};

struct CokernelImplState {
  // FREYD case: the direct sum R_B (+) A carrying the stacked relation.
  std::optional<DirectSum> ds;
  // OP case: the inner kernel.
  std::optional<KernelData> op_inner;
};

namespace detail {

// rows.cpp
WeakKernel rows_weak_kernel(const Mor& alpha);
Mor rows_weak_kernel_lift(const WeakKernel& wk, const Mor& tau);
WeakCokernel rows_weak_cokernel(const Mor& alpha);
Mor rows_weak_cokernel_colift(const WeakCokernel& wc, const Mor& tau);
std::optional<Mor> rows_lift(const Mor& alpha, const Mor& gamma);
std::optional<Mor> rows_colift(const Mor& alpha, const Mor& gamma);

// freyd_cat.cpp
KernelData freyd_kernel(const Mor& alpha);
Mor freyd_kernel_lift_impl(const Mor& alpha, const KernelData& kd,
                           const Mor& tau, const std::optional<Mor>& sigma);
CokernelData freyd_cokernel(const Mor& alpha);
Mor freyd_cokernel_colift_impl(const Mor& alpha, const CokernelData& cd,
                               const Mor& tau, const std::optional<Mor>& sigma);
std::optional<Mor> freyd_lift(const Mor& alpha, const Mor& gamma);
std::optional<Mor> freyd_colift(const Mor& alpha, const Mor& gamma);
Mor freyd_lift_along_mono(const Mor& mono, const Mor& tau);
Mor freyd_colift_along_epi(const Mor& epi, const Mor& tau);

/// Object whose range and relations are structurally of rank zero; a
/// sufficient (not necessary) zero-object test used for fast paths.
bool structurally_zero(const Obj& a);

}  // namespace detail
}  // namespace freyd
