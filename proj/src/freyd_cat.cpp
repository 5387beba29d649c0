#include "freyd/freyd_cat.hpp"

#include "detail.hpp"
#include "freyd/linear_system.hpp"

namespace freyd {

std::optional<Mor> freyd_morphism(const Obj& source, const Obj& target,
                                  const Mor& datum) {
  if (source.kind() != CategoryDescriptor::Kind::freyd ||
      target.kind() != CategoryDescriptor::Kind::freyd) {
    throw std::invalid_argument("freyd_morphism needs FREYD objects");
  }
  if (!same_object(datum.source(), source.range()) ||
      !same_object(datum.target(), target.range())) {
    throw std::invalid_argument("freyd_morphism datum shape mismatch");
  }
  // Well-defined iff rho_A . datum lifts along rho_B; the lift is the witness.
  const Mor need = compose(source.relation(), datum);
  auto witness = lift(need, target.relation());
  if (!witness) return std::nullopt;
  return Mor::freyd(source, target, datum, *witness);
}

Mor freyd_kernel_lift(const Mor& alpha, const KernelData& kd, const Mor& tau,
                      const Mor& sigma) {
  const Mor composite = compose(tau.datum(), alpha.datum());
  if (!mor_eq(compose(sigma, alpha.target().relation()), composite)) {
    throw std::invalid_argument(
        "freyd_kernel_lift: supplied zero-witness does not certify tau . alpha = 0");
  }
  return detail::freyd_kernel_lift_impl(alpha, kd, tau, sigma);
}

Mor freyd_cokernel_colift(const Mor& alpha, const CokernelData& cd,
                          const Mor& tau, const Mor& sigma) {
  const Mor composite = compose(alpha.datum(), tau.datum());
  if (!mor_eq(compose(sigma, tau.target().relation()), composite)) {
    throw std::invalid_argument(
        "freyd_cokernel_colift: supplied zero-witness does not certify alpha . tau = 0");
  }
  return detail::freyd_cokernel_colift_impl(alpha, cd, tau, sigma);
}

namespace detail {

namespace {

using Kind = CategoryDescriptor::Kind;

void require_freyd(const Mor& m, const char* who) {
  if (m.kind() != Kind::freyd) {
    throw std::invalid_argument(std::string(who) + " expects FREYD morphisms");
  }
}

}  // namespace

CokernelData freyd_cokernel(const Mor& alpha) {
  require_freyd(alpha, "cokernel");
  const Obj& src = alpha.source();
  const Obj& tgt = alpha.target();
  // Cokernel object: (B <- R_B (+) A) with the relation stacking rho_B on
  // top of alpha's datum.
  const Obj summands[] = {tgt.relations_obj(), src.range()};
  DirectSum ds = direct_sum(alpha.datum().descriptor(), summands);
  const Mor comps[] = {tgt.relation(), alpha.datum()};
  const Mor relation = from_direct_sum(ds, comps, tgt.range());
  CokernelData cd;
  cd.obj = Obj::freyd(relation);
  cd.projection = Mor::freyd(tgt, cd.obj, identity_mor(tgt.range()),
                             ds.injections[0]);
  auto impl = std::make_shared<CokernelImplState>();
  impl->ds = std::move(ds);
  cd.impl = std::move(impl);
  return cd;
}

Mor freyd_cokernel_colift_impl(const Mor& alpha, const CokernelData& cd,
                               const Mor& tau,
                               const std::optional<Mor>& sigma_in) {
  require_freyd(alpha, "cokernel_colift");
  std::optional<Mor> sigma = sigma_in;
  if (!sigma) {
    // sigma : A -> R_T with sigma . rho_T = alpha.datum . tau.datum
    const Mor composite = compose(alpha.datum(), tau.datum());
    sigma = lift(composite, tau.target().relation());
    if (!sigma) {
      throw std::invalid_argument("cokernel_colift: alpha . tau != 0");
    }
  }
  const DirectSum& ds = *cd.impl->ds;
  const Mor comps[] = {tau.witness(), *sigma};
  const Mor witness = from_direct_sum(ds, comps, tau.target().relations_obj());
  return Mor::freyd(cd.obj, tau.target(), tau.datum(), witness);
}

KernelData freyd_kernel(const Mor& alpha) {
  require_freyd(alpha, "kernel");
  const Obj& src = alpha.source();
  const Obj& tgt = alpha.target();
  // First weak pullback: R_B x_B A over the cospan rho_B, alpha's datum.
  WeakPullback wp1 = weak_pullback(tgt.relation(), alpha.datum());
  // Second: (R_B x_B A) x_A R_A over pr2 and rho_A.
  WeakPullback wp2 = weak_pullback(wp1.pr2, src.relation());
  KernelData kd;
  kd.obj = Obj::freyd(wp2.pr1);
  kd.embedding = Mor::freyd(kd.obj, src, wp1.pr2, wp2.pr2);
  auto impl = std::make_shared<KernelImplState>();
  impl->wp1 = std::move(wp1);
  impl->wp2 = std::move(wp2);
  kd.impl = std::move(impl);
  return kd;
}

Mor freyd_kernel_lift_impl(const Mor& alpha, const KernelData& kd,
                           const Mor& tau, const std::optional<Mor>& sigma_in) {
  require_freyd(alpha, "kernel_lift");
  std::optional<Mor> sigma = sigma_in;
  if (!sigma) {
    // sigma : T -> R_B with sigma . rho_B = tau.datum . alpha.datum
    const Mor composite = compose(tau.datum(), alpha.datum());
    sigma = lift(composite, alpha.target().relation());
    if (!sigma) {
      throw std::invalid_argument("kernel_lift: tau . alpha != 0");
    }
  }
  const WeakPullback& wp1 = *kd.impl->wp1;
  const WeakPullback& wp2 = *kd.impl->wp2;
  const Mor datum = weak_pullback_lift(wp1, *sigma, tau.datum());
  const Mor witness = weak_pullback_lift(
      wp2, compose(tau.source().relation(), datum), tau.witness());
  return Mor::freyd(tau.source(), kd.obj, datum, witness);
}

std::optional<Mor> freyd_lift(const Mor& alpha, const Mor& gamma) {
  require_freyd(alpha, "lift");
  const Obj& a = alpha.source();
  const Obj& b = alpha.target();
  const Obj& c = gamma.source();
  const DescriptorPtr& inner = alpha.datum().descriptor();
  if (structurally_zero(a.relations_obj()) &&
      structurally_zero(b.relations_obj()) &&
      structurally_zero(c.relations_obj())) {
    // Relation-free objects: the lift equation holds strictly one level down.
    auto x = lift(alpha.datum(), gamma.datum());
    if (!x) return std::nullopt;
    return Mor::freyd(a, c, *x,
                      zero_mor(a.relations_obj(), c.relations_obj()));
  }
  // Unknowns: X : A -> C (datum), Y : R_A -> R_C (witness),
  // Z : A -> R_B (equality witness for X . gamma = alpha).
  LinearSystem sys;
  sys.desc = inner;
  sys.unknown_sources = {a.range(), a.relations_obj(), a.range()};
  sys.unknown_targets = {c.range(), c.relations_obj(), b.relations_obj()};
  sys.eq_sources = {a.relations_obj(), a.range()};
  sys.eq_targets = {c.range(), b.range()};
  sys.left.assign(2, std::vector<std::optional<Mor>>(3));
  sys.right.assign(2, std::vector<std::optional<Mor>>(3));
  // rho_A . X - Y . rho_C = 0
  sys.left[0][0] = a.relation();
  sys.right[0][0] = identity_mor(c.range());
  sys.left[0][1] = identity_mor(a.relations_obj());
  sys.right[0][1] = negate(c.relation());
  sys.rhs.push_back(zero_mor(a.relations_obj(), c.range()));
  // X . gamma - Z . rho_B = alpha
  sys.left[1][0] = identity_mor(a.range());
  sys.right[1][0] = gamma.datum();
  sys.left[1][2] = identity_mor(a.range());
  sys.right[1][2] = negate(b.relation());
  sys.rhs.push_back(alpha.datum());
  auto sol = solve_linear_system(sys);
  if (!sol) return std::nullopt;
  return Mor::freyd(a, c, (*sol)[0], (*sol)[1]);
}

std::optional<Mor> freyd_colift(const Mor& alpha, const Mor& gamma) {
  require_freyd(alpha, "colift");
  const Obj& b = alpha.source();
  const Obj& a = alpha.target();
  const Obj& c = gamma.target();
  const DescriptorPtr& inner = alpha.datum().descriptor();
  if (structurally_zero(a.relations_obj()) &&
      structurally_zero(c.relations_obj())) {
    auto x = colift(alpha.datum(), gamma.datum());
    if (!x) return std::nullopt;
    return Mor::freyd(c, a, *x,
                      zero_mor(c.relations_obj(), a.relations_obj()));
  }
  // Unknowns: X : C -> A (datum), Y : R_C -> R_A (witness),
  // Z : B -> R_A (equality witness for gamma . X = alpha).
  LinearSystem sys;
  sys.desc = inner;
  sys.unknown_sources = {c.range(), c.relations_obj(), b.range()};
  sys.unknown_targets = {a.range(), a.relations_obj(), a.relations_obj()};
  sys.eq_sources = {c.relations_obj(), b.range()};
  sys.eq_targets = {a.range(), a.range()};
  sys.left.assign(2, std::vector<std::optional<Mor>>(3));
  sys.right.assign(2, std::vector<std::optional<Mor>>(3));
  // rho_C . X - Y . rho_A = 0
  sys.left[0][0] = c.relation();
  sys.right[0][0] = identity_mor(a.range());
  sys.left[0][1] = identity_mor(c.relations_obj());
  sys.right[0][1] = negate(a.relation());
  sys.rhs.push_back(zero_mor(c.relations_obj(), a.range()));
  // gamma . X - Z . rho_A = alpha
  sys.left[1][0] = gamma.datum();
  sys.right[1][0] = identity_mor(a.range());
  sys.left[1][2] = identity_mor(b.range());
  sys.right[1][2] = negate(a.relation());
  sys.rhs.push_back(alpha.datum());
  auto sol = solve_linear_system(sys);
  if (!sol) return std::nullopt;
  return Mor::freyd(c, a, (*sol)[0], (*sol)[1]);
}

Mor freyd_lift_along_mono(const Mor& mono, const Mor& tau) {
  require_freyd(mono, "lift_along_mono");
  const Obj& x = mono.source();  // (A <- R_A)
  // Vanishing witness of the kernel embedding: sigma with pr2 = sigma . rho_A.
  const KernelData kd = freyd_kernel(mono);
  const auto sigma = lift(kd.embedding.datum(), x.relation());
  if (!sigma) {
    throw std::invalid_argument("lift_along_mono: morphism is not monic");
  }
  // Witness (tau_RB, tau_A) : T -> R_B (+) A for tau composed with the
  // cokernel projection of the mono being zero.
  const CokernelData cd = freyd_cokernel(mono);
  const auto pair = lift(tau.datum(), cd.obj.relation());
  if (!pair) {
    throw std::invalid_argument(
        "lift_along_mono: test morphism does not vanish on the cokernel");
  }
  const DirectSum& ds = *cd.impl->ds;
  const Mor tau_rb = compose(*pair, ds.projections[0]);
  const Mor tau_a = compose(*pair, ds.projections[1]);
  const Mor rho_t = tau.source().relation();
  const Mor p = sub(tau.witness(), compose(rho_t, tau_rb));
  const Mor q = compose(rho_t, tau_a);
  const Mor m = weak_pullback_lift(*kd.impl->wp1, p, q);
  return Mor::freyd(tau.source(), x, tau_a, compose(m, *sigma));
}

Mor freyd_colift_along_epi(const Mor& epi, const Mor& tau) {
  require_freyd(epi, "colift_along_epi");
  const Obj& y = epi.target();  // (B <- R_B)
  // Vanishing witness of the cokernel projection:
  // (sigma_RB, sigma_A) : B -> R_B (+) A with
  // sigma_RB . rho_B + sigma_A . alpha = id_B.
  const CokernelData cd = freyd_cokernel(epi);
  const auto pair = lift(identity_mor(y.range()), cd.obj.relation());
  if (!pair) {
    throw std::invalid_argument("colift_along_epi: morphism is not epic");
  }
  const DirectSum& ds = *cd.impl->ds;
  const Mor sigma_rb = compose(*pair, ds.projections[0]);
  const Mor sigma_a = compose(*pair, ds.projections[1]);
  // Vanishing witness of kernel embedding composed with tau.
  const KernelData kd = freyd_kernel(epi);
  const auto sigma = lift(compose(kd.embedding.datum(), tau.datum()),
                          tau.target().relation());
  if (!sigma) {
    throw std::invalid_argument(
        "colift_along_epi: test morphism does not vanish on the kernel");
  }
  const Mor rho_b = y.relation();
  const Mor p = sub(identity_mor(y.relations_obj()), compose(rho_b, sigma_rb));
  const Mor q = compose(rho_b, sigma_a);
  const Mor m = weak_pullback_lift(*kd.impl->wp1, p, q);
  return Mor::freyd(y, tau.target(), compose(sigma_a, tau.datum()),
                    compose(m, *sigma));
}

}  // namespace detail
}  // namespace freyd
