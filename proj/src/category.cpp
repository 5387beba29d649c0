#include "freyd/category.hpp"

#include <sstream>

#include "detail.hpp"
#include "freyd/normal_forms.hpp"

namespace freyd {

namespace {

using Kind = CategoryDescriptor::Kind;

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace

// ---------------------------------------------------------------------------
// CategoryDescriptor

DescriptorPtr CategoryDescriptor::rows(const RingId& ring) {
  return DescriptorPtr(new CategoryDescriptor(Kind::rows, ring, nullptr));
}

DescriptorPtr CategoryDescriptor::freyd(DescriptorPtr inner) {
  require(inner != nullptr, "null inner descriptor");
  return DescriptorPtr(new CategoryDescriptor(Kind::freyd, inner->base_ring(),
                                              std::move(inner)));
}

DescriptorPtr CategoryDescriptor::op(DescriptorPtr inner) {
  require(inner != nullptr, "null inner descriptor");
  return DescriptorPtr(
      new CategoryDescriptor(Kind::op, inner->base_ring(), std::move(inner)));
}

const RingId& CategoryDescriptor::ring() const {
  require(kind_ == Kind::rows, "ring() on non-ROWS descriptor");
  return ring_;
}

const DescriptorPtr& CategoryDescriptor::inner() const {
  require(kind_ != Kind::rows, "inner() on ROWS descriptor");
  return inner_;
}

const RingId& CategoryDescriptor::base_ring() const { return ring_; }

namespace {

bool weak_kernels(const CategoryDescriptor& d);
bool weak_cokernels(const CategoryDescriptor& d);
bool decidable_lifts(const CategoryDescriptor& d);
bool decidable_colifts(const CategoryDescriptor& d);

bool weak_kernels(const CategoryDescriptor& d) {
  switch (d.kind()) {
    case Kind::rows:
      return true;  // coherent: syzygies are computable for Z, Q, Z/n
    case Kind::freyd:
      return weak_kernels(*d.inner());  // then abelian, kernels serve
    case Kind::op:
      return weak_cokernels(*d.inner());
  }
  return false;
}

bool weak_cokernels(const CategoryDescriptor& d) {
  switch (d.kind()) {
    case Kind::rows:
      return true;  // commutative: transpose reduction
    case Kind::freyd:
      return true;  // cokernels always exist
    case Kind::op:
      return weak_kernels(*d.inner());
  }
  return false;
}

bool decidable_lifts(const CategoryDescriptor& d) {
  switch (d.kind()) {
    case Kind::rows:
      return true;
    case Kind::freyd:
      return decidable_lifts(*d.inner());
    case Kind::op:
      return decidable_colifts(*d.inner());
  }
  return false;
}

bool decidable_colifts(const CategoryDescriptor& d) {
  switch (d.kind()) {
    case Kind::rows:
      return true;  // commutative: transpose reduction
    case Kind::freyd:
      return decidable_lifts(*d.inner());
    case Kind::op:
      return decidable_lifts(*d.inner());
  }
  return false;
}

}  // namespace

bool CategoryDescriptor::has_weak_kernels() const { return weak_kernels(*this); }
bool CategoryDescriptor::has_decidable_lifts() const {
  return decidable_lifts(*this);
}
bool CategoryDescriptor::is_abelian() const {
  switch (kind_) {
    case Kind::rows:
      return false;
    case Kind::freyd:
      return inner_->has_weak_kernels();
    case Kind::op:
      return inner_->is_abelian();
  }
  return false;
}

std::string CategoryDescriptor::to_string() const {
  switch (kind_) {
    case Kind::rows:
      return "ROWS(" + ring_.to_string() + ")";
    case Kind::freyd:
      return "FREYD(" + inner_->to_string() + ")";
    case Kind::op:
      return "OP(" + inner_->to_string() + ")";
  }
  return "?";
}

bool same_descriptor(const CategoryDescriptor& a, const CategoryDescriptor& b) {
  if (&a == &b) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == Kind::rows) return a.ring() == b.ring();
  return same_descriptor(*a.inner(), *b.inner());
}

// ---------------------------------------------------------------------------
// Obj

Obj Obj::rows(const RingId& ring, int rank) {
  return Obj::rows(CategoryDescriptor::rows(ring), rank);
}

Obj Obj::rows(DescriptorPtr desc, int rank) {
  require(desc->kind() == Kind::rows, "rows object needs ROWS descriptor");
  require(rank >= 0, "negative rank");
  Obj o;
  o.desc_ = std::move(desc);
  o.rank_ = rank;
  return o;
}

Obj Obj::freyd(const Mor& relation) {
  Obj o;
  o.desc_ = CategoryDescriptor::freyd(relation.descriptor());
  o.relation_ = std::make_shared<Mor>(relation);
  return o;
}

Obj Obj::op(const Obj& inner) {
  Obj o;
  o.desc_ = CategoryDescriptor::op(inner.descriptor());
  o.inner_ = std::make_shared<Obj>(inner);
  return o;
}

CategoryDescriptor::Kind Obj::kind() const { return desc_->kind(); }

int Obj::rank() const {
  require(kind() == Kind::rows, "rank() on non-ROWS object");
  return rank_;
}

const Mor& Obj::relation() const {
  require(kind() == Kind::freyd, "relation() on non-FREYD object");
  return *relation_;
}

Obj Obj::range() const { return relation().target(); }
Obj Obj::relations_obj() const { return relation().source(); }

const Obj& Obj::op_inner() const {
  require(kind() == Kind::op, "op_inner() on non-OP object");
  return *inner_;
}

bool same_object(const Obj& a, const Obj& b) {
  if (!same_descriptor(a.descriptor(), b.descriptor())) return false;
  switch (a.kind()) {
    case Kind::rows:
      return a.rank() == b.rank();
    case Kind::freyd:
      return same_object(a.range(), b.range()) &&
             same_object(a.relations_obj(), b.relations_obj()) &&
             same_payload(a.relation(), b.relation());
    case Kind::op:
      return same_object(a.op_inner(), b.op_inner());
  }
  return false;
}

// ---------------------------------------------------------------------------
// Mor

Mor Mor::rows(const Obj& source, const Obj& target, Matrix matrix) {
  require(same_descriptor(source.descriptor(), target.descriptor()),
          "rows morphism across descriptors");
  require(source.kind() == Kind::rows, "rows morphism needs ROWS objects");
  require(matrix.rows() == source.rank() && matrix.cols() == target.rank(),
          "matrix shape does not match source/target ranks");
  require(matrix.ring() == source.descriptor()->ring(),
          "matrix ring does not match descriptor ring");
  Mor m;
  m.desc_ = source.descriptor();
  m.source_ = std::make_shared<Obj>(source);
  m.target_ = std::make_shared<Obj>(target);
  m.matrix_ = std::make_shared<Matrix>(std::move(matrix));
  return m;
}

Mor Mor::freyd(const Obj& source, const Obj& target, const Mor& datum,
               const Mor& witness) {
  require(source.kind() == Kind::freyd && target.kind() == Kind::freyd,
          "freyd morphism needs FREYD objects");
  require(same_object(datum.source(), source.range()) &&
              same_object(datum.target(), target.range()),
          "freyd datum shape mismatch");
  require(same_object(witness.source(), source.relations_obj()) &&
              same_object(witness.target(), target.relations_obj()),
          "freyd witness shape mismatch");
  Mor m;
  m.desc_ = source.descriptor();
  m.source_ = std::make_shared<Obj>(source);
  m.target_ = std::make_shared<Obj>(target);
  m.datum_ = std::make_shared<Mor>(datum);
  m.witness_ = std::make_shared<Mor>(witness);
  return m;
}

Mor Mor::op(const Obj& source, const Obj& target, const Mor& inner) {
  require(source.kind() == Kind::op && target.kind() == Kind::op,
          "op morphism needs OP objects");
  require(same_object(inner.source(), target.op_inner()) &&
              same_object(inner.target(), source.op_inner()),
          "op inner morphism must run target -> source");
  Mor m;
  m.desc_ = source.descriptor();
  m.source_ = std::make_shared<Obj>(source);
  m.target_ = std::make_shared<Obj>(target);
  m.inner_ = std::make_shared<Mor>(inner);
  return m;
}

CategoryDescriptor::Kind Mor::kind() const { return desc_->kind(); }

const Matrix& Mor::matrix() const {
  require(kind() == Kind::rows, "matrix() on non-ROWS morphism");
  return *matrix_;
}

const Mor& Mor::datum() const {
  require(kind() == Kind::freyd, "datum() on non-FREYD morphism");
  return *datum_;
}

const Mor& Mor::witness() const {
  require(kind() == Kind::freyd, "witness() on non-FREYD morphism");
  return *witness_;
}

const Mor& Mor::op_inner() const {
  require(kind() == Kind::op, "op_inner() on non-OP morphism");
  return *inner_;
}

bool same_payload(const Mor& a, const Mor& b) {
  if (!same_descriptor(a.descriptor(), b.descriptor())) return false;
  switch (a.kind()) {
    case Kind::rows:
      return a.matrix() == b.matrix();
    case Kind::freyd:
      return same_payload(a.datum(), b.datum());
    case Kind::op:
      return same_payload(a.op_inner(), b.op_inner());
  }
  return false;
}

namespace detail {

bool structurally_zero(const Obj& a) {
  switch (a.kind()) {
    case Kind::rows:
      return a.rank() == 0;
    case Kind::freyd:
      return structurally_zero(a.range()) &&
             structurally_zero(a.relations_obj());
    case Kind::op:
      return structurally_zero(a.op_inner());
  }
  return false;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Additive structure

Mor compose(const Mor& f, const Mor& g) {
  require(same_descriptor(f.descriptor(), g.descriptor()),
          "compose across descriptors");
  switch (f.kind()) {
    case Kind::rows:
      return Mor::rows(f.source(), g.target(), f.matrix() * g.matrix());
    case Kind::freyd:
      return Mor::freyd(f.source(), g.target(), compose(f.datum(), g.datum()),
                        compose(f.witness(), g.witness()));
    case Kind::op:
      return Mor::op(f.source(), g.target(),
                     compose(g.op_inner(), f.op_inner()));
  }
  throw std::logic_error("unreachable");
}

Mor identity_mor(const Obj& a) {
  switch (a.kind()) {
    case Kind::rows:
      return Mor::rows(a, a,
                       Matrix::identity(a.descriptor()->ring(), a.rank()));
    case Kind::freyd:
      return Mor::freyd(a, a, identity_mor(a.range()),
                        identity_mor(a.relations_obj()));
    case Kind::op:
      return Mor::op(a, a, identity_mor(a.op_inner()));
  }
  throw std::logic_error("unreachable");
}

Mor add(const Mor& f, const Mor& g) {
  require(same_descriptor(f.descriptor(), g.descriptor()),
          "add across descriptors");
  switch (f.kind()) {
    case Kind::rows:
      return Mor::rows(f.source(), f.target(), f.matrix() + g.matrix());
    case Kind::freyd:
      return Mor::freyd(f.source(), f.target(), add(f.datum(), g.datum()),
                        add(f.witness(), g.witness()));
    case Kind::op:
      return Mor::op(f.source(), f.target(), add(f.op_inner(), g.op_inner()));
  }
  throw std::logic_error("unreachable");
}

Mor negate(const Mor& f) {
  switch (f.kind()) {
    case Kind::rows:
      return Mor::rows(f.source(), f.target(), -f.matrix());
    case Kind::freyd:
      return Mor::freyd(f.source(), f.target(), negate(f.datum()),
                        negate(f.witness()));
    case Kind::op:
      return Mor::op(f.source(), f.target(), negate(f.op_inner()));
  }
  throw std::logic_error("unreachable");
}

Mor sub(const Mor& f, const Mor& g) { return add(f, negate(g)); }

Mor zero_mor(const Obj& source, const Obj& target) {
  require(same_descriptor(source.descriptor(), target.descriptor()),
          "zero morphism across descriptors");
  switch (source.kind()) {
    case Kind::rows:
      return Mor::rows(source, target,
                       Matrix(source.descriptor()->ring(), source.rank(),
                              target.rank()));
    case Kind::freyd:
      return Mor::freyd(source, target, zero_mor(source.range(), target.range()),
                        zero_mor(source.relations_obj(), target.relations_obj()));
    case Kind::op:
      return Mor::op(source, target,
                     zero_mor(target.op_inner(), source.op_inner()));
  }
  throw std::logic_error("unreachable");
}

bool mor_eq(const Mor& f, const Mor& g) {
  require(same_object(f.source(), g.source()) &&
              same_object(f.target(), g.target()),
          "mor_eq on non-parallel morphisms");
  switch (f.kind()) {
    case Kind::rows:
      return f.matrix() == g.matrix();
    case Kind::freyd: {
      // Equality holds iff the datum difference factors over the target
      // relation: one inner lift query.
      const Mor delta = sub(f.datum(), g.datum());
      return lift(delta, f.target().relation()).has_value();
    }
    case Kind::op:
      return mor_eq(f.op_inner(), g.op_inner());
  }
  throw std::logic_error("unreachable");
}

bool is_zero(const Mor& f) {
  return mor_eq(f, zero_mor(f.source(), f.target()));
}

// ---------------------------------------------------------------------------
// Direct sums

DirectSum direct_sum(const DescriptorPtr& desc, std::span<const Obj> objs) {
  for (const auto& o : objs) {
    require(same_descriptor(o.descriptor(), desc),
            "direct_sum summand descriptor mismatch");
  }
  DirectSum out;
  switch (desc->kind()) {
    case Kind::rows: {
      int total = 0;
      for (const auto& o : objs) total += o.rank();
      const RingId& ring = desc->ring();
      out.sum = Obj::rows(desc, total);
      int at = 0;
      for (const auto& o : objs) {
        Matrix inj(ring, o.rank(), total);
        for (int r = 0; r < o.rank(); ++r) {
          inj(r, at + r) = RingElement::one(ring);
        }
        out.injections.push_back(Mor::rows(o, out.sum, inj));
        out.projections.push_back(Mor::rows(out.sum, o, inj.transposed()));
        at += o.rank();
      }
      return out;
    }
    case Kind::freyd: {
      std::vector<Obj> ranges, rels;
      for (const auto& o : objs) {
        ranges.push_back(o.range());
        rels.push_back(o.relations_obj());
      }
      const DirectSum dr = direct_sum(desc->inner(), ranges);
      const DirectSum ds = direct_sum(desc->inner(), rels);
      std::vector<Mor> comps;
      for (std::size_t i = 0; i < objs.size(); ++i) {
        comps.push_back(compose(objs[i].relation(), dr.injections[i]));
      }
      const Mor relation = from_direct_sum(ds, comps, dr.sum);
      out.sum = Obj::freyd(relation);
      for (std::size_t i = 0; i < objs.size(); ++i) {
        out.injections.push_back(Mor::freyd(objs[i], out.sum,
                                            dr.injections[i],
                                            ds.injections[i]));
        out.projections.push_back(Mor::freyd(out.sum, objs[i],
                                             dr.projections[i],
                                             ds.projections[i]));
      }
      return out;
    }
    case Kind::op: {
      std::vector<Obj> inner_objs;
      for (const auto& o : objs) inner_objs.push_back(o.op_inner());
      const DirectSum di = direct_sum(desc->inner(), inner_objs);
      out.sum = Obj::op(di.sum);
      for (std::size_t i = 0; i < objs.size(); ++i) {
        out.injections.push_back(
            Mor::op(objs[i], out.sum, di.projections[i]));
        out.projections.push_back(
            Mor::op(out.sum, objs[i], di.injections[i]));
      }
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

Obj zero_obj(const DescriptorPtr& desc) {
  return direct_sum(desc, std::span<const Obj>()).sum;
}

bool is_zero_obj(const Obj& a) { return is_zero(identity_mor(a)); }

Mor from_direct_sum(const DirectSum& ds, std::span<const Mor> components,
                    const Obj& target) {
  require(components.size() == ds.projections.size(),
          "from_direct_sum component count mismatch");
  Mor acc = zero_mor(ds.sum, target);
  for (std::size_t i = 0; i < components.size(); ++i) {
    acc = add(acc, compose(ds.projections[i], components[i]));
  }
  return acc;
}

Mor into_direct_sum(const DirectSum& ds, std::span<const Mor> components,
                    const Obj& source) {
  require(components.size() == ds.injections.size(),
          "into_direct_sum component count mismatch");
  Mor acc = zero_mor(source, ds.sum);
  for (std::size_t i = 0; i < components.size(); ++i) {
    acc = add(acc, compose(components[i], ds.injections[i]));
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Weak kernels / weak cokernels / weak pullbacks

WeakKernel weak_kernel(const Mor& alpha) {
  switch (alpha.kind()) {
    case Kind::rows:
      return detail::rows_weak_kernel(alpha);
    case Kind::freyd: {
      auto kd = kernel(alpha);
      WeakKernel wk{kd.obj, kd.embedding, nullptr};
      auto impl = std::make_shared<WeakKernelImpl>();
      impl->kernel_state = std::move(kd);
      wk.impl = std::move(impl);
      return wk;
    }
    case Kind::op: {
      WeakCokernel wc = weak_cokernel(alpha.op_inner());
      WeakKernel wk;
      wk.obj = Obj::op(wc.obj);
      wk.embedding = Mor::op(wk.obj, alpha.source(), wc.projection);
      auto impl = std::make_shared<WeakKernelImpl>();
      impl->op_state = std::move(wc);
      wk.impl = std::move(impl);
      return wk;
    }
  }
  throw std::logic_error("unreachable");
}

Mor weak_kernel_lift(const Mor& alpha, const WeakKernel& wk, const Mor& tau) {
  if (!is_zero(compose(tau, alpha))) {
    throw std::invalid_argument("weak_kernel_lift: tau . alpha != 0");
  }
  switch (alpha.kind()) {
    case Kind::rows:
      return detail::rows_weak_kernel_lift(wk, tau);
    case Kind::freyd:
      return detail::freyd_kernel_lift_impl(alpha, *wk.impl->kernel_state, tau,
                                            std::nullopt);
    case Kind::op: {
      const Mor inner = weak_cokernel_colift(alpha.op_inner(),
                                             *wk.impl->op_state,
                                             tau.op_inner());
      return Mor::op(tau.source(), wk.obj, inner);
    }
  }
  throw std::logic_error("unreachable");
}

WeakCokernel weak_cokernel(const Mor& alpha) {
  switch (alpha.kind()) {
    case Kind::rows:
      return detail::rows_weak_cokernel(alpha);
    case Kind::freyd: {
      auto cd = cokernel(alpha);
      WeakCokernel wc{cd.obj, cd.projection, nullptr};
      auto impl = std::make_shared<WeakCokernelImpl>();
      impl->cokernel_state = std::move(cd);
      wc.impl = std::move(impl);
      return wc;
    }
    case Kind::op: {
      WeakKernel wk = weak_kernel(alpha.op_inner());
      WeakCokernel wc;
      wc.obj = Obj::op(wk.obj);
      wc.projection = Mor::op(alpha.target(), wc.obj, wk.embedding);
      auto impl = std::make_shared<WeakCokernelImpl>();
      impl->op_state = std::move(wk);
      wc.impl = std::move(impl);
      return wc;
    }
  }
  throw std::logic_error("unreachable");
}

Mor weak_cokernel_colift(const Mor& alpha, const WeakCokernel& wc,
                         const Mor& tau) {
  if (!is_zero(compose(alpha, tau))) {
    throw std::invalid_argument("weak_cokernel_colift: alpha . tau != 0");
  }
  switch (alpha.kind()) {
    case Kind::rows:
      return detail::rows_weak_cokernel_colift(wc, tau);
    case Kind::freyd:
      return detail::freyd_cokernel_colift_impl(
          alpha, *wc.impl->cokernel_state, tau, std::nullopt);
    case Kind::op: {
      const Mor inner = weak_kernel_lift(alpha.op_inner(), *wc.impl->op_state,
                                         tau.op_inner());
      return Mor::op(wc.obj, tau.target(), inner);
    }
  }
  throw std::logic_error("unreachable");
}

WeakPullback weak_pullback(const Mor& alpha, const Mor& gamma) {
  require(same_object(alpha.target(), gamma.target()),
          "weak_pullback expects a cospan");
  const Obj objs[] = {alpha.source(), gamma.source()};
  DirectSum ds = direct_sum(alpha.descriptor(), objs);
  const Mor combined = sub(compose(ds.projections[0], alpha),
                           compose(ds.projections[1], gamma));
  WeakKernel wk = weak_kernel(combined);
  WeakPullback wp;
  wp.obj = wk.obj;
  wp.pr1 = compose(wk.embedding, ds.projections[0]);
  wp.pr2 = compose(wk.embedding, ds.projections[1]);
  wp.combined = combined;
  wp.wk = std::move(wk);
  wp.ds = std::move(ds);
  return wp;
}

Mor weak_pullback_lift(const WeakPullback& wp, const Mor& p, const Mor& q) {
  const Mor comps[] = {p, q};
  const Mor t = into_direct_sum(wp.ds, comps, p.source());
  return weak_kernel_lift(wp.combined, wp.wk, t);
}

// ---------------------------------------------------------------------------
// Lifts and colifts

std::optional<Mor> lift(const Mor& alpha, const Mor& gamma) {
  require(same_object(alpha.target(), gamma.target()),
          "lift expects a cospan sharing the target");
  switch (alpha.kind()) {
    case Kind::rows:
      return detail::rows_lift(alpha, gamma);
    case Kind::freyd:
      return detail::freyd_lift(alpha, gamma);
    case Kind::op: {
      auto inner = colift(alpha.op_inner(), gamma.op_inner());
      if (!inner) return std::nullopt;
      return Mor::op(alpha.source(), gamma.source(), *inner);
    }
  }
  throw std::logic_error("unreachable");
}

std::optional<Mor> colift(const Mor& alpha, const Mor& gamma) {
  require(same_object(alpha.source(), gamma.source()),
          "colift expects a span sharing the source");
  switch (alpha.kind()) {
    case Kind::rows:
      return detail::rows_colift(alpha, gamma);
    case Kind::freyd:
      return detail::freyd_colift(alpha, gamma);
    case Kind::op: {
      auto inner = lift(alpha.op_inner(), gamma.op_inner());
      if (!inner) return std::nullopt;
      return Mor::op(gamma.target(), alpha.target(), *inner);
    }
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Kernels, cokernels, predicates

KernelData kernel(const Mor& alpha) {
  switch (alpha.kind()) {
    case Kind::freyd:
      return detail::freyd_kernel(alpha);
    case Kind::op: {
      CokernelData cd = cokernel(alpha.op_inner());
      KernelData kd;
      kd.obj = Obj::op(cd.obj);
      kd.embedding = Mor::op(kd.obj, alpha.source(), cd.projection);
      auto impl = std::make_shared<KernelImplState>();
      impl->op_inner = std::move(cd);
      kd.impl = std::move(impl);
      return kd;
    }
    case Kind::rows:
      throw std::invalid_argument(
          "kernel: ROWS categories only provide weak kernels");
  }
  throw std::logic_error("unreachable");
}

Mor kernel_lift(const Mor& alpha, const KernelData& kd, const Mor& tau) {
  switch (alpha.kind()) {
    case Kind::freyd:
      return detail::freyd_kernel_lift_impl(alpha, kd, tau, std::nullopt);
    case Kind::op: {
      const Mor inner = cokernel_colift(alpha.op_inner(), *kd.impl->op_inner,
                                        tau.op_inner());
      return Mor::op(tau.source(), kd.obj, inner);
    }
    default:
      throw std::invalid_argument("kernel_lift outside abelian descriptor");
  }
}

CokernelData cokernel(const Mor& alpha) {
  switch (alpha.kind()) {
    case Kind::freyd:
      return detail::freyd_cokernel(alpha);
    case Kind::op: {
      KernelData kd = kernel(alpha.op_inner());
      CokernelData cd;
      cd.obj = Obj::op(kd.obj);
      cd.projection = Mor::op(alpha.target(), cd.obj, kd.embedding);
      auto impl = std::make_shared<CokernelImplState>();
      impl->op_inner = std::move(kd);
      cd.impl = std::move(impl);
      return cd;
    }
    case Kind::rows:
      throw std::invalid_argument(
          "cokernel: ROWS categories only provide weak cokernels");
  }
  throw std::logic_error("unreachable");
}

Mor cokernel_colift(const Mor& alpha, const CokernelData& cd, const Mor& tau) {
  switch (alpha.kind()) {
    case Kind::freyd:
      return detail::freyd_cokernel_colift_impl(alpha, cd, tau, std::nullopt);
    case Kind::op: {
      const Mor inner =
          kernel_lift(alpha.op_inner(), *cd.impl->op_inner, tau.op_inner());
      return Mor::op(cd.obj, tau.target(), inner);
    }
    default:
      throw std::invalid_argument("cokernel_colift outside abelian descriptor");
  }
}

Mor lift_along_mono(const Mor& mono, const Mor& tau) {
  switch (mono.kind()) {
    case Kind::freyd:
      return detail::freyd_lift_along_mono(mono, tau);
    case Kind::op:
      return Mor::op(tau.source(), mono.source(),
                     detail::freyd_colift_along_epi(mono.op_inner(),
                                                    tau.op_inner()));
    default:
      throw std::invalid_argument("lift_along_mono outside abelian descriptor");
  }
}

Mor colift_along_epi(const Mor& epi, const Mor& tau) {
  switch (epi.kind()) {
    case Kind::freyd:
      return detail::freyd_colift_along_epi(epi, tau);
    case Kind::op:
      return Mor::op(epi.target(), tau.target(),
                     detail::freyd_lift_along_mono(epi.op_inner(),
                                                   tau.op_inner()));
    default:
      throw std::invalid_argument(
          "colift_along_epi outside abelian descriptor");
  }
}

bool is_mono(const Mor& f) {
  switch (f.kind()) {
    case Kind::rows:
      return row_syzygies(f.matrix()).is_zero();
    case Kind::freyd:
      return is_zero(kernel(f).embedding);
    case Kind::op:
      return is_epi(f.op_inner());
  }
  throw std::logic_error("unreachable");
}

bool is_epi(const Mor& f) {
  switch (f.kind()) {
    case Kind::rows:
      return row_syzygies(f.matrix().transposed()).is_zero();
    case Kind::freyd:
      return is_zero(cokernel(f).projection);
    case Kind::op:
      return is_mono(f.op_inner());
  }
  throw std::logic_error("unreachable");
}

bool is_iso(const Mor& f) {
  switch (f.kind()) {
    case Kind::rows:
      return lift(identity_mor(f.target()), f).has_value() &&
             colift(identity_mor(f.source()), f).has_value();
    case Kind::freyd:
      return is_zero_obj(kernel(f).obj) && is_zero_obj(cokernel(f).obj);
    case Kind::op:
      return is_iso(f.op_inner());
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Pullbacks from kernels and direct sums

PullbackData pullback(const Mor& alpha, const Mor& gamma) {
  require(same_object(alpha.target(), gamma.target()),
          "pullback expects a cospan");
  require(alpha.descriptor()->is_abelian(),
          "pullback requires an abelian descriptor");
  const Obj objs[] = {alpha.source(), gamma.source()};
  DirectSum ds = direct_sum(alpha.descriptor(), objs);
  const Mor combined = sub(compose(ds.projections[0], alpha),
                           compose(ds.projections[1], gamma));
  KernelData kd = kernel(combined);
  PullbackData pb;
  pb.obj = kd.obj;
  pb.pr1 = compose(kd.embedding, ds.projections[0]);
  pb.pr2 = compose(kd.embedding, ds.projections[1]);
  pb.combined = combined;
  pb.kd = std::move(kd);
  pb.ds = std::move(ds);
  return pb;
}

Mor pullback_lift(const PullbackData& pb, const Mor& p, const Mor& q) {
  const Mor comps[] = {p, q};
  const Mor t = into_direct_sum(pb.ds, comps, p.source());
  return kernel_lift(pb.combined, pb.kd, t);
}

}  // namespace freyd
