#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "freyd/matrix.hpp"

namespace freyd {

class CategoryDescriptor;
using DescriptorPtr = std::shared_ptr<const CategoryDescriptor>;

/// Expression tree selecting the category an object or morphism lives in:
/// ROWS(ring) at the leaf, FREYD(inner) and OP(inner) as unary nodes.
/// Capabilities (weak kernels, decidable lifts, abelian-ness) derive from the
/// structure alone.
class CategoryDescriptor {
 public:
  enum class Kind { rows, freyd, op };

  static DescriptorPtr rows(const RingId& ring);
  static DescriptorPtr freyd(DescriptorPtr inner);
  static DescriptorPtr op(DescriptorPtr inner);

  Kind kind() const { return kind_; }
  const RingId& ring() const;
  const DescriptorPtr& inner() const;
  /// Ring at the ROWS leaf of the tree.
  const RingId& base_ring() const;

  bool has_weak_kernels() const;
  bool has_decidable_lifts() const;
  bool is_abelian() const;

  std::string to_string() const;

 private:
  CategoryDescriptor(Kind kind, RingId ring, DescriptorPtr inner)
      : kind_(kind), ring_(std::move(ring)), inner_(std::move(inner)) {}

  Kind kind_;
  RingId ring_;
  DescriptorPtr inner_;
};

bool same_descriptor(const CategoryDescriptor& a, const CategoryDescriptor& b);
inline bool same_descriptor(const DescriptorPtr& a, const DescriptorPtr& b) {
  return same_descriptor(*a, *b);
}

class Mor;

/// An object of the category selected by its descriptor.  ROWS objects are
/// ranks, FREYD objects carry a relation morphism of the inner category, OP
/// objects wrap an inner object.
class Obj {
 public:
  /// Empty placeholder; every accessor requires a real object built by one of
  /// the factories below.
  Obj() = default;

  static Obj rows(const RingId& ring, int rank);
  static Obj rows(DescriptorPtr desc, int rank);
  /// Object (range <- relation) of FREYD(d) where `relation` lives in d.
  static Obj freyd(const Mor& relation);
  static Obj op(const Obj& inner);

  const DescriptorPtr& descriptor() const { return desc_; }
  CategoryDescriptor::Kind kind() const;

  int rank() const;                 // ROWS payload
  const Mor& relation() const;      // FREYD payload
  Obj range() const;                // FREYD: target of the relation
  Obj relations_obj() const;        // FREYD: source of the relation
  const Obj& op_inner() const;      // OP payload

 private:
  DescriptorPtr desc_;
  int rank_ = 0;
  std::shared_ptr<const Mor> relation_;
  std::shared_ptr<const Obj> inner_;
};

bool same_object(const Obj& a, const Obj& b);

/// A morphism; the payload mirrors the descriptor: a matrix at ROWS level, a
/// datum/witness pair of inner morphisms at FREYD level, a reversed inner
/// morphism at OP level.  Semantic equality is mor_eq, never payload
/// comparison.
class Mor {
 public:
  /// Empty placeholder; see Obj().
  Mor() = default;

  static Mor rows(const Obj& source, const Obj& target, Matrix matrix);
  /// Trusted constructor: the caller guarantees the witness square
  /// relation(source) . datum == witness . relation(target) in the inner
  /// category.  Use freyd_morphism to search for a witness.
  static Mor freyd(const Obj& source, const Obj& target, const Mor& datum,
                   const Mor& witness);
  static Mor op(const Obj& source, const Obj& target, const Mor& inner);

  const DescriptorPtr& descriptor() const { return desc_; }
  CategoryDescriptor::Kind kind() const;
  const Obj& source() const { return *source_; }
  const Obj& target() const { return *target_; }

  const Matrix& matrix() const;   // ROWS payload
  const Mor& datum() const;       // FREYD payload
  const Mor& witness() const;     // FREYD payload
  const Mor& op_inner() const;    // OP payload

 private:
  DescriptorPtr desc_;
  std::shared_ptr<const Obj> source_, target_;
  std::shared_ptr<const Matrix> matrix_;
  std::shared_ptr<const Mor> datum_, witness_;
  std::shared_ptr<const Mor> inner_;
};

/// Structural comparison of payloads with witnesses ignored; used for shape
/// validation, never for deciding equality of morphisms.
bool same_payload(const Mor& a, const Mor& b);

// ---------------------------------------------------------------------------
// Additive structure (Ab-category and additive-category axioms).

Mor compose(const Mor& f, const Mor& g);
Mor identity_mor(const Obj& a);
Mor add(const Mor& f, const Mor& g);
Mor sub(const Mor& f, const Mor& g);
Mor negate(const Mor& f);
Mor zero_mor(const Obj& source, const Obj& target);

/// Decides equality of parallel morphisms in the category's sense.
bool mor_eq(const Mor& f, const Mor& g);
bool is_zero(const Mor& f);

struct DirectSum {
  Obj sum;
  std::vector<Mor> injections;   // iota_i : A_i -> sum
  std::vector<Mor> projections;  // pi_i : sum -> A_i
};

DirectSum direct_sum(const DescriptorPtr& desc, std::span<const Obj> objs);
Obj zero_obj(const DescriptorPtr& desc);
bool is_zero_obj(const Obj& a);

/// Assembles sum -> target from per-summand components via projections.
Mor from_direct_sum(const DirectSum& ds, std::span<const Mor> components,
                    const Obj& target);
/// Assembles source -> sum from per-summand components via injections.
Mor into_direct_sum(const DirectSum& ds, std::span<const Mor> components,
                    const Obj& source);

// ---------------------------------------------------------------------------
// Weak (co)kernels and weak pullbacks.

struct WeakKernelImpl;

struct WeakKernel {
  Obj obj;
  Mor embedding;  // kappa : K -> A with kappa . alpha = 0
  std::shared_ptr<const WeakKernelImpl> impl;
};

WeakKernel weak_kernel(const Mor& alpha);
/// For tau with tau . alpha = 0 returns u with u . kappa = tau (u need not
/// be unique).
Mor weak_kernel_lift(const Mor& alpha, const WeakKernel& wk, const Mor& tau);

struct WeakCokernelImpl;

struct WeakCokernel {
  Obj obj;
  Mor projection;  // pi : B -> C with alpha . pi = 0
  std::shared_ptr<const WeakCokernelImpl> impl;
};

WeakCokernel weak_cokernel(const Mor& alpha);
Mor weak_cokernel_colift(const Mor& alpha, const WeakCokernel& wc,
                         const Mor& tau);

struct WeakPullback {
  Obj obj;
  Mor pr1;  // -> A
  Mor pr2;  // -> C
  // retained construction state for the lift operation
  Mor combined;
  WeakKernel wk;
  DirectSum ds;
};

/// Weak pullback of the cospan alpha : A -> B <- C : gamma, computed from a
/// weak kernel and a direct sum.
WeakPullback weak_pullback(const Mor& alpha, const Mor& gamma);
Mor weak_pullback_lift(const WeakPullback& wp, const Mor& p, const Mor& q);

// ---------------------------------------------------------------------------
// Decidable lifts and colifts.

/// Lift of alpha along gamma in the cospan A -(alpha)-> B <-(gamma)- C:
/// a morphism lambda with lambda . gamma == alpha, or a decision that none
/// exists.
std::optional<Mor> lift(const Mor& alpha, const Mor& gamma);
/// Colift of alpha along gamma in the span A <-(alpha)- B -(gamma)-> C:
/// a morphism lambda with gamma . lambda == alpha, or a decision that none
/// exists.
std::optional<Mor> colift(const Mor& alpha, const Mor& gamma);

// ---------------------------------------------------------------------------
// Abelian structure (available when the descriptor is abelian).

struct KernelImplState;

struct KernelData {
  Obj obj;
  Mor embedding;
  std::shared_ptr<const KernelImplState> impl;
};

struct CokernelImplState;

struct CokernelData {
  Obj obj;
  Mor projection;
  std::shared_ptr<const CokernelImplState> impl;
};

KernelData kernel(const Mor& alpha);
/// tau with tau . alpha = 0; the zero-witness is computed internally.
Mor kernel_lift(const Mor& alpha, const KernelData& kd, const Mor& tau);

CokernelData cokernel(const Mor& alpha);
/// tau with alpha . tau = 0; the zero-witness is computed internally.
Mor cokernel_colift(const Mor& alpha, const CokernelData& cd, const Mor& tau);

/// Lift of tau through a monomorphism: result . mono == tau.
Mor lift_along_mono(const Mor& mono, const Mor& tau);
/// Colift of tau through an epimorphism: epi . result == tau.
Mor colift_along_epi(const Mor& epi, const Mor& tau);

bool is_mono(const Mor& f);
bool is_epi(const Mor& f);
bool is_iso(const Mor& f);

struct PullbackData {
  Obj obj;
  Mor pr1;
  Mor pr2;
  Mor combined;
  KernelData kd;
  DirectSum ds;
};

/// Genuine pullback in an abelian descriptor (kernel + direct sum).
PullbackData pullback(const Mor& alpha, const Mor& gamma);
Mor pullback_lift(const PullbackData& pb, const Mor& p, const Mor& q);

}  // namespace freyd
