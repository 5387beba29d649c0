#pragma once

#include "freyd/category.hpp"

namespace freyd {

/// A homomorphism structure (1, H, nu) for the category P with values in the
/// category B: a distinguished object `one`, a bifunctor contravariant in the
/// first and covariant in the second argument, and the natural isomorphism
/// nu : Hom_P(X, Y) ~ Hom_B(1, H(X, Y)) with inverse `internalize`.
class HomStructure {
 public:
  virtual ~HomStructure() = default;

  const DescriptorPtr& domain() const { return domain_; }
  const DescriptorPtr& codomain() const { return codomain_; }
  const Obj& one() const { return one_; }

  virtual Obj hom_obj(const Obj& x, const Obj& y) const = 0;
  /// H(alpha, beta) : H(A, B) -> H(A', B') for alpha : A' -> A (contravariant
  /// slot) and beta : B -> B'.
  virtual Mor hom_mor(const Mor& alpha, const Mor& beta) const = 0;
  /// nu(x) : one -> H(source(x), target(x)).
  virtual Mor externalize(const Mor& x) const = 0;
  /// nu^{-1} of m : one -> H(x, y).
  virtual Mor internalize(const Obj& x, const Obj& y, const Mor& m) const = 0;

 protected:
  HomStructure(DescriptorPtr domain, DescriptorPtr codomain, Obj one)
      : domain_(std::move(domain)),
        codomain_(std::move(codomain)),
        one_(std::move(one)) {}

  DescriptorPtr domain_;
  DescriptorPtr codomain_;
  Obj one_;
};

using HomStructurePtr = std::shared_ptr<const HomStructure>;

/// Base structure for ROWS(ring) with values in FREYD(ROWS(ring)):
/// H(a, b) has rank a*b with relation-free objects, nu is row-major
/// flattening.  Valid for the commutative rings of this library.
HomStructurePtr rows_hom_structure(const RingId& ring);

/// Structure for FREYD(d) induced by a structure for d whose codomain is
/// abelian with projective distinguished object.
HomStructurePtr freyd_hom_structure(HomStructurePtr inner);

/// Structure for OP(d) obtained by swapping the arguments of a structure
/// for d.
HomStructurePtr op_hom_structure(HomStructurePtr inner);

/// Builds the structure tower for any descriptor over a commutative base.
HomStructurePtr hom_structure_for(const DescriptorPtr& desc);

}  // namespace freyd
