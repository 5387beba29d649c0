#pragma once

#include "freyd/category.hpp"

namespace freyd {

/// Checked constructor for a morphism of FREYD(d): returns the morphism with
/// a stored witness when the datum is well-defined (one inner lift query),
/// and nullopt otherwise.
std::optional<Mor> freyd_morphism(const Obj& source, const Obj& target,
                                  const Mor& datum);

/// kernel_lift with an explicitly supplied zero-witness
/// sigma : range(source(tau)) -> relations(target(alpha)) in the inner
/// category (sigma . rho_B = datum(tau . alpha)).
Mor freyd_kernel_lift(const Mor& alpha, const KernelData& kd, const Mor& tau,
                      const Mor& sigma);

/// cokernel_colift with an explicitly supplied zero-witness
/// sigma : range(source(alpha)) -> relations(target(tau)) in the inner
/// category (sigma . rho_T = datum(alpha . tau)).
Mor freyd_cokernel_colift(const Mor& alpha, const CokernelData& cd,
                          const Mor& tau, const Mor& sigma);

/// Functor target interface for the induced functor out of FREYD(d): the
/// target supplies objects, morphisms, cokernels with their colifts, and
/// composition.
///
///   struct Target {
///     using TObj = ...; using TMor = ...;
///     TObj map_obj(const Obj& inner_obj);
///     TMor map_mor(const Mor& inner_mor);
///     struct Coker { TObj obj; TMor projection; };
///     Coker coker(const TMor& f);
///     TMor coker_colift(const TMor& f, const Coker& c, const TMor& tau);
///     TMor compose_mor(const TMor& f, const TMor& g);
///   };
template <typename Target>
typename Target::TObj induced_object(Target& target, const Obj& freyd_obj) {
  return target.coker(target.map_mor(freyd_obj.relation())).obj;
}

template <typename Target>
typename Target::TMor induced_morphism(Target& target, const Mor& freyd_mor) {
  const auto src_rel = target.map_mor(freyd_mor.source().relation());
  const auto src_coker = target.coker(src_rel);
  const auto tgt_rel = target.map_mor(freyd_mor.target().relation());
  const auto tgt_coker = target.coker(tgt_rel);
  const auto mapped = target.map_mor(freyd_mor.datum());
  return target.coker_colift(src_rel, src_coker,
                             target.compose_mor(mapped, tgt_coker.projection));
}

}  // namespace freyd
