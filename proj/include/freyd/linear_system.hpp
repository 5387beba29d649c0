#pragma once

#include <functional>

#include "freyd/category.hpp"

namespace freyd {

/// A linear system sum_j alpha_ij . X_j . beta_ij = gamma_i with unknowns
/// X_j : B_j -> C_j.  Absent grid cells stand for the zero morphism.
struct LinearSystem {
  DescriptorPtr desc;
  std::vector<Obj> eq_sources;       // A_i
  std::vector<Obj> eq_targets;       // D_i
  std::vector<Obj> unknown_sources;  // B_j
  std::vector<Obj> unknown_targets;  // C_j
  std::vector<std::vector<std::optional<Mor>>> left;   // alpha_ij : A_i -> B_j
  std::vector<std::vector<std::optional<Mor>>> right;  // beta_ij : C_j -> D_i
  std::vector<Mor> rhs;                                // gamma_i : A_i -> D_i

  std::size_t equations() const { return eq_sources.size(); }
  std::size_t unknowns() const { return unknown_sources.size(); }
  /// Throws std::invalid_argument when shapes or descriptors disagree.
  void validate() const;
};

/// True when the candidate morphisms satisfy every equation up to mor_eq.
bool verifies(const LinearSystem& sys, std::span<const Mor> solution);

struct ReducedSystem {
  LinearSystem system;  // over the inner descriptor
  /// Maps a solution of the reduced system back to one of the original.
  std::function<std::vector<Mor>(std::span<const Mor>)> pull_back;
};

/// One-layer reduction of a system over FREYD(d) or OP(d) to an equivalent
/// system over d; solvability is preserved in both directions.
ReducedSystem reduce_linear_system(const LinearSystem& sys);

/// Decides the system, reducing through FREYD/OP layers to the ROWS base and
/// applying the base homomorphism structure there.
std::optional<std::vector<Mor>> solve_linear_system(const LinearSystem& sys);

class HomStructure;

/// Decides the system with the supplied homomorphism structure directly at
/// the system's own level (one lift in the structure's codomain).
std::optional<std::vector<Mor>> solve_linear_system(const LinearSystem& sys,
                                                    const HomStructure& hs);

}  // namespace freyd
