#pragma once

#include <map>
#include <optional>
#include <vector>

#include "freyd/linear_system.hpp"

namespace freyd::oracle {

// Independent brute-force ground truth over Z/n.  Everything here is
// computed by explicit enumeration on top of ring-core arithmetic; none of
// the Freyd-layer algorithms are reused.

using Vec = std::vector<unsigned long>;

/// An explicitly enumerated subquotient T/S of (Z/n)^k for subgroups
/// S <= T <= (Z/n)^k.  Elements are canonical coset representatives (the
/// lexicographically smallest member of each coset).
class FiniteModule {
 public:
  static constexpr std::size_t kDefaultBound = 4096;

  /// T = the full ambient (Z/n)^k, S = the row span of `relations`.
  static FiniteModule from_presentation(unsigned long modulus, int rank,
                                        const std::vector<Vec>& relations,
                                        std::size_t bound = kDefaultBound);
  /// General subquotient from explicit generating sets.
  static FiniteModule subquotient(unsigned long modulus, int rank,
                                  const std::vector<Vec>& group_gens,
                                  const std::vector<Vec>& denominator_gens,
                                  std::size_t bound = kDefaultBound);

  unsigned long modulus() const { return modulus_; }
  int ambient_rank() const { return rank_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Vec>& elements() const { return elements_; }
  const std::vector<Vec>& group() const { return group_; }
  const Vec& zero() const { return zero_; }

  /// Canonical representative of x + S; x must lie in T.
  const Vec& reduce(const Vec& x) const;
  Vec add(const Vec& a, const Vec& b) const;
  Vec scale(unsigned long c, const Vec& a) const;

  /// Greedily chosen generating set of T/S.
  const std::vector<Vec>& generators() const { return generators_; }
  /// Coordinates of an element over generators().
  const std::vector<unsigned long>& coordinates(const Vec& element) const;

  /// Invariant factors d_1 | d_2 | ... (each >= 2) recovered from the
  /// element-order census, one prime at a time.
  std::vector<mpz_class> invariant_factors() const;

 private:
  FiniteModule() = default;

  unsigned long modulus_ = 2;
  int rank_ = 0;
  std::vector<Vec> group_;       // all of T, sorted
  std::vector<Vec> elements_;    // canonical representatives of T/S, sorted
  Vec zero_;
  std::map<Vec, Vec> rep_;       // T -> canonical representative
  std::vector<Vec> generators_;
  std::map<Vec, std::vector<unsigned long>> coords_;
};

/// An additive map defined by its values on the source generators and
/// verified additive by exhaustion.
class FiniteMap {
 public:
  /// Returns nullopt when the assignment does not extend to a morphism.
  static std::optional<FiniteMap> from_generator_images(
      const FiniteModule& src, const FiniteModule& tgt,
      const std::vector<Vec>& images);
  /// The map induced by right multiplication with a matrix over Z/n.
  static FiniteMap from_matrix(const FiniteModule& src, const FiniteModule& tgt,
                               const Matrix& m);

  const FiniteModule& source() const { return *src_; }
  const FiniteModule& target() const { return *tgt_; }
  const Vec& apply(const Vec& element) const;

 private:
  FiniteMap() = default;

  std::shared_ptr<const FiniteModule> src_, tgt_;
  std::map<Vec, Vec> table_;
};

FiniteMap compose_maps(const FiniteMap& f, const FiniteMap& g);

/// The explicit finite module of a finitely presented module over Z/n.
FiniteModule enumerate_module(const Obj& fp_module,
                              std::size_t bound = FiniteModule::kDefaultBound);

std::vector<FiniteMap> brute_hom(const FiniteModule& m, const FiniteModule& n,
                                 std::size_t budget = 1000000);
FiniteModule brute_kernel(const FiniteMap& f);
FiniteModule brute_cokernel(const FiniteMap& f);
struct CokernelWithProjection {
  FiniteModule obj;
  FiniteMap projection;
};
CokernelWithProjection brute_cokernel_with_projection(const FiniteMap& f);
FiniteModule brute_tensor(const FiniteModule& m, const FiniteModule& n);

/// Exhaustive decision of a linear system over ROWS(Z/n).
std::optional<std::vector<Matrix>> brute_linear_solve(
    const LinearSystem& sys, std::size_t budget = 1000000);

}  // namespace freyd::oracle
