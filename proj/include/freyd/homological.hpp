#pragma once

#include "freyd/category.hpp"
#include "freyd/normal_forms.hpp"

namespace freyd {

// Finitely presented modules are objects of FREYD(ROWS(ring)); covariant
// finitely presented functors on them live in FREYD(OP(FREYD(ROWS(ring)))),
// contravariant ones in FREYD(FREYD(ROWS(ring))).

DescriptorPtr fpmod_descriptor(const RingId& ring);

enum class Variance { covariant, contravariant };

DescriptorPtr functor_descriptor(const RingId& ring, Variance variance);

/// The cokernel interpretation of a relation matrix: rows are relations among
/// the standard generators of a free row module.
Obj present_module(const Matrix& relations);
Obj free_module(const RingId& ring, int rank);

/// The canonical epimorphism (range <- 0) ->> M with identity datum.
Mor free_cover(const Obj& m);

/// Isomorphism invariants of a finitely presented module, reported through
/// the Smith normal form of its relation matrix (residue rings are lifted to
/// Z with appended n*I relations).
struct ModuleInvariants {
  RingId ring = RingId::integers();
  int free_rank = 0;
  std::vector<mpz_class> torsion;  // divisibility chain, every entry >= 2

  bool operator==(const ModuleInvariants& other) const {
    return ring == other.ring && free_rank == other.free_rank &&
           torsion == other.torsion;
  }
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;
};

ModuleInvariants module_invariants(const Obj& m);

/// Hom as a finitely presented module over the same ring, computed via the
/// induced homomorphism structure on FREYD(ROWS(ring)).
Obj hom_module(const Obj& m, const Obj& n);

/// Tensor product via the Kronecker presentation.
Obj tensor_module(const Obj& m, const Obj& n);
/// f (x) id_N for a morphism of finitely presented modules.
Mor tensor_with(const Mor& f, const Obj& n);

struct FreeResolutionSegment {
  Obj module;
  int index = 0;
  std::vector<int> free_ranks;        // ranks of P_0 .. P_{index-1}
  std::vector<Matrix> differentials;  // d_j : P_j -> P_{j-1}, j = 1..index
  Obj syzygy;                         // Omega^index M
  Mor embedding;                      // Omega^index M -> (P_{index-1} <- 0)
};

/// Free resolution data built by iterated syzygies of the relation matrix.
FreeResolutionSegment resolution(const Obj& m, int index);

/// Ext^i(A, B) via the satellite formula
/// coker( hom(P_{i-1}, B) -> hom(Omega^i A, B) ); i = 0 is hom_module.
Obj ext_module(const Obj& a, const Obj& b, int i);

/// Tor_i(M, N) via ker( Omega^i M (x) N -> P_{i-1} (x) N ); i = 0 is
/// tensor_module.
Obj tor_module(const Obj& m, const Obj& n, int i);

/// The representable functor Hom(M, -) resp. Hom(-, M) as a functor object.
Obj representable_functor(const Obj& m, Variance variance);

/// Ext^i(A, -) as the covariant functor object (Omega^i A -> P_{i-1});
/// requires i >= 1.
Obj ext_functor_obj(const Obj& a, int i);

/// Tor_i(M, -): for i = 0 the tensor representation (P_0^v -> P_1^v), for
/// i >= 1 the kernel of the induced map of tensor representations.
Obj tor_functor_obj(const Obj& m, int i);

/// The natural transformations between two functor objects of the same
/// variance as a finitely presented module over the base ring.
Obj nat_hom(const Obj& f, const Obj& g);
/// Explicit natural transformations generating nat_hom(f, g).
std::vector<Mor> nat_hom_generators(const Obj& f, const Obj& g);

/// Left exactness of a contravariant functor object: the comparison
/// {epsilon, 0} : (A <- R_A) -> (coker rho_A <- 0) is an isomorphism.
bool decide_left_exact(const Obj& f);

/// A monomorphism from a covariant functor object into an injective one.
Mor injective_embedding(const Obj& x);

/// Right exactness of a covariant functor object: the injective embedding
/// splits.
bool decide_right_exact(const Obj& x);

}  // namespace freyd
