#include <vector>

#include "doctest.h"
#include "freyd/freyd_cat.hpp"
#include "test_support.hpp"

using namespace freyd;
using namespace freyd::testing;

namespace {

const RingId kZ = RingId::integers();

Obj fp(const RingId& ring, const Matrix& rel, int range_rank) {
  const DescriptorPtr rows = CategoryDescriptor::rows(ring);
  return Obj::freyd(Mor::rows(Obj::rows(rows, rel.rows()),
                              Obj::rows(rows, range_rank), rel));
}

Obj cyclic(long k) { return fp(kZ, Matrix::from_int_rows(kZ, {{k}}), 1); }

Mor datum_mor(const Obj& src, const Obj& tgt, const Matrix& m) {
  auto f = freyd_morphism(src, tgt, Mor::rows(src.range(), tgt.range(), m));
  REQUIRE(f.has_value());
  return *f;
}

// n . id_X == 0 and m . id_X != 0 for proper divisors m: X behaves like Z/n.
bool acts_like_cyclic(const Obj& x, long n) {
  const Mor id = identity_mor(x);
  Mor acc = zero_mor(x, x);
  for (long i = 0; i < n; ++i) acc = add(acc, id);
  if (!is_zero(acc)) return false;
  for (long m = 1; m < n; ++m) {
    Mor part = zero_mor(x, x);
    for (long i = 0; i < m; ++i) part = add(part, id);
    if (is_zero(part)) return false;
  }
  return true;
}

std::vector<RingId> test_rings() {
  return {RingId::integers(), RingId::rationals(), RingId::residues(4),
          RingId::residues(6)};
}

}  // namespace

TEST_CASE("freyd_morphism searches a witness") {
  const Obj z2 = cyclic(2);
  const Obj z4 = cyclic(4);
  const auto ok = freyd_morphism(
      z2, z4, Mor::rows(z2.range(), z4.range(), Matrix::from_int_rows(kZ, {{2}})));
  REQUIRE(ok.has_value());
  CHECK(ok->witness().matrix() == Matrix::from_int_rows(kZ, {{1}}));
  const auto bad = freyd_morphism(
      z2, z4, Mor::rows(z2.range(), z4.range(), Matrix::from_int_rows(kZ, {{1}})));
  CHECK(!bad.has_value());
  // Any datum into (A <- id_A) is well-defined: the target is a zero object.
  const DescriptorPtr rows = CategoryDescriptor::rows(kZ);
  const Obj r1 = Obj::rows(rows, 1);
  const Obj collapsed = Obj::freyd(identity_mor(r1));
  CHECK(is_zero_obj(collapsed));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    const Obj src = random_obj(rng, z2.descriptor());
    if (src.range().rank() == 0) continue;
    const Matrix m = random_matrix(rng, kZ, src.range().rank(), 1, 5);
    CHECK(freyd_morphism(src, collapsed,
                         Mor::rows(src.range(), collapsed.range(), m))
              .has_value());
  }
}

TEST_CASE("cokernel: worked examples") {
  // coker of {(1)} : (Z <- 4) -> (Z <- 2) is trivial (Z/4 -> Z/2 is onto).
  const Mor onto = datum_mor(cyclic(4), cyclic(2), Matrix::from_int_rows(kZ, {{1}}));
  const CokernelData cd = cokernel(onto);
  CHECK(is_zero(compose(onto, cd.projection)));
  CHECK(is_epi(cd.projection));
  CHECK(is_zero_obj(cd.obj));

  // coker of 0 -> X is X itself: the projection from X is an isomorphism.
  const Obj x = cyclic(6);
  const Mor from_zero = zero_mor(zero_obj(x.descriptor()), x);
  const CokernelData cz = cokernel(from_zero);
  CHECK(is_iso(cz.projection));

  // coker of an identity is the zero object.
  CHECK(is_zero_obj(cokernel(identity_mor(x)).obj));
}

TEST_CASE("kernel: worked examples") {
  // ker of {(1)} : (Z <- 4) -> (Z <- 2) is Z/2.
  const Mor onto = datum_mor(cyclic(4), cyclic(2), Matrix::from_int_rows(kZ, {{1}}));
  const KernelData kd = kernel(onto);
  CHECK(is_zero(compose(kd.embedding, onto)));
  CHECK(is_mono(kd.embedding));
  CHECK(acts_like_cyclic(kd.obj, 2));

  CHECK(is_zero_obj(kernel(identity_mor(cyclic(4))).obj));

  // ker of the zero morphism X -> Y is X (embedding is iso).
  const Mor z = zero_mor(cyclic(4), cyclic(6));
  CHECK(is_iso(kernel(z).embedding));
}

TEST_CASE("predicates on Freyd morphisms") {
  // {(2)} : (Z <- 2) -> (Z <- 4) embeds Z/2 into Z/4.
  const Mor emb = datum_mor(cyclic(2), cyclic(4), Matrix::from_int_rows(kZ, {{2}}));
  CHECK(is_mono(emb));
  CHECK(!is_epi(emb));
  CHECK(!is_iso(emb));
  // {(1)} : (Z <- 4) -> (Z <- 2) is onto but not injective.
  const Mor onto = datum_mor(cyclic(4), cyclic(2), Matrix::from_int_rows(kZ, {{1}}));
  CHECK(is_epi(onto));
  CHECK(!is_mono(onto));
  const Mor id = identity_mor(cyclic(4));
  CHECK(is_mono(id));
  CHECK(is_epi(id));
  CHECK(is_iso(id));
  CHECK(!is_zero(id));
}

TEST_CASE("kernel and cokernel complexes vanish; planted lifts verify") {
  std::mt19937_64 rng(2711);
  const GenConfig cfg{3, 3};
  for (const RingId& ring : test_rings()) {
    const DescriptorPtr desc =
        CategoryDescriptor::freyd(CategoryDescriptor::rows(ring));
    for (int t = 0; t < 12; ++t) {
      const Mor phi = random_mor(rng, desc, cfg);
      const KernelData kd = kernel(phi);
      CHECK(is_zero(compose(kd.embedding, phi)));
      const CokernelData cd = cokernel(phi);
      CHECK(is_zero(compose(phi, cd.projection)));
      // planted kernel lift
      const Mor u0 = random_mor_into(rng, kd.obj, cfg);
      const Mor tau = compose(u0, kd.embedding);
      const Mor u = kernel_lift(phi, kd, tau);
      CHECK(mor_eq(compose(u, kd.embedding), tau));
      // planted cokernel colift
      const Mor v0 = random_mor_from(rng, cd.obj, cfg);
      const Mor sigma = compose(cd.projection, v0);
      const Mor v = cokernel_colift(phi, cd, sigma);
      CHECK(mor_eq(compose(cd.projection, v), sigma));
    }
  }
}

TEST_CASE("lift along mono: worked examples and planted recovery") {
  const Mor mono = datum_mor(cyclic(2), cyclic(4), Matrix::from_int_rows(kZ, {{2}}));
  // tau = mono lifts to the identity.
  CHECK(mor_eq(lift_along_mono(mono, mono), identity_mor(cyclic(2))));
  // tau = 0 lifts to 0.
  const Mor z = zero_mor(cyclic(2), cyclic(4));
  CHECK(is_zero(lift_along_mono(mono, z)));

  std::mt19937_64 rng(5);
  const GenConfig cfg{2, 2};
  for (const RingId& ring : test_rings()) {
    const DescriptorPtr desc =
        CategoryDescriptor::freyd(CategoryDescriptor::rows(ring));
    for (int t = 0; t < 8; ++t) {
      const Mor phi = random_mor(rng, desc, cfg);
      const KernelData kd = kernel(cokernel(phi).projection);
      const Mor m = kd.embedding;  // mono
      REQUIRE(is_mono(m));
      const Mor chi = random_mor_into(rng, m.source(), cfg);
      const Mor tau = compose(chi, m);
      const Mor lifted = lift_along_mono(m, tau);
      CHECK(mor_eq(compose(lifted, m), tau));
    }
  }
}

TEST_CASE("colift along epi: worked examples and planted recovery") {
  const Obj x = cyclic(4);
  const Mor tau = datum_mor(x, cyclic(2), Matrix::from_int_rows(kZ, {{1}}));
  CHECK(mor_eq(colift_along_epi(identity_mor(x), tau), tau));
  CHECK(is_zero(colift_along_epi(identity_mor(x), zero_mor(x, cyclic(2)))));

  std::mt19937_64 rng(6);
  const GenConfig cfg{2, 2};
  for (const RingId& ring : test_rings()) {
    const DescriptorPtr desc =
        CategoryDescriptor::freyd(CategoryDescriptor::rows(ring));
    for (int t = 0; t < 8; ++t) {
      const Mor phi = random_mor(rng, desc, cfg);
      const Mor e = cokernel(phi).projection;  // epi
      REQUIRE(is_epi(e));
      const Mor chi = random_mor_from(rng, e.target(), cfg);
      const Mor tau = compose(e, chi);
      const Mor colifted = colift_along_epi(e, tau);
      CHECK(mor_eq(compose(e, colifted), tau));
    }
  }
}

TEST_CASE("every morphism factors as epi onto image followed by mono") {
  std::mt19937_64 rng(8);
  const GenConfig cfg{3, 3};
  for (const RingId& ring : test_rings()) {
    const DescriptorPtr desc =
        CategoryDescriptor::freyd(CategoryDescriptor::rows(ring));
    for (int t = 0; t < 10; ++t) {
      const Mor phi = random_mor(rng, desc, cfg);
      const Mor proj = cokernel(phi).projection;
      const KernelData image = kernel(proj);
      const Mor mono = image.embedding;
      const Mor epi = lift_along_mono(mono, phi);
      CHECK(mor_eq(compose(epi, mono), phi));
      CHECK(is_epi(epi));
      CHECK(is_mono(mono));
    }
  }
}

TEST_CASE("constructions are independent of the stored witness") {
  std::mt19937_64 rng(13);
  const GenConfig cfg{2, 2};
  const DescriptorPtr desc =
      CategoryDescriptor::freyd(CategoryDescriptor::rows(kZ));
  for (int t = 0; t < 8; ++t) {
    const Mor phi = random_mor(rng, desc, cfg);
    // Another witness for the same datum: add a strict annihilator of rho_B.
    const WeakKernel wk = weak_kernel(phi.target().relation());
    const Mor noise =
        compose(random_mor_between(rng, phi.source().relations_obj(), wk.obj, cfg),
                wk.embedding);
    const Mor phi2 = Mor::freyd(phi.source(), phi.target(), phi.datum(),
                                add(phi.witness(), noise));
    CHECK(mor_eq(phi, phi2));
    const KernelData k1 = kernel(phi);
    const KernelData k2 = kernel(phi2);
    CHECK(mor_eq(compose(k1.embedding, phi), zero_mor(k1.obj, phi.target())));
    CHECK(is_zero_obj(k1.obj) == is_zero_obj(k2.obj));
    const Mor u = kernel_lift(phi2, k2, compose(identity_mor(k1.obj), k1.embedding));
    CHECK(mor_eq(compose(u, k2.embedding), k1.embedding));
    CHECK(is_mono(phi) == is_mono(phi2));
    CHECK(is_epi(phi) == is_epi(phi2));
  }
}

TEST_CASE("pullback universal property in the abelian layer") {
  std::mt19937_64 rng(21);
  const GenConfig cfg{2, 2};
  const DescriptorPtr desc =
      CategoryDescriptor::freyd(CategoryDescriptor::rows(kZ));
  for (int t = 0; t < 6; ++t) {
    const Obj b = random_obj(rng, desc, cfg);
    const Mor alpha = random_mor_into(rng, b, cfg);
    const Mor gamma = random_mor_into(rng, b, cfg);
    const PullbackData pb = pullback(alpha, gamma);
    CHECK(mor_eq(compose(pb.pr1, alpha), compose(pb.pr2, gamma)));
    // Plant a test pair through the pullback itself.
    const Mor w = random_mor_into(rng, pb.obj, cfg);
    const Mor p = compose(w, pb.pr1);
    const Mor q = compose(w, pb.pr2);
    const Mor u = pullback_lift(pb, p, q);
    CHECK(mor_eq(compose(u, pb.pr1), p));
    CHECK(mor_eq(compose(u, pb.pr2), q));
  }
  // Pullback along the identity recovers the source up to iso.
  const Obj x = cyclic(4);
  const Mor phi = datum_mor(x, cyclic(2), Matrix::from_int_rows(kZ, {{1}}));
  const PullbackData pb = pullback(phi, identity_mor(cyclic(2)));
  CHECK(is_iso(pb.pr1));
}
