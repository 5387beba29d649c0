#include <vector>

#include "doctest.h"
#include "freyd/freyd_cat.hpp"
#include "test_support.hpp"

using namespace freyd;
using namespace freyd::testing;

namespace {

const RingId kZ = RingId::integers();
using Kind = CategoryDescriptor::Kind;

Obj fp_obj(const RingId& ring, std::initializer_list<std::initializer_list<long>> rel,
           int range_rank) {
  Matrix m = Matrix::from_int_rows(ring, rel);
  if (m.rows() == 0) m = Matrix(ring, 0, range_rank);
  const DescriptorPtr rows = CategoryDescriptor::rows(ring);
  return Obj::freyd(Mor::rows(Obj::rows(rows, m.rows()),
                              Obj::rows(rows, range_rank), m));
}

// (Z <- (k)) over Z: the module Z/k.
Obj cyclic_obj(long k) { return fp_obj(kZ, {{k}}, 1); }

std::vector<DescriptorPtr> tower_descriptors() {
  const DescriptorPtr rows = CategoryDescriptor::rows(kZ);
  const DescriptorPtr f = CategoryDescriptor::freyd(rows);
  const DescriptorPtr of = CategoryDescriptor::op(f);
  const DescriptorPtr fof = CategoryDescriptor::freyd(of);
  return {rows, f, of, fof};
}

}  // namespace

TEST_CASE("descriptor capabilities are structural") {
  const auto rows = CategoryDescriptor::rows(kZ);
  CHECK(rows->has_weak_kernels());
  CHECK(rows->has_decidable_lifts());
  CHECK(!rows->is_abelian());
  const auto f = CategoryDescriptor::freyd(rows);
  CHECK(f->is_abelian());
  CHECK(f->has_decidable_lifts());
  const auto of = CategoryDescriptor::op(f);
  CHECK(of->is_abelian());
  const auto fof = CategoryDescriptor::freyd(of);
  CHECK(fof->is_abelian());
  CHECK(fof->to_string() == "FREYD(OP(FREYD(ROWS(Z))))");
}

TEST_CASE("compose at ROWS is matrix multiplication") {
  const DescriptorPtr rows = CategoryDescriptor::rows(kZ);
  const Obj r1 = Obj::rows(rows, 1);
  const Mor two = Mor::rows(r1, r1, Matrix::from_int_rows(kZ, {{2}}));
  const Mor three = Mor::rows(r1, r1, Matrix::from_int_rows(kZ, {{3}}));
  CHECK(compose(two, three).matrix() == Matrix::from_int_rows(kZ, {{6}}));
}

TEST_CASE("mor_eq in the Freyd layer is witnessed equality") {
  // Target (Z <- (2)); data 3 and 1 differ by 1*(2), data 3 and 0 do not.
  const Obj z2 = cyclic_obj(2);
  const Obj z = fp_obj(kZ, {}, 1);  // free module, no relations
  REQUIRE(z.relations_obj().rank() == 0);
  const auto d = [&](long v) {
    return freyd_morphism(
        z, z2,
        Mor::rows(z.range(), z2.range(), Matrix::from_int_rows(kZ, {{v}})));
  };
  const auto three = d(3);
  const auto one = d(1);
  const auto zero = d(0);
  REQUIRE(three);
  REQUIRE(one);
  REQUIRE(zero);
  CHECK(mor_eq(*three, *one));
  CHECK(!mor_eq(*three, *zero));
}

TEST_CASE("direct sums satisfy the biproduct identities") {
  std::mt19937_64 rng(5);
  for (const auto& desc : tower_descriptors()) {
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<Obj> objs;
      const int k = 1 + static_cast<int>(rng() % 3);
      for (int i = 0; i < k; ++i) objs.push_back(random_obj(rng, desc));
      const DirectSum ds = direct_sum(desc, objs);
      for (int i = 0; i < k; ++i) {
        CHECK(mor_eq(compose(ds.injections[i], ds.projections[i]),
                     identity_mor(objs[i])));
        for (int j = 0; j < k; ++j) {
          if (i == j) continue;
          CHECK(is_zero(compose(ds.injections[i], ds.projections[j])));
        }
      }
      Mor acc = zero_mor(ds.sum, ds.sum);
      for (int i = 0; i < k; ++i) {
        acc = add(acc, compose(ds.projections[i], ds.injections[i]));
      }
      CHECK(mor_eq(acc, identity_mor(ds.sum)));
    }
  }
  // ROWS: rank 2 (+) rank 3 = rank 5; empty sum is the zero object.
  const DescriptorPtr rows = CategoryDescriptor::rows(kZ);
  const Obj objs[] = {Obj::rows(rows, 2), Obj::rows(rows, 3)};
  CHECK(direct_sum(rows, objs).sum.rank() == 5);
  for (const auto& desc : tower_descriptors()) {
    CHECK(is_zero_obj(zero_obj(desc)));
  }
}

TEST_CASE("additive category axioms hold at every descriptor level") {
  std::mt19937_64 rng(99);
  const GenConfig cfg{2, 2};
  for (const auto& desc : tower_descriptors()) {
    const int trials = desc->kind() == Kind::rows ? 20 : 6;
    for (int t = 0; t < trials; ++t) {
      const Obj a = random_obj(rng, desc, cfg);
      const Mor f = random_mor_from(rng, a, cfg);
      const Mor g = random_mor_from(rng, f.target(), cfg);
      const Mor h = random_mor_from(rng, g.target(), cfg);
      // associativity and identity laws
      CHECK(mor_eq(compose(compose(f, g), h), compose(f, compose(g, h))));
      CHECK(mor_eq(compose(identity_mor(a), f), f));
      CHECK(mor_eq(compose(f, identity_mor(f.target())), f));
      // additive group laws on Hom(a, target(f))
      const Mor f2 = perturb_representative(rng, f, cfg);
      const Mor z = zero_mor(a, f.target());
      CHECK(mor_eq(add(f, z), f));
      CHECK(mor_eq(add(f, negate(f)), z));
      CHECK(mor_eq(add(f, f2), add(f2, f)));
      // bilinearity of composition
      CHECK(mor_eq(compose(add(f, f2), g),
                   add(compose(f, g), compose(f2, g))));
      const Mor g2 = perturb_representative(rng, g, cfg);
      CHECK(mor_eq(compose(f, add(g, g2)),
                   add(compose(f, g), compose(f, g2))));
      // mor_eq is a congruence: perturbed representatives compose equally
      CHECK(mor_eq(compose(f2, g2), compose(f, g)));
    }
  }
}

TEST_CASE("weak kernels at ROWS: worked examples") {
  const DescriptorPtr rows = CategoryDescriptor::rows(kZ);
  const Obj r1 = Obj::rows(rows, 1);
  const Obj r2 = Obj::rows(rows, 2);
  const Mor alpha = Mor::rows(r2, r1, Matrix::from_int_rows(kZ, {{2}, {3}}));
  const WeakKernel wk = weak_kernel(alpha);
  CHECK(wk.obj.rank() == 1);
  CHECK(is_zero(compose(wk.embedding, alpha)));
  // tau = (6, -4) = 2*(3, -2) lifts through kappa.
  const Mor tau = Mor::rows(r1, r2, Matrix::from_int_rows(kZ, {{6, -4}}));
  const Mor u = weak_kernel_lift(alpha, wk, tau);
  CHECK(mor_eq(compose(u, wk.embedding), tau));

  CHECK(weak_kernel(identity_mor(r2)).obj.rank() == 0);
  CHECK_THROWS_AS(
      weak_kernel_lift(alpha, wk,
                       Mor::rows(r1, r2, Matrix::from_int_rows(kZ, {{1, 0}}))),
      std::invalid_argument);
}

TEST_CASE("weak kernel contract at every level") {
  std::mt19937_64 rng(17);
  const GenConfig cfg{2, 2};
  for (const auto& desc : tower_descriptors()) {
    const int trials = desc->kind() == Kind::rows ? 15 : 5;
    for (int t = 0; t < trials; ++t) {
      const Mor alpha = random_mor(rng, desc, cfg);
      const WeakKernel wk = weak_kernel(alpha);
      CHECK(is_zero(compose(wk.embedding, alpha)));
      const Mor u0 = random_mor_into(rng, wk.obj, cfg);
      const Mor tau = compose(u0, wk.embedding);
      const Mor u = weak_kernel_lift(alpha, wk, tau);
      CHECK(mor_eq(compose(u, wk.embedding), tau));
    }
  }
}

TEST_CASE("weak pullbacks: worked examples over Z") {
  const DescriptorPtr rows = CategoryDescriptor::rows(kZ);
  const Obj r1 = Obj::rows(rows, 1);
  const Mor two = Mor::rows(r1, r1, Matrix::from_int_rows(kZ, {{2}}));
  const Mor three = Mor::rows(r1, r1, Matrix::from_int_rows(kZ, {{3}}));
  const WeakPullback wp = weak_pullback(two, three);
  CHECK(wp.obj.rank() == 1);
  CHECK(mor_eq(compose(wp.pr1, two), compose(wp.pr2, three)));
  // 2x = 3y has solution lattice generated by (3, 2).
  const Mor p = Mor::rows(r1, r1, Matrix::from_int_rows(kZ, {{6}}));
  const Mor q = Mor::rows(r1, r1, Matrix::from_int_rows(kZ, {{4}}));
  const Mor u = weak_pullback_lift(wp, p, q);
  CHECK(mor_eq(compose(u, wp.pr1), p));
  CHECK(mor_eq(compose(u, wp.pr2), q));
  // gamma = id: pr1 . two = pr2 . id = pr2.
  const WeakPullback wpi = weak_pullback(two, identity_mor(r1));
  CHECK(mor_eq(compose(wpi.pr1, two), wpi.pr2));
}

TEST_CASE("lift and colift at ROWS") {
  const DescriptorPtr rows = CategoryDescriptor::rows(kZ);
  const Obj r1 = Obj::rows(rows, 1);
  const auto m = [&](long v) {
    return Mor::rows(r1, r1, Matrix::from_int_rows(kZ, {{v}}));
  };
  const auto l = lift(m(4), m(2));
  REQUIRE(l);
  CHECK(mor_eq(compose(*l, m(2)), m(4)));
  CHECK(!lift(m(3), m(2)));
  const auto c = colift(m(4), m(2));
  REQUIRE(c);
  CHECK(mor_eq(compose(m(2), *c), m(4)));
  CHECK(!colift(m(3), m(2)));
}

TEST_CASE("double opposite behaves like the base category") {
  std::mt19937_64 rng(31);
  const GenConfig cfg{2, 2};
  const DescriptorPtr f = CategoryDescriptor::freyd(CategoryDescriptor::rows(kZ));
  const DescriptorPtr oof = CategoryDescriptor::op(CategoryDescriptor::op(f));
  for (int t = 0; t < 5; ++t) {
    const Mor inner = random_mor(rng, f, cfg);
    const Obj s2 = Obj::op(Obj::op(inner.source()));
    const Obj t2 = Obj::op(Obj::op(inner.target()));
    const Mor wrapped = Mor::op(s2, t2, Mor::op(Obj::op(inner.target()),
                                                Obj::op(inner.source()),
                                                inner));
    CHECK(same_descriptor(wrapped.descriptor(), oof));
    CHECK(is_mono(wrapped) == is_mono(inner));
    CHECK(is_epi(wrapped) == is_epi(inner));
    CHECK(is_zero(wrapped) == is_zero(inner));
    const KernelData k2 = kernel(wrapped);
    const KernelData k1 = kernel(inner);
    CHECK(is_zero_obj(k2.obj) == is_zero_obj(k1.obj));
  }
}

TEST_CASE("is_mono in OP is is_epi inside") {
  std::mt19937_64 rng(77);
  const DescriptorPtr f = CategoryDescriptor::freyd(CategoryDescriptor::rows(kZ));
  for (int t = 0; t < 6; ++t) {
    const Mor inner = random_mor(rng, f, GenConfig{2, 2});
    const Mor wrapped = Mor::op(Obj::op(inner.target()),
                                Obj::op(inner.source()), inner);
    CHECK(is_mono(wrapped) == is_epi(inner));
    CHECK(is_epi(wrapped) == is_mono(inner));
  }
}
