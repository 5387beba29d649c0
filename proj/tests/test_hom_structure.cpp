#include "doctest.h"
#include "freyd/hom_structure.hpp"
#include "freyd/linear_system.hpp"
#include "test_support.hpp"

using namespace freyd;
using namespace freyd::testing;

namespace {

const RingId kZ = RingId::integers();

std::vector<DescriptorPtr> tower() {
  const DescriptorPtr rows = CategoryDescriptor::rows(kZ);
  const DescriptorPtr f = CategoryDescriptor::freyd(rows);
  const DescriptorPtr of = CategoryDescriptor::op(f);
  const DescriptorPtr fof = CategoryDescriptor::freyd(of);
  return {rows, f, of, fof};
}

}  // namespace

TEST_CASE("base structure on ROWS: worked examples") {
  const auto hs = rows_hom_structure(kZ);
  const DescriptorPtr rows = CategoryDescriptor::rows(kZ);
  CHECK(hs->hom_obj(Obj::rows(rows, 2), Obj::rows(rows, 3)).range().rank() == 6);
  // nu of the 2x2 identity is the row-major flattening (1,0,0,1).
  const Obj r2 = Obj::rows(rows, 2);
  const Mor nu = hs->externalize(identity_mor(r2));
  CHECK(nu.datum().matrix() == Matrix::from_int_rows(kZ, {{1, 0, 0, 1}}));
  CHECK(mor_eq(hs->internalize(r2, r2, nu), identity_mor(r2)));
}

TEST_CASE("naturality and round trips at every descriptor level") {
  std::mt19937_64 rng(42);
  const GenConfig cfg{2, 2};
  for (const auto& desc : tower()) {
    const auto hs = hom_structure_for(desc);
    const int trials = desc->kind() == CategoryDescriptor::Kind::rows  ? 15
                       : desc->kind() == CategoryDescriptor::Kind::freyd &&
                               desc->inner()->kind() ==
                                   CategoryDescriptor::Kind::rows
                           ? 8
                           : 3;
    for (int t = 0; t < trials; ++t) {
      const Mor alpha = random_mor(rng, desc, cfg);
      const Mor x = random_mor_from(rng, alpha.target(), cfg);
      const Mor beta = random_mor_from(rng, x.target(), cfg);
      // nu(alpha . x . beta) = nu(x) . H(alpha, beta)
      const Mor lhs = hs->externalize(compose(compose(alpha, x), beta));
      const Mor rhs = compose(hs->externalize(x), hs->hom_mor(alpha, beta));
      CHECK(mor_eq(lhs, rhs));
      // nu^{-1}(nu(x)) = x
      const Mor back =
          hs->internalize(x.source(), x.target(), hs->externalize(x));
      CHECK(mor_eq(back, x));
      // nu(nu^{-1}(m)) = m for a perturbed externalized morphism
      const Mor m = perturb_representative(rng, hs->externalize(x), cfg);
      const Mor inner = hs->internalize(x.source(), x.target(), m);
      CHECK(mor_eq(hs->externalize(inner), m));
    }
  }
}

TEST_CASE("bifunctor interchange at every descriptor level") {
  std::mt19937_64 rng(43);
  const GenConfig cfg{2, 2};
  for (const auto& desc : tower()) {
    const auto hs = hom_structure_for(desc);
    const int trials = desc->kind() == CategoryDescriptor::Kind::rows ? 10 : 3;
    for (int t = 0; t < trials; ++t) {
      // contravariant chain a2 : A'' -> A', a1 : A' -> A
      const Mor a2 = random_mor(rng, desc, cfg);
      const Mor a1 = random_mor_from(rng, a2.target(), cfg);
      // covariant chain b1 : B -> B', b2 : B' -> B''
      const Mor b1 = random_mor(rng, desc, cfg);
      const Mor b2 = random_mor_from(rng, b1.target(), cfg);
      const Mor lhs = hs->hom_mor(compose(a2, a1), compose(b1, b2));
      const Mor rhs = compose(hs->hom_mor(a1, b1), hs->hom_mor(a2, b2));
      CHECK(mor_eq(lhs, rhs));
      // identities map to identities
      const Obj ha = hs->hom_obj(a1.target(), b1.source());
      CHECK(mor_eq(hs->hom_mor(identity_mor(a1.target()),
                               identity_mor(b1.source())),
                   identity_mor(ha)));
    }
  }
}

TEST_CASE("solver via the induced structure agrees with layered reduction") {
  std::mt19937_64 rng(44);
  const GenConfig cfg{2, 2};
  const DescriptorPtr desc =
      CategoryDescriptor::freyd(CategoryDescriptor::rows(kZ));
  const auto hs = hom_structure_for(desc);
  for (int t = 0; t < 6; ++t) {
    // Build a one-or-two unknown system; half the time with a planted
    // solution, half with a random right-hand side.
    LinearSystem sys;
    sys.desc = desc;
    const std::size_t n = 1 + t % 2;
    std::vector<Mor> xs;
    for (std::size_t j = 0; j < n; ++j) {
      const Mor x = random_mor(rng, desc, cfg);
      xs.push_back(x);
      sys.unknown_sources.push_back(x.source());
      sys.unknown_targets.push_back(x.target());
    }
    sys.left.assign(1, std::vector<std::optional<Mor>>(n));
    sys.right.assign(1, std::vector<std::optional<Mor>>(n));
    const Obj a = random_obj(rng, desc, cfg);
    const Obj d = random_obj(rng, desc, cfg);
    sys.eq_sources = {a};
    sys.eq_targets = {d};
    Mor gamma = zero_mor(a, d);
    for (std::size_t j = 0; j < n; ++j) {
      const Mor alpha = random_mor_between(rng, a, xs[j].source(), cfg);
      const Mor beta = random_mor_between(rng, xs[j].target(), d, cfg);
      sys.left[0][j] = alpha;
      sys.right[0][j] = beta;
      gamma = add(gamma, compose(compose(alpha, xs[j]), beta));
    }
    if (t % 2 == 0) {
      sys.rhs = {gamma};
    } else {
      sys.rhs = {random_mor_between(rng, a, d, cfg)};
    }
    const auto direct = solve_linear_system(sys);
    const auto via_structure = solve_linear_system(sys, *hs);
    CHECK(direct.has_value() == via_structure.has_value());
    if (direct) CHECK(verifies(sys, *direct));
    if (via_structure) CHECK(verifies(sys, *via_structure));
  }
}
