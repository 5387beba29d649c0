#include "freyd/hom_structure.hpp"

#include "detail.hpp"
#include "freyd/freyd_cat.hpp"

namespace freyd {

namespace {

using Kind = CategoryDescriptor::Kind;

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

Matrix flatten_row_major(const Matrix& m) {
  Matrix out(m.ring(), 1, m.rows() * m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out(0, i * m.cols() + j) = m(i, j);
  }
  return out;
}

Matrix unflatten_row_major(const Matrix& row, int rows, int cols) {
  require(row.rows() == 1 && row.cols() == rows * cols,
          "unflatten shape mismatch");
  Matrix out(row.ring(), rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) out(i, j) = row(0, i * cols + j);
  }
  return out;
}

// H(a, b) = (rank a*b <- 0) in FREYD(ROWS(R)); nu is row-major flattening.
class RowsHomStructure final : public HomStructure {
 public:
  explicit RowsHomStructure(const RingId& ring)
      : HomStructure(CategoryDescriptor::rows(ring),
                     CategoryDescriptor::freyd(CategoryDescriptor::rows(ring)),
                     Obj()),
        ring_(ring) {
    one_ = free_obj(1);
  }

  Obj free_obj(int rank) const {
    const Obj zero = Obj::rows(domain_, 0);
    const Obj range = Obj::rows(domain_, rank);
    return Obj::freyd(Mor::rows(zero, range, Matrix(ring_, 0, rank)));
  }

  Obj hom_obj(const Obj& x, const Obj& y) const override {
    return free_obj(x.rank() * y.rank());
  }

  Mor hom_mor(const Mor& alpha, const Mor& beta) const override {
    // alpha : A' -> A contravariant, beta : B -> B'; the matrix acts on
    // row-major flattenings: nu(a.X.b) = nu(X) . kron(a^T, b).
    const Obj src = hom_obj(alpha.target(), beta.source());
    const Obj tgt = hom_obj(alpha.source(), beta.target());
    const Matrix mat = kronecker(alpha.matrix().transposed(), beta.matrix());
    return Mor::freyd(src, tgt,
                      Mor::rows(src.range(), tgt.range(), mat),
                      zero_mor(src.relations_obj(), tgt.relations_obj()));
  }

  Mor externalize(const Mor& x) const override {
    const Obj h = hom_obj(x.source(), x.target());
    return Mor::freyd(one_, h,
                      Mor::rows(one_.range(), h.range(),
                                flatten_row_major(x.matrix())),
                      zero_mor(one_.relations_obj(), h.relations_obj()));
  }

  Mor internalize(const Obj& x, const Obj& y, const Mor& m) const override {
    const Matrix mat =
        unflatten_row_major(m.datum().matrix(), x.rank(), y.rank());
    return Mor::rows(x, y, mat);
  }

 private:
  RingId ring_;
};

// Induced structure on FREYD(d) from a structure on d with abelian codomain
// and projective distinguished object.
class FreydHomStructure final : public HomStructure {
 public:
  explicit FreydHomStructure(HomStructurePtr inner)
      : HomStructure(CategoryDescriptor::freyd(inner->domain()),
                     inner->codomain(), inner->one()),
        inner_(std::move(inner)) {
    require(codomain_->is_abelian(),
            "freyd_hom_structure: codomain must be abelian");
    require(codomain_->kind() == Kind::freyd &&
                detail::structurally_zero(one_.relations_obj()),
            "freyd_hom_structure: distinguished object must be projective");
  }

  struct Parts {
    Mor m1;           // H(A, rho_B)
    CokernelData c1;  // Q1 = coker m1
    Mor tbar;         // induced H(rho_A, B) on the quotients: Q1 -> Q2
    KernelData kd;    // kernel of tbar; its object is the hom object
  };

  Parts parts(const Obj& x, const Obj& y) const {
    const Obj ax = x.range();
    const Obj rx = x.relations_obj();
    const Obj by = y.range();
    const Mor m1 = inner_->hom_mor(identity_mor(ax), y.relation());
    CokernelData c1 = cokernel(m1);
    const Mor m2 = inner_->hom_mor(identity_mor(rx), y.relation());
    CokernelData c2 = cokernel(m2);
    const Mor t = inner_->hom_mor(x.relation(), identity_mor(by));
    const Mor tbar =
        cokernel_colift(m1, c1, compose(t, c2.projection));
    KernelData kd = kernel(tbar);
    return Parts{m1, std::move(c1), tbar, std::move(kd)};
  }

  Obj hom_obj(const Obj& x, const Obj& y) const override {
    return parts(x, y).kd.obj;
  }

  Mor hom_mor(const Mor& alpha, const Mor& beta) const override {
    // alpha : X' -> X contravariant, beta : Y -> Y'.
    const Parts from = parts(alpha.target(), beta.source());
    const Parts to = parts(alpha.source(), beta.target());
    const Mor u = inner_->hom_mor(alpha.datum(), beta.datum());
    const Mor ubar =
        cokernel_colift(from.m1, from.c1, compose(u, to.c1.projection));
    return kernel_lift(to.tbar, to.kd,
                       compose(from.kd.embedding, ubar));
  }

  Mor externalize(const Mor& phi) const override {
    const Parts p = parts(phi.source(), phi.target());
    const Mor tau =
        compose(inner_->externalize(phi.datum()), p.c1.projection);
    return kernel_lift(p.tbar, p.kd, tau);
  }

  Mor internalize(const Obj& x, const Obj& y, const Mor& m) const override {
    const Parts p = parts(x, y);
    const Mor tau = compose(m, p.kd.embedding);  // one -> Q1
    // Preimage along the cokernel projection; exists since one is projective.
    const auto pre = lift(tau, p.c1.projection);
    require(pre.has_value(),
            "internalize: projective lift along the quotient failed");
    const Mor datum = inner_->internalize(x.range(), y.range(), *pre);
    auto result = freyd_morphism(x, y, datum);
    require(result.has_value(), "internalize produced an ill-defined datum");
    return *result;
  }

 private:
  HomStructurePtr inner_;
};

// Structure for OP(d): swap the bifunctor arguments.
class OpHomStructure final : public HomStructure {
 public:
  explicit OpHomStructure(HomStructurePtr inner)
      : HomStructure(CategoryDescriptor::op(inner->domain()),
                     inner->codomain(), inner->one()),
        inner_(std::move(inner)) {}

  Obj hom_obj(const Obj& x, const Obj& y) const override {
    return inner_->hom_obj(y.op_inner(), x.op_inner());
  }

  Mor hom_mor(const Mor& alpha, const Mor& beta) const override {
    return inner_->hom_mor(beta.op_inner(), alpha.op_inner());
  }

  Mor externalize(const Mor& x) const override {
    return inner_->externalize(x.op_inner());
  }

  Mor internalize(const Obj& x, const Obj& y, const Mor& m) const override {
    const Mor inner_mor =
        inner_->internalize(y.op_inner(), x.op_inner(), m);
    return Mor::op(x, y, inner_mor);
  }

 private:
  HomStructurePtr inner_;
};

}  // namespace

HomStructurePtr rows_hom_structure(const RingId& ring) {
  return std::make_shared<RowsHomStructure>(ring);
}

HomStructurePtr freyd_hom_structure(HomStructurePtr inner) {
  return std::make_shared<FreydHomStructure>(std::move(inner));
}

HomStructurePtr op_hom_structure(HomStructurePtr inner) {
  return std::make_shared<OpHomStructure>(std::move(inner));
}

HomStructurePtr hom_structure_for(const DescriptorPtr& desc) {
  switch (desc->kind()) {
    case Kind::rows:
      return rows_hom_structure(desc->ring());
    case Kind::freyd:
      return freyd_hom_structure(hom_structure_for(desc->inner()));
    case Kind::op:
      return op_hom_structure(hom_structure_for(desc->inner()));
  }
  throw std::logic_error("unreachable");
}

}  // namespace freyd
