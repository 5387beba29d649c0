#include "freyd/homological.hpp"

#include <sstream>

#include "freyd/freyd_cat.hpp"
#include "freyd/hom_structure.hpp"

namespace freyd {

namespace {

using Kind = CategoryDescriptor::Kind;

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

const RingId& ring_of(const Obj& m) { return m.descriptor()->base_ring(); }

void require_fpmod(const Obj& m, const char* who) {
  require(m.kind() == Kind::freyd &&
              m.descriptor()->inner()->kind() == Kind::rows,
          who);
}

Matrix relation_matrix(const Obj& m) { return m.relation().matrix(); }

Variance variance_of(const Obj& f) {
  const auto& d = *f.descriptor();
  require(d.kind() == Kind::freyd, "not a functor object");
  if (d.inner()->kind() == Kind::op) return Variance::covariant;
  return Variance::contravariant;
}

}  // namespace

DescriptorPtr fpmod_descriptor(const RingId& ring) {
  return CategoryDescriptor::freyd(CategoryDescriptor::rows(ring));
}

DescriptorPtr functor_descriptor(const RingId& ring, Variance variance) {
  const DescriptorPtr fp = fpmod_descriptor(ring);
  if (variance == Variance::covariant) {
    return CategoryDescriptor::freyd(CategoryDescriptor::op(fp));
  }
  return CategoryDescriptor::freyd(fp);
}

Obj present_module(const Matrix& relations) {
  const DescriptorPtr rows = CategoryDescriptor::rows(relations.ring());
  return Obj::freyd(Mor::rows(Obj::rows(rows, relations.rows()),
                              Obj::rows(rows, relations.cols()), relations));
}

Obj free_module(const RingId& ring, int rank) {
  return present_module(Matrix(ring, 0, rank));
}

Mor free_cover(const Obj& m) {
  require_fpmod(m, "free_cover expects a finitely presented module");
  const Obj cover = free_module(ring_of(m), m.range().rank());
  return Mor::freyd(cover, m, identity_mor(m.range()),
                    zero_mor(cover.relations_obj(), m.relations_obj()));
}

std::string ModuleInvariants::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  const char* base = ring.kind() == RingKind::rationals ? "Q" : "Z";
  if (free_rank > 0) {
    os << base;
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const auto& d : torsion) {
    if (!first) os << " ⊕ ";
    os << "Z/" << d.get_str();
    first = false;
  }
  return os.str();
}

ModuleInvariants module_invariants(const Obj& m) {
  require_fpmod(m, "module_invariants expects a finitely presented module");
  ModuleInvariants inv;
  inv.ring = ring_of(m);
  const Matrix rel = relation_matrix(m);
  switch (inv.ring.kind()) {
    case RingKind::rationals: {
      inv.free_rank = rel.cols() - field_echelon(rel).rank;
      return inv;
    }
    case RingKind::integers: {
      const SmithResult sn = smith_normal_form(rel);
      int nonzero = 0;
      for (int i = 0; i < std::min(rel.rows(), rel.cols()); ++i) {
        const mpz_class& d = sn.s(i, i).num();
        if (d != 0) ++nonzero;
        if (d >= 2) inv.torsion.push_back(d);
      }
      inv.free_rank = rel.cols() - nonzero;
      return inv;
    }
    case RingKind::residues: {
      const mpz_class& n = inv.ring.modulus();
      const Matrix lifted =
          vstack(lift_to_integers(rel),
                 Matrix::identity(RingId::integers(), rel.cols()) *
                     RingElement(RingId::integers(), n));
      const SmithResult sn = smith_normal_form(lifted);
      for (int i = 0; i < rel.cols(); ++i) {
        const mpz_class& d = sn.s(i, i).num();
        if (d >= 2) inv.torsion.push_back(d);
      }
      inv.free_rank = 0;
      return inv;
    }
  }
  throw std::logic_error("unreachable");
}

Obj hom_module(const Obj& m, const Obj& n) {
  require_fpmod(m, "hom_module expects finitely presented modules");
  require(same_descriptor(m.descriptor(), n.descriptor()),
          "hom_module: ring mismatch");
  const auto hs = hom_structure_for(m.descriptor());
  return hs->hom_obj(m, n);
}

Obj tensor_module(const Obj& m, const Obj& n) {
  require_fpmod(m, "tensor_module expects finitely presented modules");
  require(same_descriptor(m.descriptor(), n.descriptor()),
          "tensor_module: ring mismatch");
  const RingId& ring = ring_of(m);
  const Matrix a = relation_matrix(m);
  const Matrix b = relation_matrix(n);
  const Matrix rel = vstack(kronecker(a, Matrix::identity(ring, b.cols())),
                            kronecker(Matrix::identity(ring, a.cols()), b));
  return present_module(rel);
}

Mor tensor_with(const Mor& f, const Obj& n) {
  const Obj src = tensor_module(f.source(), n);
  const Obj tgt = tensor_module(f.target(), n);
  const RingId& ring = ring_of(n);
  const Matrix x = f.datum().matrix();
  const Matrix datum =
      kronecker(x, Matrix::identity(ring, n.range().rank()));
  auto result = freyd_morphism(
      src, tgt, Mor::rows(src.range(), tgt.range(), datum));
  if (!result) {
    throw std::logic_error("tensor_with produced an ill-defined morphism");
  }
  return *result;
}

FreeResolutionSegment resolution(const Obj& m, int index) {
  require_fpmod(m, "resolution expects a finitely presented module");
  require(index >= 1, "resolution index must be positive");
  FreeResolutionSegment seg;
  seg.module = m;
  seg.index = index;
  std::vector<Matrix> chain;
  chain.push_back(relation_matrix(m));
  for (int j = 1; j <= index; ++j) chain.push_back(row_syzygies(chain[j - 1]));
  seg.free_ranks.push_back(chain[0].cols());
  for (int j = 1; j < index; ++j) seg.free_ranks.push_back(chain[j - 1].rows());
  for (int j = 0; j < index; ++j) seg.differentials.push_back(chain[j]);
  seg.syzygy = present_module(chain[index]);
  const Obj last_free = free_module(ring_of(m), seg.free_ranks[index - 1]);
  seg.embedding = Mor::freyd(
      seg.syzygy, last_free,
      Mor::rows(seg.syzygy.range(), last_free.range(), chain[index - 1]),
      zero_mor(seg.syzygy.relations_obj(), last_free.relations_obj()));
  return seg;
}

Obj ext_module(const Obj& a, const Obj& b, int i) {
  require(i >= 0, "negative Ext index");
  if (i == 0) return hom_module(a, b);
  const FreeResolutionSegment seg = resolution(a, i);
  const auto hs = hom_structure_for(a.descriptor());
  const Mor induced = hs->hom_mor(seg.embedding, identity_mor(b));
  return cokernel(induced).obj;
}

Obj tor_module(const Obj& m, const Obj& n, int i) {
  require(i >= 0, "negative Tor index");
  if (i == 0) return tensor_module(m, n);
  const FreeResolutionSegment seg = resolution(m, i);
  return kernel(tensor_with(seg.embedding, n)).obj;
}

Obj representable_functor(const Obj& m, Variance variance) {
  require_fpmod(m, "representable_functor expects a module");
  if (variance == Variance::contravariant) {
    return Obj::freyd(zero_mor(zero_obj(m.descriptor()), m));
  }
  const Obj zero = zero_obj(m.descriptor());
  return Obj::freyd(
      Mor::op(Obj::op(zero), Obj::op(m), zero_mor(m, zero)));
}

Obj ext_functor_obj(const Obj& a, int i) {
  require(i >= 1, "ext_functor_obj requires i >= 1");
  const FreeResolutionSegment seg = resolution(a, i);
  const Obj p = seg.embedding.target();
  // Object (Omega^i A  ->  P_{i-1}) of FREYD(OP(fpmod)).
  return Obj::freyd(Mor::op(Obj::op(p), Obj::op(seg.syzygy), seg.embedding));
}

namespace {

// The tensor representation (P_0^v -> P_1^v) of M (x) -, dualizing the free
// presentation by matrix transposition (commutative base ring).
Obj tensor_representation(const Obj& m) {
  const RingId& ring = ring_of(m);
  const Matrix rel = relation_matrix(m);
  const Obj p0v = free_module(ring, rel.cols());
  const Obj p1v = free_module(ring, rel.rows());
  const Mor dual = Mor::freyd(
      p0v, p1v, Mor::rows(p0v.range(), p1v.range(), rel.transposed()),
      zero_mor(p0v.relations_obj(), p1v.relations_obj()));
  return Obj::freyd(Mor::op(Obj::op(p1v), Obj::op(p0v), dual));
}

// Functoriality of the tensor representation: a module map f yields a map of
// the representing objects, dualizing datum and witness.
Mor tensor_representation_mor(const Mor& f) {
  const Obj src = tensor_representation(f.source());
  const Obj tgt = tensor_representation(f.target());
  const Obj sr = src.range().op_inner();      // P_0(M)^v
  const Obj tr = tgt.range().op_inner();      // P_0(N)^v
  const Obj ss = src.relations_obj().op_inner();
  const Obj ts = tgt.relations_obj().op_inner();
  const Matrix d = f.datum().matrix().transposed();
  const Matrix w = f.witness().matrix().transposed();
  const Mor datum_inner = Mor::freyd(
      tr, sr, Mor::rows(tr.range(), sr.range(), d),
      zero_mor(tr.relations_obj(), sr.relations_obj()));
  const Mor witness_inner = Mor::freyd(
      ts, ss, Mor::rows(ts.range(), ss.range(), w),
      zero_mor(ts.relations_obj(), ss.relations_obj()));
  return Mor::freyd(src, tgt,
                    Mor::op(src.range(), tgt.range(), datum_inner),
                    Mor::op(src.relations_obj(), tgt.relations_obj(),
                            witness_inner));
}

}  // namespace

Obj tor_functor_obj(const Obj& m, int i) {
  require(i >= 0, "negative Tor index");
  if (i == 0) return tensor_representation(m);
  const FreeResolutionSegment seg = resolution(m, i);
  return kernel(tensor_representation_mor(seg.embedding)).obj;
}

Obj nat_hom(const Obj& f, const Obj& g) {
  if (!same_descriptor(f.descriptor(), g.descriptor())) {
    throw std::invalid_argument("nat_hom: variance/descriptor mismatch");
  }
  const auto hs = hom_structure_for(f.descriptor());
  return hs->hom_obj(f, g);
}

std::vector<Mor> nat_hom_generators(const Obj& f, const Obj& g) {
  if (!same_descriptor(f.descriptor(), g.descriptor())) {
    throw std::invalid_argument("nat_hom_generators: descriptor mismatch");
  }
  const auto hs = hom_structure_for(f.descriptor());
  const Obj h = hs->hom_obj(f, g);
  const int gens = h.range().rank();
  std::vector<Mor> out;
  const RingId& ring = ring_of(f);
  for (int t = 0; t < gens; ++t) {
    Matrix unit(ring, 1, gens);
    unit(0, t) = RingElement::one(ring);
    const Mor row = Mor::freyd(
        hs->one(), h,
        Mor::rows(hs->one().range(), h.range(), unit),
        zero_mor(hs->one().relations_obj(), h.relations_obj()));
    out.push_back(hs->internalize(f, g, row));
  }
  return out;
}

bool decide_left_exact(const Obj& f) {
  require(variance_of(f) == Variance::contravariant,
          "decide_left_exact expects a contravariant functor object");
  const Mor rho = f.relation();  // a morphism of fp modules
  const CokernelData cd = cokernel(rho);
  const Obj target = Obj::freyd(
      zero_mor(zero_obj(rho.descriptor()), cd.obj));
  const Mor comparison = Mor::freyd(
      f, target, cd.projection,
      zero_mor(f.relations_obj(), target.relations_obj()));
  return is_iso(comparison);
}

Mor injective_embedding(const Obj& x) {
  require(variance_of(x) == Variance::covariant,
          "injective_embedding expects a covariant functor object");
  const Mor rho_in = x.relation().op_inner();  // A -> R_A in fpmod
  const Obj a = x.range().op_inner();
  const Obj ra = x.relations_obj().op_inner();
  const Mor eps_q = free_cover(ra);
  const Obj q = eps_q.source();
  const PullbackData pb = pullback(rho_in, eps_q);
  const Mor eps_p = free_cover(pb.obj);
  const Obj p = eps_p.source();
  const Mor rho_p = compose(eps_p, pb.pr2);  // P -> Q
  const Obj inj = Obj::freyd(Mor::op(Obj::op(q), Obj::op(p), rho_p));
  const Mor datum = Mor::op(x.range(), inj.range(), compose(eps_p, pb.pr1));
  const Mor witness = Mor::op(x.relations_obj(), inj.relations_obj(), eps_q);
  return Mor::freyd(x, inj, datum, witness);
}

bool decide_right_exact(const Obj& x) {
  const Mor emb = injective_embedding(x);
  return colift(identity_mor(x), emb).has_value();
}

}  // namespace freyd
