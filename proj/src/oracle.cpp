#include "freyd/oracle.hpp"

#include <algorithm>
#include <set>

namespace freyd::oracle {

namespace {

Vec vec_add(const Vec& a, const Vec& b, unsigned long n) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) % n;
  return out;
}

Vec vec_scale(unsigned long c, const Vec& a, unsigned long n) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = (c % n) * a[i] % n;
  return out;
}

std::set<Vec> closure(const std::vector<Vec>& gens, int rank,
                      unsigned long n, std::size_t bound) {
  std::set<Vec> out;
  out.insert(Vec(rank, 0));
  std::vector<Vec> frontier(out.begin(), out.end());
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const Vec& e : frontier) {
      for (const Vec& g : gens) {
        Vec s = vec_add(e, g, n);
        if (out.insert(s).second) {
          if (out.size() > bound) {
            throw ResourceError("finite module closure exceeds bound");
          }
          next.push_back(std::move(s));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

FiniteModule FiniteModule::from_presentation(unsigned long modulus, int rank,
                                             const std::vector<Vec>& relations,
                                             std::size_t bound) {
  double total = 1;
  for (int i = 0; i < rank; ++i) total *= static_cast<double>(modulus);
  if (total > static_cast<double>(bound)) {
    throw ResourceError("ambient module exceeds enumeration bound");
  }
  std::vector<Vec> ambient_gens;
  for (int i = 0; i < rank; ++i) {
    Vec e(rank, 0);
    e[i] = 1;
    ambient_gens.push_back(e);
  }
  return subquotient(modulus, rank, ambient_gens, relations, bound);
}

FiniteModule FiniteModule::subquotient(unsigned long modulus, int rank,
                                       const std::vector<Vec>& group_gens,
                                       const std::vector<Vec>& denominator_gens,
                                       std::size_t bound) {
  if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
  FiniteModule m;
  m.modulus_ = modulus;
  m.rank_ = rank;
  const auto t = closure(group_gens, rank, modulus, bound);
  const auto s = closure(denominator_gens, rank, modulus, bound);
  m.group_.assign(t.begin(), t.end());
  std::vector<Vec> denom(s.begin(), s.end());
  // Walk T in ascending order; the first unseen member of a coset is its
  // canonical representative.
  for (const Vec& x : m.group_) {
    if (m.rep_.count(x)) continue;
    m.elements_.push_back(x);
    for (const Vec& d : denom) {
      m.rep_.emplace(vec_add(x, d, modulus), x);
    }
  }
  m.zero_ = m.rep_.at(Vec(rank, 0));
  // Greedy generating set with BFS coordinates.
  m.coords_[m.zero_] = {};
  for (const Vec& e : m.elements_) {
    if (m.coords_.count(e)) continue;
    m.generators_.push_back(e);
    // Re-run the coordinate BFS over all current generators.
    std::map<Vec, std::vector<unsigned long>> coords;
    coords[m.zero_] = std::vector<unsigned long>(m.generators_.size(), 0);
    std::vector<Vec> frontier{m.zero_};
    while (!frontier.empty()) {
      std::vector<Vec> next;
      for (const Vec& x : frontier) {
        for (std::size_t gi = 0; gi < m.generators_.size(); ++gi) {
          const Vec y = m.rep_.at(vec_add(x, m.generators_[gi], modulus));
          if (coords.count(y)) continue;
          auto c = coords.at(x);
          ++c[gi];
          coords.emplace(y, std::move(c));
          next.push_back(y);
        }
      }
      frontier = std::move(next);
    }
    m.coords_ = std::move(coords);
  }
  return m;
}

const Vec& FiniteModule::reduce(const Vec& x) const {
  auto it = rep_.find(x);
  if (it == rep_.end()) {
    throw std::invalid_argument("element outside the enumerated group");
  }
  return it->second;
}

Vec FiniteModule::add(const Vec& a, const Vec& b) const {
  return reduce(vec_add(a, b, modulus_));
}

Vec FiniteModule::scale(unsigned long c, const Vec& a) const {
  return reduce(vec_scale(c, a, modulus_));
}

const std::vector<unsigned long>& FiniteModule::coordinates(
    const Vec& element) const {
  return coords_.at(element);
}

std::vector<mpz_class> FiniteModule::invariant_factors() const {
  // Element-order census, one prime of the modulus at a time: the number of
  // p-power-order cyclic factors with exponent >= j is
  // log_p #{x : p^j x = 0} - log_p #{x : p^{j-1} x = 0}.
  std::vector<std::pair<unsigned long, std::vector<int>>> per_prime;
  unsigned long n = modulus_;
  for (unsigned long p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    std::vector<int> lambda{0};
    unsigned long pj = 1;
    for (;;) {
      pj *= p;
      std::size_t count = 0;
      for (const Vec& x : elements_) {
        if (scale(pj, x) == zero_) ++count;
      }
      int l = 0;
      std::size_t probe = count;
      while (probe > 1) {
        if (probe % p != 0) throw std::logic_error("census not a p-power");
        probe /= p;
        ++l;
      }
      lambda.push_back(l);
      if (lambda.back() == lambda[lambda.size() - 2]) break;
    }
    std::vector<int> exps;  // descending exponent multiset
    for (std::size_t j = 1; j + 1 < lambda.size(); ++j) {
      const int geq_j = lambda[j] - lambda[j - 1];
      const int geq_next = lambda[j + 1] - lambda[j];
      for (int c = 0; c < geq_j - geq_next; ++c) {
        exps.push_back(static_cast<int>(j));
      }
    }
    std::sort(exps.rbegin(), exps.rend());
    per_prime.emplace_back(p, std::move(exps));
  }
  std::size_t count = 0;
  for (const auto& [p, exps] : per_prime) count = std::max(count, exps.size());
  // Align largest with largest across primes (invariant-factor form).
  std::vector<mpz_class> factors(count, 1);
  for (const auto& [p, exps] : per_prime) {
    for (std::size_t t = 0; t < exps.size(); ++t) {
      for (int c = 0; c < exps[t]; ++c) factors[t] *= p;
    }
  }
  std::sort(factors.begin(), factors.end());
  std::vector<mpz_class> out;
  for (const auto& f : factors) {
    if (f >= 2) out.push_back(f);
  }
  return out;
}

std::optional<FiniteMap> FiniteMap::from_generator_images(
    const FiniteModule& src, const FiniteModule& tgt,
    const std::vector<Vec>& images) {
  if (images.size() != src.generators().size()) {
    throw std::invalid_argument("image count does not match generators");
  }
  FiniteMap f;
  f.src_ = std::make_shared<FiniteModule>(src);
  f.tgt_ = std::make_shared<FiniteModule>(tgt);
  for (const Vec& x : src.elements()) {
    const auto& coords = src.coordinates(x);
    Vec value = tgt.zero();
    for (std::size_t i = 0; i < coords.size(); ++i) {
      value = tgt.add(value, tgt.scale(coords[i], images[i]));
    }
    f.table_.emplace(x, value);
  }
  // Additivity by exhaustion; also certifies well-definedness on relations.
  for (const Vec& x : src.elements()) {
    for (const Vec& y : src.elements()) {
      const Vec lhs = f.table_.at(src.add(x, y));
      const Vec rhs = tgt.add(f.table_.at(x), f.table_.at(y));
      if (lhs != rhs) return std::nullopt;
    }
  }
  return f;
}

FiniteMap FiniteMap::from_matrix(const FiniteModule& src,
                                 const FiniteModule& tgt, const Matrix& m) {
  if (m.rows() != src.ambient_rank() || m.cols() != tgt.ambient_rank()) {
    throw std::invalid_argument("matrix shape mismatch");
  }
  const unsigned long n = src.modulus();
  std::vector<Vec> images;
  for (const Vec& g : src.generators()) {
    Vec img(tgt.ambient_rank(), 0);
    for (int j = 0; j < m.cols(); ++j) {
      unsigned long acc = 0;
      for (int i = 0; i < m.rows(); ++i) {
        acc = (acc + g[i] * m(i, j).num().get_ui()) % n;
      }
      img[j] = acc;
    }
    images.push_back(tgt.reduce(img));
  }
  auto f = from_generator_images(src, tgt, images);
  if (!f) {
    throw std::invalid_argument("matrix does not induce a well-defined map");
  }
  return *f;
}

const Vec& FiniteMap::apply(const Vec& element) const {
  return table_.at(element);
}

FiniteMap compose_maps(const FiniteMap& f, const FiniteMap& g) {
  std::vector<Vec> images;
  for (const Vec& gen : f.source().generators()) {
    images.push_back(g.apply(f.apply(gen)));
  }
  auto out = FiniteMap::from_generator_images(f.source(), g.target(), images);
  if (!out) throw std::logic_error("composition of maps is not additive");
  return *out;
}

FiniteModule enumerate_module(const Obj& fp_module, std::size_t bound) {
  const auto& desc = *fp_module.descriptor();
  if (desc.kind() != CategoryDescriptor::Kind::freyd ||
      desc.inner()->kind() != CategoryDescriptor::Kind::rows ||
      desc.base_ring().kind() != RingKind::residues) {
    throw std::invalid_argument(
        "enumerate_module expects a finitely presented module over Z/n");
  }
  const unsigned long n = desc.base_ring().modulus().get_ui();
  const Matrix rel = fp_module.relation().matrix();
  std::vector<Vec> rows;
  for (int i = 0; i < rel.rows(); ++i) {
    Vec r(rel.cols());
    for (int j = 0; j < rel.cols(); ++j) r[j] = rel(i, j).num().get_ui();
    rows.push_back(std::move(r));
  }
  return FiniteModule::from_presentation(n, rel.cols(), rows, bound);
}

std::vector<FiniteMap> brute_hom(const FiniteModule& m, const FiniteModule& n,
                                 std::size_t budget) {
  const std::size_t gens = m.generators().size();
  double total = 1;
  for (std::size_t i = 0; i < gens; ++i) {
    total *= static_cast<double>(n.size());
  }
  if (total > static_cast<double>(budget)) {
    throw ResourceError("brute_hom candidate space exceeds budget");
  }
  std::vector<FiniteMap> out;
  std::vector<std::size_t> idx(gens, 0);
  for (;;) {
    std::vector<Vec> images;
    for (std::size_t i = 0; i < gens; ++i) {
      images.push_back(n.elements()[idx[i]]);
    }
    if (auto f = FiniteMap::from_generator_images(m, n, images)) {
      out.push_back(std::move(*f));
    }
    std::size_t t = 0;
    while (t < gens && ++idx[t] == n.size()) idx[t++] = 0;
    if (t == gens) break;
  }
  return out;
}

FiniteModule brute_kernel(const FiniteMap& f) {
  const FiniteModule& src = f.source();
  std::vector<Vec> kernel_gens;
  for (const Vec& t : src.group()) {
    if (f.apply(src.reduce(t)) == f.target().zero()) kernel_gens.push_back(t);
  }
  std::vector<Vec> denom;
  for (const Vec& t : src.group()) {
    if (src.reduce(t) == src.zero()) denom.push_back(t);
  }
  return FiniteModule::subquotient(src.modulus(), src.ambient_rank(),
                                   kernel_gens, denom);
}

CokernelWithProjection brute_cokernel_with_projection(const FiniteMap& f) {
  const FiniteModule& tgt = f.target();
  std::vector<Vec> denom;
  for (const Vec& t : tgt.group()) {
    if (tgt.reduce(t) == tgt.zero()) denom.push_back(t);
  }
  for (const Vec& x : f.source().elements()) denom.push_back(f.apply(x));
  FiniteModule coker = FiniteModule::subquotient(
      tgt.modulus(), tgt.ambient_rank(), tgt.group(), denom);
  std::vector<Vec> images;
  for (const Vec& g : tgt.generators()) images.push_back(coker.reduce(g));
  auto proj = FiniteMap::from_generator_images(tgt, coker, images);
  if (!proj) throw std::logic_error("cokernel projection is not additive");
  return CokernelWithProjection{std::move(coker), std::move(*proj)};
}

FiniteModule brute_cokernel(const FiniteMap& f) {
  return brute_cokernel_with_projection(f).obj;
}

FiniteModule brute_tensor(const FiniteModule& m, const FiniteModule& n) {
  const auto a = m.invariant_factors();
  const auto b = n.invariant_factors();
  std::vector<mpz_class> ds;
  for (const auto& x : a) {
    for (const auto& y : b) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      if (g >= 2) ds.push_back(g);
    }
  }
  const unsigned long mod = m.modulus();
  const int rank = static_cast<int>(ds.size());
  std::vector<Vec> gens;
  for (int i = 0; i < rank; ++i) {
    Vec g(rank, 0);
    g[i] = mod / ds[i].get_ui();
    gens.push_back(g);
  }
  return FiniteModule::subquotient(mod, rank, gens, {});
}

std::optional<std::vector<Matrix>> brute_linear_solve(const LinearSystem& sys,
                                                      std::size_t budget) {
  sys.validate();
  if (sys.desc->kind() != CategoryDescriptor::Kind::rows ||
      sys.desc->ring().kind() != RingKind::residues) {
    throw std::invalid_argument("brute_linear_solve expects ROWS(Z/n)");
  }
  const RingId ring = sys.desc->ring();
  const unsigned long n = ring.modulus().get_ui();
  std::vector<std::pair<int, int>> shapes;
  std::size_t cells = 0;
  for (std::size_t j = 0; j < sys.unknowns(); ++j) {
    const int r = sys.unknown_sources[j].rank();
    const int c = sys.unknown_targets[j].rank();
    shapes.emplace_back(r, c);
    cells += static_cast<std::size_t>(r) * c;
  }
  double total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= static_cast<double>(n);
  if (total > static_cast<double>(budget)) {
    throw ResourceError("brute_linear_solve search space exceeds budget");
  }
  std::vector<unsigned long> digits(cells, 0);
  for (;;) {
    std::vector<Matrix> mats;
    std::size_t at = 0;
    for (std::size_t j = 0; j < sys.unknowns(); ++j) {
      Matrix m(ring, shapes[j].first, shapes[j].second);
      for (int r = 0; r < shapes[j].first; ++r) {
        for (int c = 0; c < shapes[j].second; ++c) {
          m(r, c) = RingElement(ring, static_cast<long>(digits[at++]));
        }
      }
      mats.push_back(std::move(m));
    }
    bool good = true;
    for (std::size_t i = 0; i < sys.equations() && good; ++i) {
      Matrix acc(ring, sys.eq_sources[i].rank(), sys.eq_targets[i].rank());
      for (std::size_t j = 0; j < sys.unknowns(); ++j) {
        if (!sys.left[i][j]) continue;
        acc = acc + sys.left[i][j]->matrix() * mats[j] *
                        sys.right[i][j]->matrix();
      }
      good = acc == sys.rhs[i].matrix();
    }
    if (good) return mats;
    std::size_t t = 0;
    while (t < cells && ++digits[t] == n) digits[t++] = 0;
    if (t == cells) return std::nullopt;
  }
}

}  // namespace freyd::oracle
