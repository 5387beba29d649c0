#include "freyd/linear_system.hpp"

#include "detail.hpp"
#include "freyd/hom_structure.hpp"

namespace freyd {

namespace {

using Kind = CategoryDescriptor::Kind;

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace

void LinearSystem::validate() const {
  const std::size_t m = equations();
  const std::size_t n = unknowns();
  require(eq_targets.size() == m && rhs.size() == m,
          "linear system: equation shape mismatch");
  require(unknown_targets.size() == n,
          "linear system: unknown shape mismatch");
  require(left.size() == m && right.size() == m,
          "linear system: grid row count mismatch");
  for (std::size_t i = 0; i < m; ++i) {
    require(left[i].size() == n && right[i].size() == n,
            "linear system: grid column count mismatch");
    require(same_object(rhs[i].source(), eq_sources[i]) &&
                same_object(rhs[i].target(), eq_targets[i]),
            "linear system: rhs endpoints mismatch");
    for (std::size_t j = 0; j < n; ++j) {
      if (left[i][j]) {
        require(same_object(left[i][j]->source(), eq_sources[i]) &&
                    same_object(left[i][j]->target(), unknown_sources[j]),
                "linear system: left coefficient endpoints mismatch");
      }
      if (right[i][j]) {
        require(same_object(right[i][j]->source(), unknown_targets[j]) &&
                    same_object(right[i][j]->target(), eq_targets[i]),
                "linear system: right coefficient endpoints mismatch");
      }
      require(left[i][j].has_value() == right[i][j].has_value(),
              "linear system: half-specified coefficient cell");
    }
  }
}

bool verifies(const LinearSystem& sys, std::span<const Mor> solution) {
  if (solution.size() != sys.unknowns()) return false;
  for (std::size_t i = 0; i < sys.equations(); ++i) {
    Mor acc = zero_mor(sys.eq_sources[i], sys.eq_targets[i]);
    for (std::size_t j = 0; j < sys.unknowns(); ++j) {
      if (!sys.left[i][j]) continue;
      acc = add(acc, compose(compose(*sys.left[i][j], solution[j]),
                             *sys.right[i][j]));
    }
    if (!mor_eq(acc, sys.rhs[i])) return false;
  }
  return true;
}

namespace {

ReducedSystem reduce_freyd_layer(const LinearSystem& sys) {
  const DescriptorPtr inner = sys.desc->inner();
  const std::size_t m = sys.equations();
  const std::size_t n = sys.unknowns();
  LinearSystem red;
  red.desc = inner;
  // Unknowns: X_j^1 (datum), X_j^2 (witness), Z_i (equality witness).
  for (std::size_t j = 0; j < n; ++j) {
    red.unknown_sources.push_back(sys.unknown_sources[j].range());
    red.unknown_targets.push_back(sys.unknown_targets[j].range());
  }
  for (std::size_t j = 0; j < n; ++j) {
    red.unknown_sources.push_back(sys.unknown_sources[j].relations_obj());
    red.unknown_targets.push_back(sys.unknown_targets[j].relations_obj());
  }
  for (std::size_t i = 0; i < m; ++i) {
    red.unknown_sources.push_back(sys.eq_sources[i].range());
    red.unknown_targets.push_back(sys.eq_targets[i].relations_obj());
  }
  const std::size_t total_unknowns = 2 * n + m;
  red.left.assign(m + n, std::vector<std::optional<Mor>>(total_unknowns));
  red.right.assign(m + n, std::vector<std::optional<Mor>>(total_unknowns));
  // Main equations: sum_j alpha_ij . X_j^1 . beta_ij - Z_i . rho_{D_i}
  //               = gamma_i.
  for (std::size_t i = 0; i < m; ++i) {
    red.eq_sources.push_back(sys.eq_sources[i].range());
    red.eq_targets.push_back(sys.eq_targets[i].range());
    for (std::size_t j = 0; j < n; ++j) {
      if (!sys.left[i][j]) continue;
      red.left[i][j] = sys.left[i][j]->datum();
      red.right[i][j] = sys.right[i][j]->datum();
    }
    red.left[i][2 * n + i] = identity_mor(sys.eq_sources[i].range());
    red.right[i][2 * n + i] = negate(sys.eq_targets[i].relation());
    red.rhs.push_back(sys.rhs[i].datum());
  }
  // Well-definedness equations: rho_{B_j} . X_j^1 - X_j^2 . rho_{C_j} = 0.
  for (std::size_t j = 0; j < n; ++j) {
    const Obj rb = sys.unknown_sources[j].relations_obj();
    const Obj cr = sys.unknown_targets[j].range();
    red.eq_sources.push_back(rb);
    red.eq_targets.push_back(cr);
    red.left[m + j][j] = sys.unknown_sources[j].relation();
    red.right[m + j][j] = identity_mor(cr);
    red.left[m + j][n + j] = identity_mor(rb);
    red.right[m + j][n + j] = negate(sys.unknown_targets[j].relation());
    red.rhs.push_back(zero_mor(rb, cr));
  }
  ReducedSystem out;
  out.system = std::move(red);
  std::vector<Obj> srcs = sys.unknown_sources;
  std::vector<Obj> tgts = sys.unknown_targets;
  out.pull_back = [srcs, tgts, n](std::span<const Mor> sol) {
    std::vector<Mor> xs;
    xs.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
      xs.push_back(Mor::freyd(srcs[j], tgts[j], sol[j], sol[n + j]));
    }
    return xs;
  };
  return out;
}

ReducedSystem reduce_op_layer(const LinearSystem& sys) {
  const DescriptorPtr inner = sys.desc->inner();
  const std::size_t m = sys.equations();
  const std::size_t n = sys.unknowns();
  LinearSystem red;
  red.desc = inner;
  for (std::size_t j = 0; j < n; ++j) {
    red.unknown_sources.push_back(sys.unknown_targets[j].op_inner());
    red.unknown_targets.push_back(sys.unknown_sources[j].op_inner());
  }
  red.left.assign(m, std::vector<std::optional<Mor>>(n));
  red.right.assign(m, std::vector<std::optional<Mor>>(n));
  for (std::size_t i = 0; i < m; ++i) {
    red.eq_sources.push_back(sys.eq_targets[i].op_inner());
    red.eq_targets.push_back(sys.eq_sources[i].op_inner());
    for (std::size_t j = 0; j < n; ++j) {
      if (!sys.left[i][j]) continue;
      red.left[i][j] = sys.right[i][j]->op_inner();
      red.right[i][j] = sys.left[i][j]->op_inner();
    }
    red.rhs.push_back(sys.rhs[i].op_inner());
  }
  ReducedSystem out;
  out.system = std::move(red);
  std::vector<Obj> srcs = sys.unknown_sources;
  std::vector<Obj> tgts = sys.unknown_targets;
  out.pull_back = [srcs, tgts, n](std::span<const Mor> sol) {
    std::vector<Mor> xs;
    xs.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
      xs.push_back(Mor::op(srcs[j], tgts[j], sol[j]));
    }
    return xs;
  };
  return out;
}

}  // namespace

ReducedSystem reduce_linear_system(const LinearSystem& sys) {
  sys.validate();
  switch (sys.desc->kind()) {
    case Kind::freyd:
      return reduce_freyd_layer(sys);
    case Kind::op:
      return reduce_op_layer(sys);
    case Kind::rows:
      throw std::invalid_argument("reduce_linear_system: already at the base");
  }
  throw std::logic_error("unreachable");
}

std::optional<std::vector<Mor>> solve_linear_system(const LinearSystem& sys) {
  sys.validate();
  if (sys.desc->kind() == Kind::rows) {
    const auto hs = rows_hom_structure(sys.desc->ring());
    return solve_linear_system(sys, *hs);
  }
  const ReducedSystem red = reduce_linear_system(sys);
  auto sol = solve_linear_system(red.system);
  if (!sol) return std::nullopt;
  return red.pull_back(*sol);
}

std::optional<std::vector<Mor>> solve_linear_system(const LinearSystem& sys,
                                                    const HomStructure& hs) {
  sys.validate();
  require(same_descriptor(sys.desc, hs.domain()),
          "solve_linear_system: structure does not match the system");
  const std::size_t m = sys.equations();
  const std::size_t n = sys.unknowns();
  std::vector<Obj> row_objs, col_objs;
  for (std::size_t i = 0; i < m; ++i) {
    row_objs.push_back(hs.hom_obj(sys.eq_sources[i], sys.eq_targets[i]));
  }
  for (std::size_t j = 0; j < n; ++j) {
    col_objs.push_back(
        hs.hom_obj(sys.unknown_sources[j], sys.unknown_targets[j]));
  }
  const DirectSum ds_rows = direct_sum(hs.codomain(), row_objs);
  const DirectSum ds_cols = direct_sum(hs.codomain(), col_objs);
  std::vector<Mor> gamma_comps;
  for (std::size_t i = 0; i < m; ++i) {
    gamma_comps.push_back(hs.externalize(sys.rhs[i]));
  }
  const Mor gamma_vec = into_direct_sum(ds_rows, gamma_comps, hs.one());
  std::vector<Mor> col_comps;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Mor> cells;
    for (std::size_t i = 0; i < m; ++i) {
      cells.push_back(sys.left[i][j]
                          ? hs.hom_mor(*sys.left[i][j], *sys.right[i][j])
                          : zero_mor(col_objs[j], row_objs[i]));
    }
    col_comps.push_back(into_direct_sum(ds_rows, cells, col_objs[j]));
  }
  const Mor block = from_direct_sum(ds_cols, col_comps, ds_rows.sum);
  const auto x = lift(gamma_vec, block);
  if (!x) return std::nullopt;
  std::vector<Mor> solution;
  for (std::size_t j = 0; j < n; ++j) {
    solution.push_back(
        hs.internalize(sys.unknown_sources[j], sys.unknown_targets[j],
                       compose(*x, ds_cols.projections[j])));
  }
  return solution;
}

}  // namespace freyd
