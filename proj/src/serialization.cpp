#include "freyd/serialization.hpp"

#include "freyd/freyd_cat.hpp"

namespace freyd {

namespace {

using Kind = CategoryDescriptor::Kind;

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument("parse error: " + what);
}

mpz_class big_from_json(const Json& j, const char* where) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.empty()) fail(std::string(where) + ": empty integer literal");
    try {
      return mpz_class(s, 10);
    } catch (const std::invalid_argument&) {
      fail(std::string(where) + ": bad integer literal '" + s + "'");
    }
  }
  if (j.is_number_integer()) {
    return mpz_class(j.get<long long>());
  }
  fail(std::string(where) + ": expected integer or decimal string");
}

RingElement element_from_json(const RingId& ring, const Json& j) {
  if (ring.kind() == RingKind::rationals && j.is_string()) {
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
      try {
        return RingElement(ring, mpz_class(s.substr(0, slash), 10),
                           mpz_class(s.substr(slash + 1), 10));
      } catch (const std::invalid_argument&) {
        fail("bad rational literal '" + s + "'");
      }
    }
  }
  return RingElement(ring, big_from_json(j, "matrix entry"));
}

}  // namespace

Json ring_to_json(const RingId& ring) {
  switch (ring.kind()) {
    case RingKind::integers:
      return Json("Z");
    case RingKind::rationals:
      return Json("Q");
    case RingKind::residues:
      return Json{{"Zmod", ring.modulus().get_str()}};
  }
  throw std::logic_error("unreachable");
}

RingId ring_from_json(const Json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "Z") return RingId::integers();
    if (s == "Q") return RingId::rationals();
    fail("unknown ring tag '" + s + "'");
  }
  if (j.is_object() && j.contains("Zmod")) {
    return RingId::residues(big_from_json(j.at("Zmod"), "modulus"));
  }
  fail("ring must be \"Z\", \"Q\" or {\"Zmod\": n}");
}

Json matrix_to_json(const Matrix& m) {
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    entries.push_back(std::move(row));
  }
  return Json{{"ring", ring_to_json(m.ring())},
              {"rows", m.rows()},
              {"cols", m.cols()},
              {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_object()) fail("matrix must be an object");
  for (const char* key : {"ring", "rows", "cols", "entries"}) {
    if (!j.contains(key)) fail(std::string("matrix: missing '") + key + "'");
  }
  const RingId ring = ring_from_json(j.at("ring"));
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  if (rows < 0 || cols < 0) fail("matrix: negative dimension");
  const Json& entries = j.at("entries");
  if (!entries.is_array() || static_cast<int>(entries.size()) != rows) {
    fail("matrix: entries must hold one array per row");
  }
  Matrix m(ring, rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Json& row = entries.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      fail("matrix: row " + std::to_string(i) + " has wrong length");
    }
    for (int c = 0; c < cols; ++c) m(i, c) = element_from_json(ring, row.at(c));
  }
  return m;
}

Json presentation_to_json(const Obj& module) {
  return Json{{"ring", ring_to_json(module.descriptor()->base_ring())},
              {"relations", matrix_to_json(module.relation().matrix())}};
}

Obj presentation_from_json(const Json& j) {
  if (!j.is_object()) fail("presentation must be an object");
  if (!j.contains("relations")) fail("presentation: missing 'relations'");
  const Matrix rel = matrix_from_json(j.at("relations"));
  if (j.contains("ring") && ring_from_json(j.at("ring")) != rel.ring()) {
    fail("presentation: ring tag disagrees with the relation matrix");
  }
  return present_module(rel);
}

Json descriptor_to_json(const DescriptorPtr& desc) {
  Json out = Json::array();
  const CategoryDescriptor* d = desc.get();
  for (;;) {
    switch (d->kind()) {
      case Kind::rows:
        out.push_back("ROWS");
        return out;
      case Kind::freyd:
        out.push_back("FREYD");
        break;
      case Kind::op:
        out.push_back("OP");
        break;
    }
    d = d->inner().get();
  }
}

DescriptorPtr descriptor_from_json(const Json& j, const RingId& ring) {
  if (!j.is_array() || j.empty()) fail("descriptor must be a nonempty array");
  if (j.back() != Json("ROWS")) fail("descriptor must end in \"ROWS\"");
  DescriptorPtr d = CategoryDescriptor::rows(ring);
  for (std::size_t i = j.size() - 1; i-- > 0;) {
    const std::string tag = j.at(i).get<std::string>();
    if (tag == "FREYD") {
      d = CategoryDescriptor::freyd(d);
    } else if (tag == "OP") {
      d = CategoryDescriptor::op(d);
    } else {
      fail("unknown descriptor tag '" + tag + "'");
    }
  }
  return d;
}

Json obj_to_json(const Obj& o) {
  switch (o.kind()) {
    case Kind::rows:
      return Json{{"rank", o.rank()}};
    case Kind::freyd:
      return Json{{"relation", mor_to_json(o.relation())}};
    case Kind::op:
      return Json{{"inner", obj_to_json(o.op_inner())}};
  }
  throw std::logic_error("unreachable");
}

Obj obj_from_json(const DescriptorPtr& desc, const Json& j) {
  if (!j.is_object()) fail("object must be a JSON object");
  switch (desc->kind()) {
    case Kind::rows: {
      if (!j.contains("rank")) fail("ROWS object: missing 'rank'");
      return Obj::rows(desc, j.at("rank").get<int>());
    }
    case Kind::freyd: {
      if (!j.contains("relation")) fail("FREYD object: missing 'relation'");
      return Obj::freyd(mor_from_json(desc->inner(), j.at("relation")));
    }
    case Kind::op: {
      if (!j.contains("inner")) fail("OP object: missing 'inner'");
      return Obj::op(obj_from_json(desc->inner(), j.at("inner")));
    }
  }
  throw std::logic_error("unreachable");
}

Json mor_to_json(const Mor& m) {
  switch (m.kind()) {
    case Kind::rows:
      return Json{{"matrix", matrix_to_json(m.matrix())}};
    case Kind::freyd:
      return Json{{"source", obj_to_json(m.source())},
                  {"target", obj_to_json(m.target())},
                  {"datum", mor_to_json(m.datum())}};
    case Kind::op:
      return Json{{"inner", mor_to_json(m.op_inner())}};
  }
  throw std::logic_error("unreachable");
}

Mor mor_from_json(const DescriptorPtr& desc, const Json& j) {
  if (!j.is_object()) fail("morphism must be a JSON object");
  switch (desc->kind()) {
    case Kind::rows: {
      if (!j.contains("matrix")) fail("ROWS morphism: missing 'matrix'");
      const Matrix m = matrix_from_json(j.at("matrix"));
      if (m.ring() != desc->ring()) {
        fail("ROWS morphism: matrix ring disagrees with the descriptor");
      }
      return Mor::rows(Obj::rows(desc, m.rows()), Obj::rows(desc, m.cols()),
                       m);
    }
    case Kind::freyd: {
      for (const char* key : {"source", "target", "datum"}) {
        if (!j.contains(key)) {
          fail(std::string("FREYD morphism: missing '") + key + "'");
        }
      }
      const Obj src = obj_from_json(desc, j.at("source"));
      const Obj tgt = obj_from_json(desc, j.at("target"));
      const Mor datum = mor_from_json(desc->inner(), j.at("datum"));
      auto m = freyd_morphism(src, tgt, datum);
      if (!m) fail("FREYD morphism: datum admits no witness");
      return *m;
    }
    case Kind::op: {
      if (!j.contains("inner")) fail("OP morphism: missing 'inner'");
      const Mor inner = mor_from_json(desc->inner(), j.at("inner"));
      return Mor::op(Obj::op(inner.target()), Obj::op(inner.source()), inner);
    }
  }
  throw std::logic_error("unreachable");
}

Json system_to_json(const LinearSystem& sys) {
  Json j;
  j["descriptor"] = descriptor_to_json(sys.desc);
  j["ring"] = ring_to_json(sys.desc->base_ring());
  auto objs = [](const std::vector<Obj>& v) {
    Json out = Json::array();
    for (const auto& o : v) out.push_back(obj_to_json(o));
    return out;
  };
  j["equation_sources"] = objs(sys.eq_sources);
  j["equation_targets"] = objs(sys.eq_targets);
  j["unknown_sources"] = objs(sys.unknown_sources);
  j["unknown_targets"] = objs(sys.unknown_targets);
  auto grid = [](const std::vector<std::vector<std::optional<Mor>>>& g) {
    Json out = Json::array();
    for (const auto& row : g) {
      Json r = Json::array();
      for (const auto& cell : row) {
        r.push_back(cell ? mor_to_json(*cell) : Json(nullptr));
      }
      out.push_back(std::move(r));
    }
    return out;
  };
  j["left"] = grid(sys.left);
  j["right"] = grid(sys.right);
  Json rhs = Json::array();
  for (const auto& g : sys.rhs) rhs.push_back(mor_to_json(g));
  j["rhs"] = std::move(rhs);
  return j;
}

LinearSystem system_from_json(const Json& j) {
  if (!j.is_object()) fail("system must be a JSON object");
  for (const char* key :
       {"descriptor", "ring", "equation_sources", "equation_targets",
        "unknown_sources", "unknown_targets", "left", "right", "rhs"}) {
    if (!j.contains(key)) fail(std::string("system: missing '") + key + "'");
  }
  LinearSystem sys;
  sys.desc =
      descriptor_from_json(j.at("descriptor"), ring_from_json(j.at("ring")));
  auto objs = [&](const Json& arr) {
    std::vector<Obj> out;
    for (const auto& o : arr) out.push_back(obj_from_json(sys.desc, o));
    return out;
  };
  sys.eq_sources = objs(j.at("equation_sources"));
  sys.eq_targets = objs(j.at("equation_targets"));
  sys.unknown_sources = objs(j.at("unknown_sources"));
  sys.unknown_targets = objs(j.at("unknown_targets"));
  auto grid = [&](const Json& g) {
    std::vector<std::vector<std::optional<Mor>>> out;
    for (const auto& row : g) {
      std::vector<std::optional<Mor>> r;
      for (const auto& cell : row) {
        if (cell.is_null()) {
          r.push_back(std::nullopt);
        } else {
          r.push_back(mor_from_json(sys.desc, cell));
        }
      }
      out.push_back(std::move(r));
    }
    return out;
  };
  sys.left = grid(j.at("left"));
  sys.right = grid(j.at("right"));
  for (const auto& g : j.at("rhs")) {
    sys.rhs.push_back(mor_from_json(sys.desc, g));
  }
  sys.validate();
  return sys;
}

Json invariants_to_json(const ModuleInvariants& inv) {
  Json torsion = Json::array();
  for (const auto& d : inv.torsion) torsion.push_back(d.get_str());
  return Json{{"free_rank", inv.free_rank}, {"torsion", std::move(torsion)}};
}

}  // namespace freyd
