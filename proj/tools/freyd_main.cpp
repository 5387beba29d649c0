#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "freyd/freyd_cat.hpp"
#include "freyd/serialization.hpp"

namespace {

using freyd::Json;

struct Output {
  std::string path;         // empty = stdout
  std::string format = "json";

  void emit(const Json& report, const std::string& text) const {
    std::string payload =
        format == "text" ? text + "\n" : report.dump(2) + "\n";
    if (path.empty()) {
      std::cout << payload;
    } else {
      std::ofstream out(path, std::ios::binary);
      if (!out) throw std::invalid_argument("cannot open output file " + path);
      out << payload;
    }
  }
};

Json load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

freyd::RingId ring_from_flag(const std::string& flag) {
  if (flag == "Z") return freyd::RingId::integers();
  if (flag == "Q") return freyd::RingId::rationals();
  if (flag.rfind("Z/", 0) == 0) {
    return freyd::RingId::residues(mpz_class(flag.substr(2), 10));
  }
  throw std::invalid_argument("unknown ring '" + flag + "' (use Z, Q or Z/n)");
}

void check_ring(const std::optional<std::string>& flag, const freyd::RingId& actual,
                const std::string& path) {
  if (!flag) return;
  if (ring_from_flag(*flag) != actual) {
    throw std::invalid_argument(path + ": ring does not match --ring " + *flag);
  }
}

Json module_report(const std::string& command, const freyd::Obj& m) {
  const auto inv = freyd::module_invariants(m);
  return Json{{"command", command},
              {"ring", freyd::ring_to_json(m.descriptor()->base_ring())},
              {"pretty", inv.to_string()},
              {"invariants", freyd::invariants_to_json(inv)},
              {"answer_relations",
               freyd::matrix_to_json(m.relation().matrix())}};
}

// Module map file: {"ring":..., "source_relations": M, "target_relations": N,
// "datum": X}.
freyd::Mor module_map_from_json(const Json& j, const std::string& path) {
  for (const char* key : {"source_relations", "target_relations", "datum"}) {
    if (!j.contains(key)) {
      throw std::invalid_argument(path + ": missing '" + key + "'");
    }
  }
  const freyd::Obj src =
      freyd::present_module(freyd::matrix_from_json(j.at("source_relations")));
  const freyd::Obj tgt =
      freyd::present_module(freyd::matrix_from_json(j.at("target_relations")));
  const freyd::Matrix datum = freyd::matrix_from_json(j.at("datum"));
  auto m = freyd::freyd_morphism(
      src, tgt, freyd::Mor::rows(src.range(), tgt.range(), datum));
  if (!m) {
    throw std::invalid_argument(
        path + ": datum does not define a morphism of the presented modules");
  }
  return *m;
}

// Functor object file: a descriptor envelope around one of
//   "object": generic object JSON,
//   "representable": relation matrix of the representing module,
//   "tensor_representation": relation matrix of the tensored module.
freyd::Obj functor_from_json(const Json& j, const std::string& path) {
  if (!j.contains("descriptor") || !j.contains("ring")) {
    throw std::invalid_argument(path +
                                ": functor file needs 'descriptor' and 'ring'");
  }
  const freyd::RingId ring = freyd::ring_from_json(j.at("ring"));
  const freyd::DescriptorPtr desc =
      freyd::descriptor_from_json(j.at("descriptor"), ring);
  const bool covariant =
      freyd::same_descriptor(desc, freyd::functor_descriptor(
                                       ring, freyd::Variance::covariant));
  const bool contravariant =
      freyd::same_descriptor(desc, freyd::functor_descriptor(
                                       ring, freyd::Variance::contravariant));
  if (!covariant && !contravariant) {
    throw std::invalid_argument(
        path + ": descriptor is not a functor category over " +
        ring.to_string());
  }
  const freyd::Variance variance = covariant
                                       ? freyd::Variance::covariant
                                       : freyd::Variance::contravariant;
  if (j.contains("object")) {
    return freyd::obj_from_json(desc, j.at("object"));
  }
  if (j.contains("representable")) {
    const freyd::Obj m = freyd::present_module(
        freyd::matrix_from_json(j.at("representable")));
    return freyd::representable_functor(m, variance);
  }
  if (j.contains("tensor_representation")) {
    if (variance != freyd::Variance::covariant) {
      throw std::invalid_argument(
          path + ": tensor representations are covariant functor objects");
    }
    const freyd::Obj m = freyd::present_module(
        freyd::matrix_from_json(j.at("tensor_representation")));
    return freyd::tor_functor_obj(m, 0);
  }
  throw std::invalid_argument(
      path +
      ": expected 'object', 'representable' or 'tensor_representation'");
}

int run(int argc, char** argv) {
  CLI::App app{"Constructive Freyd categories over computable rings"};
  app.require_subcommand(1);

  std::optional<std::string> ring_flag;
  Output output;
  app.add_option("--ring", ring_flag, "expected base ring: Z, Q or Z/n");
  app.add_option("--out", output.path, "write the report to a file");
  app.add_option("--format", output.format, "report format")
      ->check(CLI::IsMember({"json", "text"}));

  auto* mod = app.add_subcommand("mod", "finitely presented modules");
  auto* fun = app.add_subcommand("functor", "finitely presented functors");
  auto* solve = app.add_subcommand("solve", "decide a linear system file");

  std::string path_a, path_b, solve_path;
  int ext_index = 1;

  auto* mod_invariants =
      mod->add_subcommand("invariants", "isomorphism invariants");
  mod_invariants->add_option("presentation", path_a)->required();
  auto* mod_kernel = mod->add_subcommand("kernel", "kernel of a module map");
  mod_kernel->add_option("map", path_a)->required();
  auto* mod_cokernel =
      mod->add_subcommand("cokernel", "cokernel of a module map");
  mod_cokernel->add_option("map", path_a)->required();
  auto* mod_hom = mod->add_subcommand("hom", "hom module");
  mod_hom->add_option("A", path_a)->required();
  mod_hom->add_option("B", path_b)->required();
  auto* mod_tensor = mod->add_subcommand("tensor", "tensor product");
  mod_tensor->add_option("A", path_a)->required();
  mod_tensor->add_option("B", path_b)->required();
  auto* mod_ext = mod->add_subcommand("ext", "Ext^i module");
  mod_ext->add_option("--i", ext_index, "derived-functor index");
  mod_ext->add_option("A", path_a)->required();
  mod_ext->add_option("B", path_b)->required();
  auto* mod_tor = mod->add_subcommand("tor", "Tor_i module");
  mod_tor->add_option("--i", ext_index, "derived-functor index");
  mod_tor->add_option("A", path_a)->required();
  mod_tor->add_option("B", path_b)->required();

  auto* fun_nat = fun->add_subcommand("nat-hom", "natural transformations");
  fun_nat->add_option("F", path_a)->required();
  fun_nat->add_option("G", path_b)->required();
  auto* fun_left = fun->add_subcommand("left-exact", "decide left exactness");
  fun_left->add_option("F", path_a)->required();
  auto* fun_right =
      fun->add_subcommand("right-exact", "decide right exactness");
  fun_right->add_option("F", path_a)->required();
  auto* fun_inject =
      fun->add_subcommand("inject", "embedding into an injective object");
  fun_inject->add_option("F", path_a)->required();

  solve->add_option("system", solve_path)->required();

  CLI11_PARSE(app, argc, argv);

  auto load_presentation = [&](const std::string& path) {
    const freyd::Obj m = freyd::presentation_from_json(load_json(path));
    check_ring(ring_flag, m.descriptor()->base_ring(), path);
    return m;
  };

  if (mod_invariants->parsed()) {
    output.emit_module("invariants", load_presentation(path_a));
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
