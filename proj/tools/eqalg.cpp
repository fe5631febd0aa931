#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "eqalg/bredon.hpp"
#include "eqalg/error.hpp"
#include "eqalg/functors.hpp"
#include "eqalg/hecke.hpp"
#include "eqalg/houghton.hpp"
#include "eqalg/io.hpp"
#include "eqalg/mackey.hpp"
#include "eqalg/module.hpp"
#include "eqalg/orbit.hpp"

using namespace eqalg;

namespace {

struct Options {
  std::string group = "C2";
  std::string family = "all";
  std::string ring = "Z";
  std::string degrees = "0..4";
  std::string category = "orbit";
  std::string coeff = "constant";
  std::string source, target;
  std::string module = "constant";
  std::string along = "sigma";
  std::string cw;
  std::string format = "json";
  std::uint64_t seed = 0;
  bool check = false;
  std::string element;
  std::vector<std::string> subgroup_files;
  std::string w;
  std::vector<std::string> pair;
};

// Categories over one family, built on demand.
struct Setup {
  LatticePtr L;
  std::optional<Family> F;
  Ring ring = Ring::integers();
  bool check = false;
  std::unique_ptr<OrbitCategory> O;
  std::unique_ptr<MackeyCategory> M;
  std::unique_ptr<HeckeCategory> H;

  Setup(const Options& o, bool with_ring = true) : L(SubgroupLattice::build(parse_group(o.group))), check(o.check) {
    F = Family::parse(L, o.family);
    if (with_ring) ring = Ring::parse(o.ring);
  }
  OrbitCategory& orbit() {
    if (!O) O = std::make_unique<OrbitCategory>(*F);
    return *O;
  }
  MackeyCategory& mackey() {
    if (!M) M = std::make_unique<MackeyCategory>(*F);
    return *M;
  }
  HeckeCategory& hecke() {
    if (!H) H = std::make_unique<HeckeCategory>(*F, check);
    return *H;
  }
  const FinAbCategory& category(const std::string& kind) {
    if (kind == "orbit") return orbit().category();
    if (kind == "mackey") return mackey().category();
    if (kind == "hecke") return hecke().category();
    throw Error(ErrorCode::InvalidInput, "category must be orbit, mackey or hecke");
  }
  std::size_t object(const FinAbCategory& C, const std::string& text) {
    SubgroupId h = io::parse_subgroup(*L, text);
    for (std::size_t x = 0; x < C.size(); ++x)
      if (L->class_of(C.object(x).subgroup) == L->class_of(h)) return x;
    throw Error(ErrorCode::IsotropyNotInFamily, "subgroup " + L->describe(h) + " is not in the family");
  }

  CatModule module(const std::string& kind, const std::string& spec) {
    const FinAbCategory& C = category(kind);
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon), arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "zero") return zero_module(C, ring);
    if (head == "representable" || head == "rep") return representable(C, object(C, arg.empty() ? "G" : arg), ring);
    if (kind != "mackey" && head == "constant") return constant_module(C, ring);
    if (kind == "orbit" && head == "truncated") {
      std::size_t k = 0;
      try {
        k = std::stoul(arg);
      } catch (const std::exception&) {
        throw Error(ErrorCode::InvalidInput, "truncated:<k> needs a number");
      }
      return truncated_constant_module(C, ring, k);
    }
    if (kind == "hecke" && (head == "fixed-point" || head == "fixed")) {
      if (arg.empty()) return fixed_point_constant(hecke(), ring);
      return fixed_point_module(GModule::permutation(*L, io::parse_subgroup(*L, arg)), hecke(), ring);
    }
    if (kind == "mackey" && head == "burnside") return burnside_module(mackey(), ring).module;
    throw Error(ErrorCode::InvalidInput, "unknown module '" + spec + "' for the " + kind + " category");
  }

  Json header(const std::string& name) const {
    return Json{{"group", name}, {"family", F->name()}, {"ring", ring.name()}};
  }
};

Json values(const CatModule& M) {
  Json out = Json::array();
  const FinAbCategory& C = M.acting();
  for (std::size_t x = 0; x < M.size(); ++x)
    out.push_back(Json{{"object", C.object(x).label}, {"value", M.value(x).invariants().to_string()}});
  return out;
}

Json hom_listing(const FinAbCategory& C, std::size_t x, std::size_t y) {
  Json basis = Json::array();
  for (std::uint32_t k = 0; k < C.rank(x, y); ++k) basis.push_back(Json{{"index", k}, {"label", C.basis_label(x, y, k)}});
  Json out{{"source", C.object(x).label}, {"target", C.object(y).label}, {"rank", C.rank(x, y)}, {"basis", basis}};
  if (x == y) {
    Json table = Json::array();
    for (std::uint32_t b = 0; b < C.rank(x, x); ++b)
      for (std::uint32_t a = 0; a < C.rank(x, x); ++a) {
        Json terms = Json::array();
        for (auto [k, c] : C.compose(x, x, x, b, a)) terms.push_back(Json::array({k, c}));
        table.push_back(Json{{"left", b}, {"right", a}, {"result", terms}});
      }
    out["composition"] = table;
  }
  return out;
}

void render_table(const Json& j, const std::string& indent, std::ostream& os) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_object()) {
      os << indent << it.key() << ":\n";
      render_table(v, indent + "  ", os);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << indent << it.key() << ":\n";
      for (const auto& row : v) {
        os << indent << "  -";
        std::string sep = " ";
        for (auto r = row.begin(); r != row.end(); ++r) {
          os << sep << r.key() << "=" << (r.value().is_string() ? r.value().get<std::string>() : r.value().dump());
          sep = ", ";
        }
        os << "\n";
      }
    } else {
      os << indent << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

void emit(const Json& j, const Options& o) {
  if (o.format == "table") render_table(j, "", std::cout);
  else std::cout << j.dump(2) << "\n";
}

// ------------------------------------------------------------ commands

Json group_info(const Options& o) {
  Setup s(o, false);
  const auto& L = *s.L;
  const auto& G = L.group();
  Json gens = Json::array();
  for (const auto& g : G.generators()) gens.push_back(format_cycles(g));
  Json subs = Json::array();
  for (SubgroupId h = 0; h < L.size(); ++h) {
    Json e = io::subgroup(L, h);
    e["class"] = L.class_of(h);
    e["normaliser_order"] = L.order(L.normaliser(h));
    e["weyl_order"] = L.weyl_order(h);
    e["in_family"] = s.F->contains(h);
    subs.push_back(e);
  }
  return Json{{"group", o.group},
              {"order", G.order()},
              {"degree", G.degree()},
              {"generators", gens},
              {"conjugacy_classes", L.class_count()},
              {"family", Json{{"name", s.F->name()}, {"representatives", s.F->representatives()}}},
              {"subgroups", subs}};
}

Json homs(const Options& o, const std::string& kind) {
  Setup s(o, false);
  const FinAbCategory& C = s.category(kind);
  std::size_t x = s.object(C, o.source), y = s.object(C, o.target);
  Json out{{"category", kind}, {"family", s.F->name()}};
  out.update(hom_listing(C, x, y));
  if (kind == "orbit") {
    auto rw = s.orbit().right_weyl_decomposition(x, y);
    Json left = Json::array();
    for (const auto& orb : s.orbit().left_weyl_decomposition(x, y))
      left.push_back(Json{{"rep", format_cycles(s.L->group().element(orb.rep))}, {"stabiliser_order", orb.stabiliser_order}});
    out["right_weyl"] = Json{{"orbits", rw.index_set.size()}, {"orbit_size", rw.orbit_size}};
    out["left_weyl"] = left;
  }
  return out;
}

Json bredon(const Options& o) {
  Setup s(o);
  auto [lo, hi] = io::parse_degrees(o.degrees);
  CatModule M = s.module("orbit", o.coeff);
  std::vector<AbelianInvariants> all;
  if (o.cw.empty()) {
    all = bredon_cohomology(s.orbit(), M, hi);
  } else {
    GCWData X = io::gcw_from_json(*s.L, io::read_json_file(o.cw));
    all = bredon_cohomology_of(bredon_chain_complex(s.orbit(), X, s.ring), M, hi);
  }
  Json out = s.header(o.group);
  out["coefficients"] = o.coeff;
  out["space"] = o.cw.empty() ? "universal" : o.cw;
  out["degrees"] = Json::array({lo, hi});
  std::vector<AbelianInvariants> part;
  for (std::size_t k = lo; k <= hi && k < all.size(); ++k) part.push_back(all[k]);
  out["cohomology"] = io::invariants(part);
  return out;
}

Json ext_cmd(const Options& o) {
  Setup s(o);
  auto [lo, hi] = io::parse_degrees(o.degrees);
  CatModule A = s.module(o.category, o.source.empty() ? "constant" : o.source);
  CatModule B = s.module(o.category, o.target.empty() ? "constant" : o.target);
  auto all = ext(A, B, hi, o.seed);
  std::vector<AbelianInvariants> part;
  for (std::size_t k = lo; k <= hi && k < all.size(); ++k) part.push_back(all[k]);
  Json out = s.header(o.group);
  out["category"] = o.category;
  out["source"] = o.source.empty() ? "constant" : o.source;
  out["target"] = o.target.empty() ? "constant" : o.target;
  out["degrees"] = Json::array({lo, hi});
  out["ext"] = io::invariants(part);
  out["source_projective"] = is_projective(A);
  return out;
}

Json induce_cmd(const Options& o) {
  Setup s(o);
  Json out = s.header(o.group);
  out["along"] = o.along;
  ModuleMap cmp;
  if (o.along == "sigma") {
    cmp = sigma_comparison(s.orbit(), s.mackey(), s.ring);
    out["compared_with"] = "burnside";
  } else if (o.along == "pisigma" || o.along == "pi-sigma") {
    cmp = pi_sigma_comparison(s.orbit(), s.mackey(), s.hecke(), s.ring);
    out["compared_with"] = "fixed-point";
  } else {
    throw Error(ErrorCode::InvalidInput, "--along must be sigma or pisigma");
  }
  out["induced"] = values(cmp.source);
  out["comparison"] = values(cmp.target);
  out["natural"] = cmp.is_natural();
  out["isomorphic"] = cmp.is_natural() && cmp.is_iso();
  return out;
}

Json dual_cmd(const Options& o) {
  Setup s(o);
  CatModule M = s.module(o.category, o.module);
  CatModule MD = dual(M);
  CatModule MDD = dual(MD);
  ModuleMap zeta = double_dual_map(M, MD, MDD);
  Json out = s.header(o.group);
  out["category"] = o.category;
  out["module"] = o.module;
  out["values"] = values(M);
  out["dual"] = values(MD);
  out["double_dual_iso"] = zeta.is_iso();
  out["projective"] = is_projective(M);
  return out;
}

HoughtonElement load_element(const std::string& path) { return io::houghton_from_json(io::read_json_file(path)); }

Json houghton_centraliser(const Options& o) {
  if (!o.element.empty()) {
    HoughtonElement q = load_element(o.element);
    Json out{{"element", io::houghton_to_json(q)}, {"phi", houghton::phi(q)}};
    out["centraliser"] = io::shape_to_json(houghton::centraliser_of_element(q));
    return out;
  }
  std::vector<HoughtonElement> F;
  for (const auto& f : o.subgroup_files) F.push_back(load_element(f));
  if (!o.w.empty()) return Json{{"centraliser", io::shape_to_json(houghton::centraliser_of_vcyc(F, load_element(o.w)))}};
  if (F.empty()) throw Error(ErrorCode::InvalidInput, "give --element, --subgroup files or --w");
  return Json{{"centraliser", io::shape_to_json(houghton::centraliser_of_finite_subgroup(F))}};
}

Json houghton_conjugate(const Options& o) {
  HoughtonElement a = load_element(o.pair.at(0)), b = load_element(o.pair.at(1));
  bool c = houghton::are_conjugate_finite(a, b);
  return Json{{"conjugate", c}, {"cycle_types", Json::array({houghton::cycle_type(a), houghton::cycle_type(b)})}};
}

Json houghton_gamma(const Options& o) { return io::gamma_to_json(houghton::gamma_graph(load_element(o.element))); }

Json error_json(const std::string& name, const std::string& message) {
  return Json{{"error", name}, {"message", message}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in orbit, Mackey and Hecke categories and Houghton's groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  app.add_flag("--check", o.check, "recompute Hecke structure constants through ψ");

  auto common = [&](CLI::App* c, bool ring) {
    c->add_option("--group", o.group, "preset (C2, S3, D4, C2xC2, ...) or generators");
    c->add_option("--family", o.family, "all, triv, p<prime> or explicit:<ids>");
    if (ring) c->add_option("--ring", o.ring, "Z, Q or F<p>");
  };

  auto* group = app.add_subcommand("group", "finite group data")->require_subcommand(1);
  auto* group_info_cmd = group->add_subcommand("info", "order, subgroups and family");
  common(group_info_cmd, false);

  std::map<std::string, CLI::App*> hom_cmds;
  for (const char* kind : {"orbit", "mackey", "hecke"}) {
    auto* parent = app.add_subcommand(kind, std::string(kind) + " category")->require_subcommand(1);
    auto* h = parent->add_subcommand("homs", "hom basis between two objects");
    common(h, false);
    h->add_option("--source", o.source, "source subgroup")->required();
    h->add_option("--target", o.target, "target subgroup")->required();
    hom_cmds[kind] = h;
  }

  auto* bredon_parent = app.add_subcommand("bredon", "Bredon cohomology")->require_subcommand(1);
  auto* bredon_cmd = bredon_parent->add_subcommand("cohomology", "H^n_F(G; M)");
  common(bredon_cmd, true);
  bredon_cmd->add_option("--coeff", o.coeff, "constant, zero, truncated:<k> or representable:<subgroup>");
  bredon_cmd->add_option("--degrees", o.degrees, "range a..b");
  bredon_cmd->add_option("--cw", o.cw, "G-CW data JSON");

  auto* ext_sub = app.add_subcommand("ext", "Ext between modules");
  common(ext_sub, true);
  ext_sub->add_option("--category", o.category, "orbit, mackey or hecke");
  ext_sub->add_option("--source", o.source, "first argument");
  ext_sub->add_option("--target", o.target, "second argument");
  ext_sub->add_option("--degrees", o.degrees, "range a..b");
  ext_sub->add_option("--seed", o.seed, "generator choice for resolutions");

  auto* induce_sub = app.add_subcommand("induce", "induce R̲ along σ or π∘σ and compare");
  common(induce_sub, true);
  induce_sub->add_option("--along", o.along, "sigma or pisigma");

  auto* dual_sub = app.add_subcommand("dual", "duals and the double dual map");
  common(dual_sub, true);
  dual_sub->add_option("--category", o.category, "orbit, mackey or hecke");
  dual_sub->add_option("--module", o.module, "module spec");

  auto* hough = app.add_subcommand("houghton", "Houghton's groups")->require_subcommand(1);
  auto* cent = hough->add_subcommand("centraliser", "centraliser shape");
  cent->add_option("--element", o.element, "element JSON");
  cent->add_option("--subgroup", o.subgroup_files, "generators of a finite subgroup");
  cent->add_option("--w", o.w, "infinite order part of a virtually cyclic subgroup");
  auto* conj = hough->add_subcommand("conjugate", "conjugacy of finite order elements");
  conj->add_option("elements", o.pair, "two element files")->expected(2)->required();
  auto* gamma = hough->add_subcommand("gamma", "the graph Γ");
  gamma->add_option("--element", o.element, "element JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << error_json("MalformedInput", e.what()).dump(2) << "\n";
    return 2;
  }

  try {
    Json out;
    if (group_info_cmd->parsed()) out = group_info(o);
    for (const auto& [kind, c] : hom_cmds)
      if (c->parsed()) out = homs(o, kind);
    if (bredon_cmd->parsed()) out = bredon(o);
    if (ext_sub->parsed()) out = ext_cmd(o);
    if (induce_sub->parsed()) out = induce_cmd(o);
    if (dual_sub->parsed()) out = dual_cmd(o);
    if (cent->parsed()) out = houghton_centraliser(o);
    if (conj->parsed()) out = houghton_conjugate(o);
    if (gamma->parsed()) out = houghton_gamma(o);
    emit(out, o);
    return 0;
  } catch (const Error& e) {
    std::cout << error_json(e.name(), e.what()).dump(2) << "\n";
    return e.code() == ErrorCode::InvalidInput ? 2 : 1;
  } catch (const nlohmann::json::exception& e) {
    std::cout << error_json("MalformedInput", e.what()).dump(2) << "\n";
    return 2;
  }
}
