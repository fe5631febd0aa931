#include "eqalg/io.hpp"

#include <fstream>
#include <sstream>

#include "eqalg/error.hpp"

namespace eqalg {
namespace io {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\n") - b + 1);
}

Elem element_of(const SubgroupLattice& L, const std::string& text) {
  auto idx = L.group().index_of(parse_cycles(text, L.group().degree()));
  if (!idx) throw Error(ErrorCode::InvalidInput, "permutation " + text + " is not in the group");
  return *idx;
}

Point point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw Error(ErrorCode::InvalidInput, "a point is a pair [i, x]");
  return {j[0].get<std::int64_t>(), j[1].get<int>()};
}

Json point_to_json(const Point& p) { return Json::array({p.i, p.x}); }

}  // namespace

SubgroupId parse_subgroup(const SubgroupLattice& L, const std::string& text) {
  std::string t = trim(text);
  if (t == "1" || t == "triv" || t == "()") return L.trivial();
  if (t == "G" || t == "all") return L.whole();
  if (!t.empty() && t[0] == '#') {
    std::size_t used = 0;
    unsigned long id = 0;
    try {
      id = std::stoul(t.substr(1), &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidInput, "bad subgroup id " + t);
    }
    if (used + 1 != t.size() || id >= L.size()) throw Error(ErrorCode::InvalidInput, "bad subgroup id " + t);
    return static_cast<SubgroupId>(id);
  }
  std::vector<Elem> gens;
  std::stringstream ss(t);
  for (std::string piece; std::getline(ss, piece, ';');)
    if (!trim(piece).empty()) gens.push_back(element_of(L, trim(piece)));
  return L.generated_by(gens);
}

std::pair<std::size_t, std::size_t> parse_degrees(const std::string& text) {
  auto bad = [&] { return Error(ErrorCode::InvalidInput, "degrees must look like 0..4 or 4"); };
  auto num = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) throw bad();
    return static_cast<std::size_t>(std::stoul(s));
  };
  auto dots = text.find("..");
  if (dots == std::string::npos) return {0, num(trim(text))};
  std::size_t lo = num(trim(text.substr(0, dots))), hi = num(trim(text.substr(dots + 2)));
  if (lo > hi) throw bad();
  return {lo, hi};
}

Json invariants(const std::vector<AbelianInvariants>& v) {
  Json out = Json::array();
  for (const auto& a : v) out.push_back(a.to_string());
  return out;
}

Json subgroup(const SubgroupLattice& L, SubgroupId h) {
  Json gens = Json::array();
  for (Elem g : L.generators(h)) gens.push_back(format_cycles(L.group().element(g)));
  return Json{{"id", h}, {"order", L.order(h)}, {"generators", gens}};
}

GCWData gcw_from_json(const SubgroupLattice& L, const Json& j) {
  if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array())
    throw Error(ErrorCode::InvalidInput, "G-CW data needs a \"cells\" array");
  GCWData X;
  std::vector<std::vector<SubgroupId>> iso;
  for (const auto& dim : j["cells"]) {
    if (!dim.is_array()) throw Error(ErrorCode::InvalidInput, "cells must be grouped by dimension");
    X.cells.emplace_back();
    iso.emplace_back();
    for (const auto& c : dim) {
      if (!c.is_object() || !c.contains("isotropy")) throw Error(ErrorCode::InvalidInput, "cell needs an isotropy");
      GCWData::Cell cell;
      const Json& s = c["isotropy"];
      if (s.is_number_unsigned()) {
        if (s.get<std::size_t>() >= L.size()) throw Error(ErrorCode::InvalidInput, "isotropy id out of range");
        cell.isotropy = s.get<SubgroupId>();
      } else if (s.is_string()) {
        cell.isotropy = parse_subgroup(L, s.get<std::string>());
      } else {
        throw Error(ErrorCode::InvalidInput, "isotropy is a subgroup id or generator string");
      }
      X.cells.back().push_back(cell);
      iso.back().push_back(cell.isotropy);
    }
  }
  for (std::size_t n = 0; n < X.cells.size(); ++n)
    for (std::size_t i = 0; i < X.cells[n].size(); ++i) {
      const Json& c = j["cells"][n][i];
      if (!c.contains("boundary")) continue;
      if (!c["boundary"].is_array()) throw Error(ErrorCode::InvalidInput, "boundary must be an array");
      for (const auto& t : c["boundary"]) {
        if (!t.is_object() || !t.contains("cell") || !t["cell"].is_number_unsigned())
          throw Error(ErrorCode::InvalidInput, "boundary term needs a cell index");
        GCWData::Term term;
        term.cell = t["cell"].get<std::size_t>();
        term.coeff = t.value("coeff", std::int64_t{1});
        if (n == 0 || term.cell >= iso[n - 1].size())
          throw Error(ErrorCode::InvalidInput, "boundary cell out of range");
        const Json& co = t.contains("coset") ? t["coset"] : Json(0);
        if (co.is_number_unsigned()) {
          SubgroupId H = iso[n - 1][term.cell];
          if (co.get<std::size_t>() >= L.index(H)) throw Error(ErrorCode::InvalidInput, "coset index out of range");
          term.coset = L.coset_rep(H, co.get<std::uint32_t>());
        } else if (co.is_string()) {
          term.coset = element_of(L, co.get<std::string>());
        } else {
          throw Error(ErrorCode::InvalidInput, "coset is an index or a cycle string");
        }
        X.cells[n][i].boundary.push_back(term);
      }
    }
  return X;
}

HoughtonElement houghton_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw Error(ErrorCode::InvalidInput, "element needs an integer \"n\"");
  int n = j["n"].get<int>();
  if (n < 1) throw Error(ErrorCode::InvalidInput, "need at least one ray");
  std::vector<std::int64_t> m(n, 0);
  if (j.contains("m")) {
    if (!j["m"].is_array() || j["m"].size() != static_cast<std::size_t>(n))
      throw Error(ErrorCode::InvalidInput, "\"m\" must have n entries");
    for (int x = 0; x < n; ++x) {
      if (!j["m"][x].is_number_integer()) throw Error(ErrorCode::InvalidInput, "\"m\" entries are integers");
      m[x] = j["m"][x].get<std::int64_t>();
    }
  }
  std::vector<std::pair<Point, Point>> pairs;
  if (j.contains("prefix")) {
    if (!j["prefix"].is_array()) throw Error(ErrorCode::InvalidInput, "\"prefix\" must be an array");
    for (const auto& e : j["prefix"]) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::InvalidInput, "prefix entries are [[i,x],[j,y]]");
      pairs.push_back({point_from_json(e[0]), point_from_json(e[1])});
    }
  }
  return EventualMap::make(n, pairs, m, true);
}

Json houghton_to_json(const EventualMap& h) {
  Json prefix = Json::array();
  for (const auto& [p, q] : h.table())
    if (p != q) prefix.push_back(Json::array({point_to_json(p), point_to_json(q)}));
  return Json{{"n", h.rays()}, {"prefix", prefix}, {"m", h.m()}};
}

Json shape_to_json(const houghton::CentraliserShape& C) {
  Json factors = Json::array();
  for (const auto& f : C.finite_factors)
    factors.push_back(Json{{"weyl_order", f.weyl_order},
                           {"weyl_cyclic", f.weyl_cyclic},
                           {"wreath_degree", f.degree},
                           {"orbit_size", f.orbit_size},
                           {"points", f.points},
                           {"order", f.order().get_str()}});
  Json gens = Json::array();
  for (const auto& g : C.generators) gens.push_back(houghton_to_json(g));
  Json out{{"n", C.n}, {"shape", C.describe()}};
  if (C.finite_symmetric)
    out["houghton_part"] = Json{{"finite_symmetric", true}, {"degree", C.symmetric_degree}};
  else
    out["houghton_part"] = Json{{"finite_symmetric", false}, {"k", C.k()}, {"rays", C.houghton_rays}};
  out["free_abelian_rank"] = C.free_abelian_rank;
  out["finite_factors"] = factors;
  out["finite_factor_order"] = C.finite_factor_order().get_str();
  out["generators"] = gens;
  return out;
}

Json gamma_to_json(const houghton::GammaGraph& G) {
  Json edges = Json::array();
  for (auto [a, b] : G.edges) edges.push_back(Json::array({a, b}));
  return Json{{"n", G.n},
              {"J", G.J},
              {"vertices", G.vertices},
              {"edges", edges},
              {"components", G.components},
              {"r", G.components.size()}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, path + ": " + e.what());
  }
}

}  // namespace io
}  // namespace eqalg
