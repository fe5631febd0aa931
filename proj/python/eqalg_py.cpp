#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eqalg/bredon.hpp"
#include "eqalg/error.hpp"
#include "eqalg/functors.hpp"
#include "eqalg/hecke.hpp"
#include "eqalg/houghton.hpp"
#include "eqalg/mackey.hpp"
#include "eqalg/module.hpp"
#include "eqalg/orbit.hpp"

namespace py = pybind11;
using namespace eqalg;
namespace hg = eqalg::houghton;

namespace {

struct Group {
  LatticePtr lattice;
  explicit Group(const std::string& text) : lattice(SubgroupLattice::build(parse_group(text))) {}
  Family family(const std::string& f) const { return Family::parse(lattice, f); }
};

std::vector<std::string> strings(const std::vector<AbelianInvariants>& v) {
  std::vector<std::string> out;
  for (const auto& a : v) out.push_back(a.to_string());
  return out;
}

using RawPoint = std::pair<std::int64_t, int>;

HoughtonElement make_element(int n, const std::vector<std::pair<RawPoint, RawPoint>>& prefix,
                             std::vector<std::int64_t> m) {
  if (m.empty()) m.assign(n, 0);
  std::vector<std::pair<Point, Point>> pairs;
  for (const auto& [p, q] : prefix) pairs.push_back({{p.first, p.second}, {q.first, q.second}});
  return EventualMap::make(n, pairs, std::move(m));
}

py::dict shape_dict(const hg::CentraliserShape& C) {
  py::dict d;
  d["shape"] = C.describe();
  d["houghton_rays"] = C.houghton_rays;
  d["finite_symmetric"] = C.finite_symmetric;
  d["free_abelian_rank"] = C.free_abelian_rank;
  d["finite_factor_order"] = py::int_(py::str(C.finite_factor_order().get_str()));
  return d;
}

}  // namespace

PYBIND11_MODULE(eqalg, m) {
  m.doc() = "Exact computations in equivariant homological algebra.";

  static py::exception<Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(e.name()) + ": " + e.what()).c_str());
    }
  });

  py::class_<Group>(m, "Group")
      .def(py::init<const std::string&>(), py::arg("text"))
      .def_property_readonly("order", [](const Group& g) { return g.lattice->group().order(); })
      .def_property_readonly("subgroup_count", [](const Group& g) { return g.lattice->size(); })
      .def_property_readonly("conjugacy_classes", [](const Group& g) { return g.lattice->class_count(); })
      .def("subgroup_orders", [](const Group& g) {
        std::vector<std::size_t> out;
        for (SubgroupId h = 0; h < g.lattice->size(); ++h) out.push_back(g.lattice->order(h));
        return out;
      });

  m.def("small_group_presets", &small_group_presets, py::arg("max_order"));

  m.def(
      "bredon_cohomology",
      [](const Group& g, const std::string& family, const std::string& ring, std::size_t degree) {
        OrbitCategory O(g.family(family));
        return strings(bredon_cohomology(O, constant_module(O.category(), Ring::parse(ring)), degree));
      },
      py::arg("group"), py::arg("family") = "triv", py::arg("ring") = "Z", py::arg("degree") = 4,
      "H^0..H^degree with constant coefficients, as abelian group strings.");

  m.def(
      "constant_is_projective",
      [](const Group& g, const std::string& family, const std::string& ring) {
        OrbitCategory O(g.family(family));
        return is_projective(constant_module(O.category(), Ring::parse(ring)));
      },
      py::arg("group"), py::arg("family") = "all", py::arg("ring") = "Z");

  m.def(
      "hom_rank",
      [](const Group& g, const std::string& category, std::size_t h, std::size_t k) {
        const auto& L = *g.lattice;
        if (h >= L.size() || k >= L.size()) throw Error(ErrorCode::InvalidInput, "subgroup id out of range");
        if (category == "orbit") return L.fixed_points(h, k).size();
        if (category == "mackey") return mackey::hom_basis(L, h, k).size();
        if (category == "hecke") return hecke::hom_basis(L, h, k).size();
        throw Error(ErrorCode::InvalidInput, "category is orbit, mackey or hecke");
      },
      py::arg("group"), py::arg("category"), py::arg("source"), py::arg("target"),
      "Rank of hom(G/H, G/K) for subgroup ids H and K.");

  m.def(
      "green_axioms_hold",
      [](const Group& g) { return mackey::check_green_axioms(*g.lattice).ok(); }, py::arg("group"));

  m.def(
      "hecke_counting_matches_psi",
      [](const Group& g) {
        const auto& L = *g.lattice;
        for (SubgroupId a = 0; a < L.size(); ++a)
          for (SubgroupId b = 0; b < L.size(); ++b)
            for (SubgroupId c = 0; c < L.size(); ++c)
              for (const auto& x : hecke::hom_basis(L, a, b))
                for (const auto& y : hecke::hom_basis(L, b, c))
                  if (hecke::compose(L, y, x) != hecke::compose_via_psi(L, y, x)) return false;
        return true;
      },
      py::arg("group"));

  py::class_<HoughtonElement>(m, "HoughtonElement")
      .def(py::init(&make_element), py::arg("n"), py::arg("prefix") = std::vector<std::pair<RawPoint, RawPoint>>{},
           py::arg("m") = std::vector<std::int64_t>{},
           "prefix lists ((i, x), (j, y)) overrides; m is the eventual translation per ray.")
      .def_property_readonly("rays", &HoughtonElement::rays)
      .def_property_readonly("m", &HoughtonElement::m)
      .def("__call__",
           [](const HoughtonElement& h, std::int64_t i, int x) {
             Point p = h({i, x});
             return RawPoint{p.i, p.x};
           })
      .def("__mul__", [](const HoughtonElement& a, const HoughtonElement& b) { return hg::compose(a, b); })
      .def("__eq__", [](const HoughtonElement& a, const HoughtonElement& b) { return a == b; })
      .def("inverse", &hg::inverse)
      .def("phi", &hg::phi)
      .def("is_finite_order", &hg::is_finite_order)
      .def("cycle_type", &hg::cycle_type)
      .def("support", [](const HoughtonElement& h) {
        std::vector<RawPoint> out;
        for (const auto& p : h.support()) out.push_back({p.i, p.x});
        return out;
      });

  m.def("odd_example", &hg::odd_example, py::arg("n"));
  m.def("are_conjugate", &hg::are_conjugate_finite, py::arg("a"), py::arg("b"));
  m.def(
      "centraliser",
      [](const HoughtonElement& q) {
        return shape_dict(hg::is_finite_order(q) ? hg::centraliser_of_finite_subgroup({q})
                                                 : hg::centraliser_of_element(q));
      },
      py::arg("q"));
  m.def(
      "centraliser_of_subgroup",
      [](const std::vector<HoughtonElement>& Q) { return shape_dict(hg::centraliser_of_finite_subgroup(Q)); },
      py::arg("generators"));
  m.def(
      "gamma_components",
      [](const HoughtonElement& q) { return hg::gamma_graph(q).components; }, py::arg("q"));
}
