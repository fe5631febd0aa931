#include "eqalg/orbit.hpp"

#include <set>

#include "eqalg/error.hpp"

namespace eqalg {

OrbitCategory::OrbitCategory(Family family) : family_(std::move(family)), objects_(family_.representatives()) {
  const auto& L = lattice();
  const auto& G = L.group();
  const std::size_t n = objects_.size();
  basis_.assign(n, std::vector<std::vector<Elem>>(n));
  lookup_.assign(n, std::vector<std::vector<std::uint32_t>>(n));
  CategorySpec spec;
  spec.kind = "orbit";
  spec.lattice = family_.lattice();
  spec.basis_labels.assign(n, std::vector<std::vector<std::string>>(n));
  for (std::size_t x = 0; x < n; ++x) {
    spec.objects.push_back({"G/" + L.describe(objects_[x]), objects_[x], L.order(objects_[x])});
    for (std::size_t y = 0; y < n; ++y) {
      basis_[x][y] = L.fixed_points(objects_[x], objects_[y]);
      lookup_[x][y].assign(L.index(objects_[y]), UINT32_MAX);
      for (std::uint32_t k = 0; k < basis_[x][y].size(); ++k) {
        Elem g = basis_[x][y][k];
        lookup_[x][y][L.coset_index(objects_[y], g)] = k;
        spec.basis_labels[x][y].push_back("a[" + format_cycles(G.element(g)) + "]");
      }
    }
    spec.identity.push_back(lookup_[x][x][0]);
  }
  spec.compose = [this, &G](std::size_t x, std::size_t y, std::size_t z, std::uint32_t b, std::uint32_t a) {
    Elem g = basis_[x][y][a], h = basis_[y][z][b];
    return SparseVec{{index_of(x, z, G.mul(g, h)), 1}};
  };
  category_ = FinAbCategory::build(spec);
}

std::size_t OrbitCategory::object_of(SubgroupId h) const {
  if (!family_.contains(h)) throw Error(ErrorCode::IsotropyNotInFamily, "subgroup " + std::to_string(h) + " not in family");
  for (std::size_t x = 0; x < objects_.size(); ++x)
    if (lattice().class_of(objects_[x]) == lattice().class_of(h)) return x;
  throw Error(ErrorCode::IsotropyNotInFamily, "subgroup class missing from the skeleton");
}

std::uint32_t OrbitCategory::index_of(std::size_t x, std::size_t y, Elem g) const {
  std::uint32_t k = lookup_[x][y][lattice().coset_index(objects_[y], g)];
  if (k == UINT32_MAX) throw Error(ErrorCode::InvalidInput, "coset does not define a G-map");
  return k;
}

OrbitCategory::RightWeyl OrbitCategory::right_weyl_decomposition(std::size_t x, std::size_t y) const {
  const auto& L = lattice();
  SubgroupId K = objects_[y];
  SubgroupId N = L.normaliser(K);
  std::set<std::uint32_t> cosets;
  for (Elem g : basis_[x][y]) cosets.insert(L.coset_index(N, g));
  RightWeyl out{{}, L.weyl_order(K)};
  for (auto c : cosets) out.index_set.push_back(L.coset_rep(N, c));
  return out;
}

std::vector<OrbitCategory::LeftWeylOrbit> OrbitCategory::left_weyl_decomposition(std::size_t x, std::size_t y) const {
  const auto& L = lattice();
  const auto& G = L.group();
  SubgroupId H = objects_[x], K = objects_[y];
  SubgroupId N = L.normaliser(H);
  std::vector<LeftWeylOrbit> out;
  for (Elem r : L.double_cosets(N, K)) {
    if (!L.is_contained(L.conjugate(H, G.inv(r)), K)) continue;
    SubgroupId stab = L.intersect(N, L.conjugate(K, r));
    out.push_back({r, L.order(stab) / L.order(H)});
  }
  return out;
}

}  // namespace eqalg
