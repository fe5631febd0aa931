#pragma once

#include <cstdint>
#include <vector>

#include "eqalg/category.hpp"
#include "eqalg/group.hpp"

namespace eqalg {

/// The skeleton of the orbit category: one object G/H per conjugacy class of
/// the family, hom(G/H, G/K) with basis the G-maps α_g: xH ↦ xgK, g the least
/// element of its coset gK, g⁻¹Hg ≤ K. Composition: α_{g'} ∘ α_g = α_{gg'}.
class OrbitCategory {
 public:
  explicit OrbitCategory(Family family);

  const Family& family() const { return family_; }
  const SubgroupLattice& lattice() const { return *family_.lattice(); }
  const FinAbCategory& category() const { return category_; }
  std::size_t size() const { return objects_.size(); }
  SubgroupId subgroup(std::size_t x) const { return objects_[x]; }
  /// Object whose subgroup is conjugate to h; throws IsotropyNotInFamily.
  std::size_t object_of(SubgroupId h) const;

  /// Canonical coset reps of the basis of hom(x,y).
  const std::vector<Elem>& basis(std::size_t x, std::size_t y) const { return basis_[x][y]; }
  /// Basis index of α_g; throws InvalidInput unless α_g is a G-map.
  std::uint32_t index_of(std::size_t x, std::size_t y, Elem g) const;

  struct RightWeyl {
    std::vector<Elem> index_set;  // reps of gN_G(K) with g⁻¹Hg ≤ K
    std::size_t orbit_size;        // |WK|
  };
  RightWeyl right_weyl_decomposition(std::size_t x, std::size_t y) const;

  struct LeftWeylOrbit {
    Elem rep;                      // x ∈ N_G(H)\G/K with x⁻¹Hx ≤ K
    std::size_t stabiliser_order;  // |(N_G(H) ∩ xKx⁻¹)/H|
  };
  std::vector<LeftWeylOrbit> left_weyl_decomposition(std::size_t x, std::size_t y) const;

 private:
  Family family_;
  std::vector<SubgroupId> objects_;
  std::vector<std::vector<std::vector<Elem>>> basis_;
  std::vector<std::vector<std::vector<std::uint32_t>>> lookup_;  // [x][y][coset of K] -> basis index
  FinAbCategory category_;
};

}  // namespace eqalg
