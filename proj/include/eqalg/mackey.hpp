#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "eqalg/category.hpp"
#include "eqalg/group.hpp"
#include "eqalg/orbit.hpp"

namespace eqalg {

/// The span (G/K ←id− G/L −α_g→ G/S): a morphism G/K → G/S with g the least
/// element of KgS and L ≤ gSg⁻¹ ∩ K least in its (gSg⁻¹ ∩ K)-class.
struct MackeyBasic {
  SubgroupId source = 0;
  SubgroupId target = 0;
  Elem g = 0;
  SubgroupId tube = 0;
  auto operator<=>(const MackeyBasic&) const = default;
};

using MackeyCombo = std::map<MackeyBasic, std::int64_t>;

namespace mackey {

/// Basis of hom(G/K, G/S) for arbitrary subgroups, ordered by (g, tube).
std::vector<MackeyBasic> hom_basis(const SubgroupLattice& L, SubgroupId K, SubgroupId S);

/// Standard form of the span G/K ←α_a− G/L −α_b→ G/S.
MackeyBasic standard_form(const SubgroupLattice& L, SubgroupId K, SubgroupId S, Elem a, SubgroupId tube, Elem b);

/// m2 ∘ m1 by decomposing the G-set pullback into orbits.
MackeyCombo compose_basic(const SubgroupLattice& L, const MackeyBasic& m2, const MackeyBasic& m1);
MackeyCombo compose(const SubgroupLattice& L, const MackeyCombo& m2, const MackeyCombo& m1);

MackeyBasic identity(const SubgroupLattice& L, SubgroupId K);
/// I^H_K: G/H → G/K, the span G/H ← G/K → G/K. Needs K ≤ H.
MackeyBasic induction(const SubgroupLattice& L, SubgroupId H, SubgroupId K);
/// R^H_K: G/K → G/H, the span G/K ← G/K → G/H. Needs K ≤ H.
MackeyBasic restriction(const SubgroupLattice& L, SubgroupId H, SubgroupId K);
/// c_g: G/gHg⁻¹ → G/H, the span with right leg α_g.
MackeyBasic conjugation(const SubgroupLattice& L, SubgroupId H, Elem g);

/// The double-coset formula Σ_{x ∈ L^g\K/T} G/(L^g ∩ T^{x}) counted by tube
/// order; used as an independent check of compose_basic.
std::size_t pullback_orbit_count(const SubgroupLattice& L, const MackeyBasic& m2, const MackeyBasic& m1);

/// Checked and failed instances of the Green axioms (0)–(6) over all
/// subgroups J, K ≤ H and all conjugating elements.
struct GreenAxiomReport {
  std::array<std::size_t, 7> checked{}, failed{};
  bool ok() const;
};
GreenAxiomReport check_green_axioms(const SubgroupLattice& L);

}  // namespace mackey

class MackeyCategory {
 public:
  explicit MackeyCategory(Family family);

  const Family& family() const { return family_; }
  const SubgroupLattice& lattice() const { return *family_.lattice(); }
  const FinAbCategory& category() const { return category_; }
  std::size_t size() const { return objects_.size(); }
  SubgroupId subgroup(std::size_t x) const { return objects_[x]; }
  const std::vector<MackeyBasic>& basis(std::size_t x, std::size_t y) const { return basis_[x][y]; }
  std::uint32_t index_of(std::size_t x, std::size_t y, const MackeyBasic& m) const;
  SparseVec to_sparse(std::size_t x, std::size_t y, const MackeyCombo& m) const;

 private:
  Family family_;
  std::vector<SubgroupId> objects_;
  std::vector<std::vector<std::vector<MackeyBasic>>> basis_;
  std::vector<std::vector<std::map<MackeyBasic, std::uint32_t>>> lookup_;
  FinAbCategory category_;
};

/// σ: 𝒪_F → ℳ_F, α ↦ (id, α).
AbFunctor sigma_functor(const OrbitCategory& O, const MackeyCategory& M);

}  // namespace eqalg
