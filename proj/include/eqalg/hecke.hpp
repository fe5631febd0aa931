#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "eqalg/category.hpp"
#include "eqalg/group.hpp"
#include "eqalg/linalg.hpp"
#include "eqalg/mackey.hpp"

namespace eqalg {

/// The double coset HxK as a morphism G/H → G/K, x the least element.
struct HeckeBasic {
  SubgroupId source = 0;
  SubgroupId target = 0;
  Elem x = 0;
  auto operator<=>(const HeckeBasic&) const = default;
};

using HeckeCombo = std::map<HeckeBasic, std::int64_t>;

namespace hecke {

std::vector<HeckeBasic> hom_basis(const SubgroupLattice& L, SubgroupId H, SubgroupId K);
HeckeBasic make(const SubgroupLattice& L, SubgroupId H, Elem x, SubgroupId K);

/// (HxK)·(KyL) = Σ_z |(HxK ∩ zLy⁻¹K)/K| (HzL), written as b ∘ a with
/// a = HxK, b = KyL.
HeckeCombo compose(const SubgroupLattice& L, const HeckeBasic& b, const HeckeBasic& a);

/// ψ(HxK): R[G/H] → R[G/K], gH ↦ Σ_{u ∈ H/(H∩xKx⁻¹)} guxK, as a
/// |G:K| × |G:H| matrix in the coset bases.
Matrix psi(const SubgroupLattice& L, const HeckeBasic& b);
/// Expand a G-map R[G/H] → R[G/K] in the double-coset basis.
HeckeCombo from_perm_hom(const SubgroupLattice& L, SubgroupId H, SubgroupId K, const Matrix& f);
/// b ∘ a computed by multiplying ψ matrices.
HeckeCombo compose_via_psi(const SubgroupLattice& L, const HeckeBasic& b, const HeckeBasic& a);

/// π(K ← L → S) = |K ∩ gSg⁻¹ : L| · (KgS).
std::pair<HeckeBasic, std::int64_t> pi(const SubgroupLattice& L, const MackeyBasic& m);

/// ρ_H = R^H_Q: G/Q → G/H for Q ≤ H.
HeckeBasic rho(const SubgroupLattice& L, SubgroupId H, SubgroupId Q);
/// ι_H = |H:Q|⁻¹ · I^H_Q: G/H → G/Q, as (basis element, coefficient). Throws
/// RingMismatch unless |H:Q| is a unit of the ring.
std::pair<HeckeBasic, Scalar> iota(const SubgroupLattice& L, SubgroupId H, SubgroupId Q, const Ring& ring);

}  // namespace hecke

class HeckeCategory {
 public:
  /// With `cross_check`, every structure constant is recomputed through ψ and
  /// a mismatch throws InvalidInput.
  explicit HeckeCategory(Family family, bool cross_check = false);

  const Family& family() const { return family_; }
  const SubgroupLattice& lattice() const { return *family_.lattice(); }
  const FinAbCategory& category() const { return category_; }
  std::size_t size() const { return objects_.size(); }
  SubgroupId subgroup(std::size_t x) const { return objects_[x]; }
  const std::vector<HeckeBasic>& basis(std::size_t x, std::size_t y) const { return basis_[x][y]; }
  std::uint32_t index_of(std::size_t x, std::size_t y, const HeckeBasic& b) const;
  SparseVec to_sparse(std::size_t x, std::size_t y, const HeckeCombo& c) const;

 private:
  Family family_;
  std::vector<SubgroupId> objects_;
  std::vector<std::vector<std::vector<HeckeBasic>>> basis_;
  std::vector<std::vector<std::map<Elem, std::uint32_t>>> lookup_;
  FinAbCategory category_;
};

/// π: ℳ_F → ℋ_F.
AbFunctor pi_functor(const MackeyCategory& M, const HeckeCategory& H);

}  // namespace eqalg
