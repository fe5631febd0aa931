#pragma once

#include <vector>

#include "eqalg/hecke.hpp"
#include "eqalg/orbit.hpp"
#include "eqalg/mackey.hpp"
#include "eqalg/module.hpp"

namespace eqalg {

/// B^G(G/K) free on hom_ℳ(G/K, G/G); a morphism acts by precomposition.
/// `formal` is set when G/G is not an object of the category.
struct BurnsideModule {
  CatModule module;
  bool formal = false;
};
BurnsideModule burnside_module(const MackeyCategory& M, const Ring& ring);

/// A lattice G-module: one invertible integer matrix per group generator,
/// acting on column vectors.
struct GModule {
  std::size_t rank = 0;
  std::vector<Matrix> generators;  // aligned with PermGroup::generator_indices()

  static GModule trivial(std::size_t rank);
  /// ℤ[G/K] with G permuting the cosets by left multiplication.
  static GModule permutation(const SubgroupLattice& L, SubgroupId K);
  /// ρ(g) for every element, in element order. Throws InvalidInput unless the
  /// generators define a representation.
  std::vector<Matrix> all_elements(const PermGroup& G) const;
};

/// Basis of M^H as columns.
Matrix fixed_points(const std::vector<Matrix>& rho, const SubgroupLattice& L, SubgroupId H, const Ring& ring);
/// The action of HxK, M^K → M^H, in the fixed-point bases: Σ_{u ∈ H/(H∩xKx⁻¹)} ρ(ux).
Matrix fixed_point_transfer(const std::vector<Matrix>& rho, const SubgroupLattice& L, const HeckeBasic& b,
                            const Ring& ring);

/// M⁻ over ℋ_F: G/H ↦ M^H.
CatModule fixed_point_module(const GModule& M, const HeckeCategory& H, const Ring& ring);
/// R⁻ = fixed_point_module of the trivial rank-one module.
CatModule fixed_point_constant(const HeckeCategory& H, const Ring& ring);

/// Ind_σ R̲ → B^G, adjoint to R̲ → Res_σ B^G sending 1 to the span G/K ← G/K → G/G.
ModuleMap sigma_comparison(const OrbitCategory& O, const MackeyCategory& M, const Ring& ring);
/// Ind_{π∘σ} R̲ → R⁻, adjoint to the identity R̲ → Res_{π∘σ} R⁻.
ModuleMap pi_sigma_comparison(const OrbitCategory& O, const MackeyCategory& M, const HeckeCategory& H,
                              const Ring& ring);

}  // namespace eqalg
