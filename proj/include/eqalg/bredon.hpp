#pragma once

#include <cstdint>
#include <vector>

#include "eqalg/module.hpp"
#include "eqalg/orbit.hpp"

namespace eqalg {

/// Combinatorial G-CW data: cells[n][i] is the i-th equivariant n-cell G/H_i × eⁿ.
/// Its boundary is Σ coeff · (cell j of dimension n−1 attached along α_coset).
struct GCWData {
  struct Term {
    std::size_t cell = 0;
    Elem coset = 0;
    std::int64_t coeff = 0;
  };
  struct Cell {
    SubgroupId isotropy = 0;
    std::vector<Term> boundary;
  };
  std::vector<std::vector<Cell>> cells;
};

struct BredonComplex {
  FreeComplex complex;
  std::vector<Matrix> augmentation;  // images in R̲ of the 0-cells
};

/// C_n = ⊕ R[−, G/H_i]. Throws IsotropyNotInFamily or NotAComplex.
BredonComplex bredon_chain_complex(const OrbitCategory& O, const GCWData& X, const Ring& ring);
/// H^n of Hom(C_*(X), M).
std::vector<AbelianInvariants> bredon_cohomology_of(const BredonComplex& C, const CatModule& M, std::size_t degree);
/// H^n_F(G; M) = Ext^n(R̲, M).
std::vector<AbelianInvariants> bredon_cohomology(const OrbitCategory& O, const CatModule& M, std::size_t degree);

}  // namespace eqalg
