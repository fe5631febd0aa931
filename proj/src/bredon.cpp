#include "eqalg/bredon.hpp"

#include "eqalg/error.hpp"

namespace eqalg {

namespace {

// Object x and an element a with aK_x a⁻¹ = H.
std::pair<std::size_t, Elem> locate(const OrbitCategory& O, SubgroupId H) {
  const auto& L = O.lattice();
  std::size_t x = O.object_of(H);
  for (Elem a = 0; a < L.group().order(); ++a)
    if (L.conjugate(O.subgroup(x), a) == H) return {x, a};
  throw Error(ErrorCode::IsotropyNotInFamily, "isotropy is not conjugate to a skeleton object");
}

}  // namespace

BredonComplex bredon_chain_complex(const OrbitCategory& O, const GCWData& X, const Ring& ring) {
  const auto& L = O.lattice();
  const auto& G = L.group();
  const auto& C = O.category();
  BredonComplex B;
  B.complex.acting = C;
  B.complex.ring = ring;
  std::vector<std::vector<std::pair<std::size_t, Elem>>> where(X.cells.size());
  for (std::size_t n = 0; n < X.cells.size(); ++n) {
    FreeSum F{C, ring, {}};
    for (const auto& cell : X.cells[n]) {
      if (cell.isotropy >= L.size()) throw Error(ErrorCode::InvalidInput, "isotropy id out of range");
      if (!O.family().contains(cell.isotropy))
        throw Error(ErrorCode::IsotropyNotInFamily, "cell isotropy " + L.describe(cell.isotropy) + " not in family");
      where[n].push_back(locate(O, cell.isotropy));
      F.objects.push_back(where[n].back().first);
    }
    B.complex.terms.push_back(F);
  }
  B.complex.d.push_back({});
  for (std::size_t n = 1; n < X.cells.size(); ++n) {
    std::vector<Matrix> images;
    const FreeSum& below = B.complex.terms[n - 1];
    for (std::size_t i = 0; i < X.cells[n].size(); ++i) {
      const auto& cell = X.cells[n][i];
      auto [xi, ai] = where[n][i];
      Matrix v(ring, below.rank_at(xi), 1);
      for (const auto& t : cell.boundary) {
        if (t.cell >= X.cells[n - 1].size()) throw Error(ErrorCode::InvalidInput, "boundary cell out of range");
        if (t.coset >= G.order()) throw Error(ErrorCode::InvalidInput, "boundary coset out of range");
        SubgroupId Hj = X.cells[n - 1][t.cell].isotropy;
        if (!L.is_contained(L.conjugate(cell.isotropy, G.inv(t.coset)), Hj))
          throw Error(ErrorCode::InvalidInput, "attaching coset does not define a G-map");
        auto [xj, aj] = where[n - 1][t.cell];
        Elem g = G.mul(G.inv(ai), G.mul(t.coset, aj));
        v.add_to(below.offset(xi, t.cell) + O.index_of(xi, xj, g), 0, Scalar(static_cast<long>(t.coeff)));
      }
      images.push_back(v);
    }
    B.complex.d.push_back(images);
  }
  B.complex.check_complex();
  if (!B.complex.terms.empty())
    B.augmentation.assign(B.complex.terms[0].objects.size(), Matrix::from_rows(ring, {{1}}));
  if (B.complex.terms.size() > 1) {
    CatModule R = constant_module(C, ring);
    ModuleMap eps = yoneda_map(B.complex.terms[0], R, B.augmentation);
    for (std::size_t i = 0; i < B.complex.terms[1].objects.size(); ++i) {
      std::size_t x = B.complex.terms[1].objects[i];
      if (!(eps.components[x] * B.complex.d[1][i]).is_zero())
        throw Error(ErrorCode::NotAComplex, "augmentation does not vanish on boundaries");
    }
  }
  return B;
}

std::vector<AbelianInvariants> bredon_cohomology_of(const BredonComplex& C, const CatModule& M, std::size_t degree) {
  CochainComplex K = C.complex.hom_complex(M);
  std::vector<AbelianInvariants> out;
  for (std::size_t k = 0; k <= degree; ++k) {
    if (k < K.terms.size()) {
      out.push_back(cohomology_at(K, k));
    } else {
      AbelianInvariants z;
      z.ring = M.ring();
      out.push_back(z);
    }
  }
  return out;
}

std::vector<AbelianInvariants> bredon_cohomology(const OrbitCategory& O, const CatModule& M, std::size_t degree) {
  return ext(constant_module(O.category(), M.ring()), M, degree);
}

}  // namespace eqalg
