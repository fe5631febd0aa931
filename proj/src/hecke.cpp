#include "eqalg/hecke.hpp"

#include <set>

#include "eqalg/error.hpp"

namespace eqalg {
namespace hecke {

std::vector<HeckeBasic> hom_basis(const SubgroupLattice& L, SubgroupId H, SubgroupId K) {
  std::vector<HeckeBasic> out;
  for (Elem x : L.double_cosets(H, K)) out.push_back({H, K, x});
  return out;
}

HeckeBasic make(const SubgroupLattice& L, SubgroupId H, Elem x, SubgroupId K) {
  return {H, K, L.double_coset_rep(H, x, K)};
}

HeckeCombo compose(const SubgroupLattice& L, const HeckeBasic& b, const HeckeBasic& a) {
  if (a.target != b.source) throw Error(ErrorCode::ObjectMismatch, "double cosets are not composable");
  const auto& G = L.group();
  const SubgroupId H = a.source, K = a.target, Lt = b.target;
  const Elem yi = G.inv(b.x);
  HeckeCombo out;
  for (Elem z : L.double_cosets(H, Lt)) {
    std::set<std::uint32_t> cosets;
    for (Elem l : L.elements(Lt)) {
      Elem c = G.mul(z, G.mul(l, yi));
      if (L.double_coset_rep(H, c, K) == a.x) cosets.insert(L.coset_index(K, c));
    }
    if (!cosets.empty()) out[{H, Lt, z}] = static_cast<std::int64_t>(cosets.size());
  }
  return out;
}

Matrix psi(const SubgroupLattice& L, const HeckeBasic& b) {
  const auto& G = L.group();
  Matrix m(Ring::integers(), L.index(b.target), L.index(b.source));
  for (std::uint32_t i = 0; i < L.index(b.source); ++i) {
    Elem g = L.coset_rep(b.source, i);
    std::set<std::uint32_t> hit;
    for (Elem h : L.elements(b.source)) hit.insert(L.coset_index(b.target, G.mul(g, G.mul(h, b.x))));
    for (auto r : hit) m.set(r, i, 1);
  }
  return m;
}

HeckeCombo from_perm_hom(const SubgroupLattice& L, SubgroupId H, SubgroupId K, const Matrix& f) {
  // The coefficient of HzK is the entry of f(eH) at zK.
  HeckeCombo out;
  for (Elem z : L.double_cosets(H, K)) {
    const Scalar& c = f(L.coset_index(K, z), 0);
    if (c != 0) {
      if (c.get_den() != 1) throw Error(ErrorCode::InvalidInput, "non-integral permutation module map");
      out[{H, K, z}] = c.get_num().get_si();
    }
  }
  return out;
}

HeckeCombo compose_via_psi(const SubgroupLattice& L, const HeckeBasic& b, const HeckeBasic& a) {
  if (a.target != b.source) throw Error(ErrorCode::ObjectMismatch, "double cosets are not composable");
  return from_perm_hom(L, a.source, b.target, psi(L, b) * psi(L, a));
}

std::pair<HeckeBasic, std::int64_t> pi(const SubgroupLattice& L, const MackeyBasic& m) {
  SubgroupId meet = L.intersect(m.source, L.conjugate(m.target, m.g));
  return {make(L, m.source, m.g, m.target), static_cast<std::int64_t>(L.order(meet) / L.order(m.tube))};
}

HeckeBasic rho(const SubgroupLattice& L, SubgroupId H, SubgroupId Q) {
  if (!L.is_contained(Q, H)) throw Error(ErrorCode::NotASubgroup, "ρ needs Q ≤ H");
  return make(L, Q, 0, H);
}

std::pair<HeckeBasic, Scalar> iota(const SubgroupLattice& L, SubgroupId H, SubgroupId Q, const Ring& ring) {
  if (!L.is_contained(Q, H)) throw Error(ErrorCode::NotASubgroup, "ι needs Q ≤ H");
  unsigned long idx = L.order(H) / L.order(Q);
  bool unit = ring.kind() == Ring::Kind::Rationals || idx == 1 ||
              (ring.kind() == Ring::Kind::PrimeField && idx % ring.characteristic() != 0);
  if (!unit) throw Error(ErrorCode::RingMismatch, "index " + std::to_string(idx) + " is not invertible in " + ring.name());
  Scalar c(1, idx);
  if (ring.kind() == Ring::Kind::PrimeField) {
    mpz_class inv;
    mpz_class i(idx), p(ring.characteristic());
    mpz_invert(inv.get_mpz_t(), i.get_mpz_t(), p.get_mpz_t());
    c = inv;
  }
  return {make(L, H, 0, Q), c};
}

}  // namespace hecke

HeckeCategory::HeckeCategory(Family family, bool cross_check)
    : family_(std::move(family)), objects_(family_.representatives()) {
  const auto& L = lattice();
  const auto& G = L.group();
  const std::size_t n = objects_.size();
  basis_.assign(n, std::vector<std::vector<HeckeBasic>>(n));
  lookup_.assign(n, std::vector<std::map<Elem, std::uint32_t>>(n));
  CategorySpec spec;
  spec.kind = "hecke";
  spec.lattice = family_.lattice();
  spec.basis_labels.assign(n, std::vector<std::vector<std::string>>(n));
  for (std::size_t x = 0; x < n; ++x) {
    spec.objects.push_back({"G/" + L.describe(objects_[x]), objects_[x], L.order(objects_[x])});
    for (std::size_t y = 0; y < n; ++y) {
      basis_[x][y] = hecke::hom_basis(L, objects_[x], objects_[y]);
      for (std::uint32_t k = 0; k < basis_[x][y].size(); ++k) {
        lookup_[x][y][basis_[x][y][k].x] = k;
        spec.basis_labels[x][y].push_back("H[" + format_cycles(G.element(basis_[x][y][k].x)) + "]K");
      }
    }
    spec.identity.push_back(lookup_[x][x].at(0));
  }
  spec.compose = [this, &L, cross_check](std::size_t x, std::size_t y, std::size_t z, std::uint32_t b,
                                         std::uint32_t a) {
    const auto& hb = basis_[y][z][b];
    const auto& ha = basis_[x][y][a];
    HeckeCombo c = hecke::compose(L, hb, ha);
    if (cross_check && c != hecke::compose_via_psi(L, hb, ha))
      throw Error(ErrorCode::InvalidInput, "counting formula disagrees with the ψ oracle");
    return to_sparse(x, z, c);
  };
  category_ = FinAbCategory::build(spec);
}

std::uint32_t HeckeCategory::index_of(std::size_t x, std::size_t y, const HeckeBasic& b) const {
  if (b.source != objects_[x] || b.target != objects_[y])
    throw Error(ErrorCode::ObjectMismatch, "double coset has the wrong endpoints");
  auto it = lookup_[x][y].find(b.x);
  if (it == lookup_[x][y].end()) throw Error(ErrorCode::InvalidInput, "double coset rep is not canonical");
  return it->second;
}

SparseVec HeckeCategory::to_sparse(std::size_t x, std::size_t y, const HeckeCombo& c) const {
  std::vector<std::pair<std::uint32_t, std::int64_t>> terms;
  for (const auto& [b, k] : c) terms.push_back({index_of(x, y, b), k});
  return sparse_normalize(terms);
}

AbFunctor pi_functor(const MackeyCategory& M, const HeckeCategory& H) {
  if (M.family().lattice() != H.family().lattice() || M.size() != H.size())
    throw Error(ErrorCode::ObjectMismatch, "Mackey and Hecke categories come from different data");
  const auto& L = M.lattice();
  std::vector<std::size_t> objects(M.size());
  for (std::size_t x = 0; x < objects.size(); ++x) objects[x] = x;
  return AbFunctor(M.category(), H.category(), objects, [&](std::size_t x, std::size_t y, std::uint32_t k) {
    auto [b, c] = hecke::pi(L, M.basis(x, y)[k]);
    return SparseVec{{H.index_of(x, y, b), c}};
  });
}

}  // namespace eqalg
