#include "eqalg/mackey.hpp"

#include <algorithm>

#include "eqalg/error.hpp"

namespace eqalg {
namespace mackey {

std::vector<MackeyBasic> hom_basis(const SubgroupLattice& L, SubgroupId K, SubgroupId S) {
  std::vector<MackeyBasic> out;
  for (Elem g : L.double_cosets(K, S)) {
    SubgroupId J = L.intersect(L.conjugate(S, g), K);
    for (SubgroupId t = 0; t < L.size(); ++t)
      if (L.is_contained(t, J) && L.canonical_conjugate(t, J) == t) out.push_back({K, S, g, t});
  }
  return out;
}

MackeyBasic standard_form(const SubgroupLattice& L, SubgroupId K, SubgroupId S, Elem a, SubgroupId tube, Elem b) {
  const auto& G = L.group();
  Elem ai = G.inv(a);
  SubgroupId left = L.conjugate(tube, ai);  // a⁻¹·tube·a
  if (!L.is_contained(left, K)) throw Error(ErrorCode::InvalidInput, "left leg of span is not a G-map");
  if (!L.is_contained(L.conjugate(tube, G.inv(b)), S))
    throw Error(ErrorCode::InvalidInput, "right leg of span is not a G-map");
  Elem g2 = G.mul(ai, b);
  Elem g = L.double_coset_rep(K, g2, S);
  Elem gi = G.inv(g);
  for (Elem k : L.elements(K)) {
    if (!L.contains(S, G.mul(gi, G.mul(G.inv(k), g2)))) continue;
    SubgroupId moved = L.conjugate(left, G.inv(k));  // k⁻¹·left·k
    SubgroupId J = L.intersect(L.conjugate(S, g), K);
    return {K, S, g, L.canonical_conjugate(moved, J)};
  }
  throw Error(ErrorCode::InvalidInput, "double coset decomposition failed");
}

MackeyCombo compose_basic(const SubgroupLattice& L, const MackeyBasic& m2, const MackeyBasic& m1) {
  if (m1.target != m2.source) throw Error(ErrorCode::ObjectMismatch, "spans are not composable");
  const auto& G = L.group();
  const SubgroupId K = m1.target, A = m1.tube, B = m2.tube;
  const std::size_t nA = L.index(A), nB = L.index(B);

  std::vector<std::vector<std::uint32_t>> over(L.index(K));
  for (std::uint32_t j = 0; j < nB; ++j) over[L.coset_index(K, L.coset_rep(B, j))].push_back(j);

  // Pullback {(aA, bB) : a·g·K = b·K}.
  std::vector<std::uint32_t> id(nA * nB, UINT32_MAX);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t i = 0; i < nA; ++i) {
    std::uint32_t kc = L.coset_index(K, G.mul(L.coset_rep(A, i), m1.g));
    for (auto j : over[kc]) {
      id[i * nB + j] = static_cast<std::uint32_t>(pairs.size());
      pairs.push_back({i, j});
    }
  }

  MackeyCombo out;
  std::vector<bool> seen(pairs.size(), false);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t p = 0; p < pairs.size(); ++p) {
    if (seen[p]) continue;
    seen[p] = true;
    queue.assign(1, p);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      auto [i, j] = pairs[queue[q]];
      for (Elem s : G.generator_indices()) {
        std::uint32_t i2 = L.coset_index(A, G.mul(s, L.coset_rep(A, i)));
        std::uint32_t j2 = L.coset_index(B, G.mul(s, L.coset_rep(B, j)));
        std::uint32_t r = id[i2 * nB + j2];
        if (!seen[r]) {
          seen[r] = true;
          queue.push_back(r);
        }
      }
    }
    Elem a = L.coset_rep(A, pairs[p].first), b = L.coset_rep(B, pairs[p].second);
    SubgroupId stab = L.intersect(L.conjugate(A, a), L.conjugate(B, b));
    ++out[standard_form(L, m1.source, m2.target, a, stab, G.mul(b, m2.g))];
  }
  return out;
}

MackeyCombo compose(const SubgroupLattice& L, const MackeyCombo& m2, const MackeyCombo& m1) {
  MackeyCombo out;
  for (const auto& [b, cb] : m2)
    for (const auto& [a, ca] : m1)
      for (const auto& [m, c] : compose_basic(L, b, a)) out[m] += cb * ca * c;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

MackeyBasic identity(const SubgroupLattice& L, SubgroupId K) { return standard_form(L, K, K, 0, K, 0); }

MackeyBasic induction(const SubgroupLattice& L, SubgroupId H, SubgroupId K) {
  if (!L.is_contained(K, H)) throw Error(ErrorCode::NotASubgroup, "induction needs K ≤ H");
  return standard_form(L, H, K, 0, K, 0);
}

MackeyBasic restriction(const SubgroupLattice& L, SubgroupId H, SubgroupId K) {
  if (!L.is_contained(K, H)) throw Error(ErrorCode::NotASubgroup, "restriction needs K ≤ H");
  return standard_form(L, K, H, 0, K, 0);
}

MackeyBasic conjugation(const SubgroupLattice& L, SubgroupId H, Elem g) {
  if (g >= L.group().order()) throw Error(ErrorCode::InvalidInput, "element out of range");
  SubgroupId gH = L.conjugate(H, g);
  return standard_form(L, gH, H, 0, gH, g);
}

std::size_t pullback_orbit_count(const SubgroupLattice& L, const MackeyBasic& m2, const MackeyBasic& m1) {
  // Orbits of L^g = g⁻¹·tube1·g on the cosets kT of tube2 inside K.
  const auto& G = L.group();
  SubgroupId Lg = L.conjugate(m1.tube, G.inv(m1.g));
  std::vector<bool> marked(L.index(m2.tube), false);
  std::size_t orbits = 0;
  for (Elem k : L.elements(m1.target)) {
    std::uint32_t c = L.coset_index(m2.tube, k);
    if (marked[c]) continue;
    ++orbits;
    for (Elem l : L.elements(Lg)) marked[L.coset_index(m2.tube, G.mul(l, k))] = true;
  }
  return orbits;
}

bool GreenAxiomReport::ok() const {
  for (auto f : failed)
    if (f) return false;
  return true;
}

GreenAxiomReport check_green_axioms(const SubgroupLattice& L) {
  const auto& G = L.group();
  GreenAxiomReport rep;
  auto one = [](const MackeyBasic& m) { return MackeyCombo{{m, 1}}; };
  auto check = [&](int axiom, const MackeyCombo& a, const MackeyCombo& b) {
    ++rep.checked[axiom];
    if (a != b) ++rep.failed[axiom];
  };
  auto I = [&](SubgroupId H, SubgroupId K) { return one(induction(L, H, K)); };
  auto R = [&](SubgroupId H, SubgroupId K) { return one(restriction(L, H, K)); };
  auto c = [&](SubgroupId H, Elem g) { return one(conjugation(L, H, g)); };
  auto comp = [&](const MackeyCombo& b, const MackeyCombo& a) { return compose(L, b, a); };

  for (SubgroupId H = 0; H < L.size(); ++H) {
    MackeyCombo id = one(identity(L, H));
    check(0, I(H, H), id);
    check(0, R(H, H), id);
    for (Elem h : L.elements(H)) check(0, c(H, h), id);
    for (Elem g = 0; g < G.order(); ++g)
      for (Elem h = 0; h < G.order(); ++h) {
        SubgroupId Hh = L.conjugate(H, G.inv(h));
        check(3, comp(c(Hh, h), c(H, g)), c(Hh, G.mul(g, h)));
      }
    for (SubgroupId K = 0; K < L.size(); ++K) {
      if (!L.is_contained(K, H)) continue;
      for (SubgroupId J = 0; J < L.size(); ++J)
        if (L.is_contained(J, K)) {
          check(1, comp(R(H, K), R(K, J)), R(H, J));
          check(2, comp(I(K, J), I(H, K)), I(H, J));
        }
      for (Elem g = 0; g < G.order(); ++g) {
        SubgroupId gH = L.conjugate(H, g), gK = L.conjugate(K, g);
        check(4, comp(c(H, g), R(gH, gK)), comp(R(H, K), c(K, g)));
        check(5, comp(c(K, g), I(gH, gK)), comp(I(H, K), c(H, g)));
      }
      for (SubgroupId J = 0; J < L.size(); ++J) {
        if (!L.is_contained(J, H)) continue;
        std::vector<bool> seen(G.order(), false);
        MackeyCombo rhs;
        for (Elem x : L.elements(H)) {
          if (seen[x]) continue;
          for (Elem j : L.elements(J))
            for (Elem k : L.elements(K)) seen[G.mul(j, G.mul(x, k))] = true;
          SubgroupId top = L.intersect(J, L.conjugate(K, x));
          SubgroupId bottom = L.intersect(L.conjugate(J, G.inv(x)), K);
          for (const auto& [m, v] : comp(R(K, bottom), comp(c(bottom, x), I(J, top)))) rhs[m] += v;
        }
        check(6, comp(I(H, K), R(H, J)), rhs);
      }
    }
  }
  return rep;
}

}  // namespace mackey

MackeyCategory::MackeyCategory(Family family) : family_(std::move(family)), objects_(family_.representatives()) {
  const auto& L = lattice();
  const auto& G = L.group();
  const std::size_t n = objects_.size();
  basis_.assign(n, std::vector<std::vector<MackeyBasic>>(n));
  lookup_.assign(n, std::vector<std::map<MackeyBasic, std::uint32_t>>(n));
  CategorySpec spec;
  spec.kind = "mackey";
  spec.lattice = family_.lattice();
  spec.basis_labels.assign(n, std::vector<std::vector<std::string>>(n));
  for (std::size_t x = 0; x < n; ++x) {
    spec.objects.push_back({"G/" + L.describe(objects_[x]), objects_[x], L.order(objects_[x])});
    for (std::size_t y = 0; y < n; ++y) {
      basis_[x][y] = mackey::hom_basis(L, objects_[x], objects_[y]);
      for (std::uint32_t k = 0; k < basis_[x][y].size(); ++k) {
        const auto& m = basis_[x][y][k];
        lookup_[x][y][m] = k;
        spec.basis_labels[x][y].push_back("[" + format_cycles(G.element(m.g)) + ", " + L.describe(m.tube) + "]");
      }
    }
    spec.identity.push_back(lookup_[x][x].at(mackey::identity(L, objects_[x])));
  }
  spec.compose = [this, &L](std::size_t x, std::size_t y, std::size_t z, std::uint32_t b, std::uint32_t a) {
    return to_sparse(x, z, mackey::compose_basic(L, basis_[y][z][b], basis_[x][y][a]));
  };
  category_ = FinAbCategory::build(spec);
}

std::uint32_t MackeyCategory::index_of(std::size_t x, std::size_t y, const MackeyBasic& m) const {
  auto it = lookup_[x][y].find(m);
  if (it == lookup_[x][y].end()) throw Error(ErrorCode::ObjectMismatch, "span is not a basis element of this hom group");
  return it->second;
}

SparseVec MackeyCategory::to_sparse(std::size_t x, std::size_t y, const MackeyCombo& m) const {
  std::vector<std::pair<std::uint32_t, std::int64_t>> terms;
  for (const auto& [b, c] : m) terms.push_back({index_of(x, y, b), c});
  return sparse_normalize(terms);
}

AbFunctor sigma_functor(const OrbitCategory& O, const MackeyCategory& M) {
  if (O.family().lattice() != M.family().lattice() || O.size() != M.size())
    throw Error(ErrorCode::ObjectMismatch, "orbit and Mackey categories come from different data");
  const auto& L = O.lattice();
  std::vector<std::size_t> objects(O.size());
  for (std::size_t x = 0; x < objects.size(); ++x) objects[x] = x;
  return AbFunctor(O.category(), M.category(), objects, [&](std::size_t x, std::size_t y, std::uint32_t k) {
    SubgroupId H = O.subgroup(x);
    MackeyBasic m = mackey::standard_form(L, H, O.subgroup(y), 0, H, O.basis(x, y)[k]);
    return SparseVec{{M.index_of(x, y, m), 1}};
  });
}

}  // namespace eqalg
