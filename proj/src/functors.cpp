#include "eqalg/functors.hpp"

#include <algorithm>
#include <map>

#include "eqalg/error.hpp"

namespace eqalg {

BurnsideModule burnside_module(const MackeyCategory& M, const Ring& ring) {
  const auto& L = M.lattice();
  const SubgroupId top = L.whole();
  BurnsideModule out;
  out.formal = !M.family().contains(top);
  std::vector<std::vector<MackeyBasic>> basis(M.size());
  std::vector<std::map<MackeyBasic, std::size_t>> index(M.size());
  std::vector<FgModule> values;
  for (std::size_t x = 0; x < M.size(); ++x) {
    basis[x] = mackey::hom_basis(L, M.subgroup(x), top);
    for (std::size_t k = 0; k < basis[x].size(); ++k) index[x][basis[x][k]] = k;
    values.push_back(FgModule::free(ring, basis[x].size()));
  }
  out.module = CatModule(M.category(), ring, values, [&](std::size_t x, std::size_t y, std::uint32_t k) {
    Matrix m(ring, basis[x].size(), basis[y].size());
    const MackeyBasic& a = M.basis(x, y)[k];
    for (std::size_t f = 0; f < basis[y].size(); ++f)
      for (const auto& [b, c] : mackey::compose_basic(L, basis[y][f], a))
        m.add_to(index[x].at(b), f, Scalar(static_cast<long>(c)));
    return m;
  });
  return out;
}

GModule GModule::trivial(std::size_t rank) { return GModule{rank, {}}; }

GModule GModule::permutation(const SubgroupLattice& L, SubgroupId K) {
  const auto& G = L.group();
  GModule M{L.index(K), {}};
  for (Elem g : G.generator_indices()) {
    Matrix m(Ring::integers(), M.rank, M.rank);
    for (std::uint32_t i = 0; i < M.rank; ++i) m.set(L.coset_index(K, G.mul(g, L.coset_rep(K, i))), i, 1);
    M.generators.push_back(m);
  }
  return M;
}

std::vector<Matrix> GModule::all_elements(const PermGroup& G) const {
  const auto& gens = G.generator_indices();
  std::vector<Matrix> rho(G.order());
  std::vector<bool> done(G.order(), false);
  rho[0] = Matrix::identity(Ring::integers(), rank);
  done[0] = true;
  if (generators.empty()) {
    for (auto& r : rho) r = Matrix::identity(Ring::integers(), rank);
    return rho;
  }
  if (generators.size() != gens.size()) throw Error(ErrorCode::InvalidInput, "one matrix per group generator required");
  std::vector<Elem> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    Elem a = queue[q];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Elem b = G.mul(gens[s], a);
      Matrix m = generators[s] * rho[a];
      if (!done[b]) {
        done[b] = true;
        rho[b] = m;
        queue.push_back(b);
      } else if (rho[b] != m) {
        throw Error(ErrorCode::InvalidInput, "generator matrices do not define a representation");
      }
    }
  }
  return rho;
}

Matrix fixed_points(const std::vector<Matrix>& rho, const SubgroupLattice& L, SubgroupId H, const Ring& ring) {
  const std::size_t n = rho[0].rows();
  Matrix stack(ring, 0, n);
  const auto& G = L.group();
  for (Elem h : L.elements(H)) {
    if (h == G.identity()) continue;
    stack = stack.vcat((rho[h] - Matrix::identity(Ring::integers(), n)).with_ring(ring));
  }
  if (stack.rows() == 0) return Matrix::identity(ring, n);
  return kernel_basis(stack);
}

Matrix fixed_point_transfer(const std::vector<Matrix>& rho, const SubgroupLattice& L, const HeckeBasic& b,
                            const Ring& ring) {
  const auto& G = L.group();
  const std::size_t n = rho[0].rows();
  SubgroupId meet = L.intersect(b.source, L.conjugate(b.target, b.x));
  Matrix T(ring, n, n);
  for (Elem u : L.elements(b.source))
    if (L.coset_rep(meet, L.coset_index(meet, u)) == u) T = T + rho[G.mul(u, b.x)].with_ring(ring);
  Matrix ZH = fixed_points(rho, L, b.source, ring), ZK = fixed_points(rho, L, b.target, ring);
  return Subquotient(ZH, Matrix(ring, n, 0)).coords(T * ZK);
}

CatModule fixed_point_module(const GModule& M, const HeckeCategory& H, const Ring& ring) {
  const auto& L = H.lattice();
  std::vector<Matrix> rho = M.all_elements(L.group());
  std::vector<Subquotient> sqs;
  for (std::size_t x = 0; x < H.size(); ++x)
    sqs.push_back(Subquotient(fixed_points(rho, L, H.subgroup(x), ring), Matrix(ring, M.rank, 0)));
  return CatModule::from_subquotients(H.category(), ring, sqs, [&](std::size_t x, std::size_t y, std::uint32_t k) {
    const HeckeBasic& b = H.basis(x, y)[k];
    const auto& G = L.group();
    SubgroupId meet = L.intersect(b.source, L.conjugate(b.target, b.x));
    Matrix T(ring, M.rank, M.rank);
    for (Elem u : L.elements(b.source))
      if (L.coset_rep(meet, L.coset_index(meet, u)) == u) T = T + rho[G.mul(u, b.x)].with_ring(ring);
    return T;
  });
}

CatModule fixed_point_constant(const HeckeCategory& H, const Ring& ring) {
  return fixed_point_module(GModule::trivial(1), H, ring);
}

ModuleMap sigma_comparison(const OrbitCategory& O, const MackeyCategory& M, const Ring& ring) {
  AbFunctor sigma = sigma_functor(O, M);
  CatModule R = constant_module(O.category(), ring);
  CatModule B = burnside_module(M, ring).module;
  CatModule ResB = restrict_module(B, sigma);
  const auto& L = M.lattice();
  ModuleMap phi{R, ResB, {}};
  for (std::size_t x = 0; x < O.size(); ++x) {
    SubgroupId K = O.subgroup(x);
    auto basis = mackey::hom_basis(L, K, L.whole());
    auto it = std::find(basis.begin(), basis.end(), mackey::standard_form(L, K, L.whole(), 0, K, 0));
    Matrix v(ring, ResB.value(x).ngens(), 1);
    v.set(static_cast<std::size_t>(it - basis.begin()), 0, 1);
    phi.components.push_back(v);
  }
  return induction_adjoint(phi, sigma, B);
}

ModuleMap pi_sigma_comparison(const OrbitCategory& O, const MackeyCategory& M, const HeckeCategory& H,
                              const Ring& ring) {
  AbFunctor ps = sigma_functor(O, M).then(pi_functor(M, H));
  CatModule R = constant_module(O.category(), ring);
  CatModule Rm = fixed_point_constant(H, ring);
  ModuleMap one = ModuleMap::identity(R);
  one.target = restrict_module(Rm, ps);
  return induction_adjoint(one, ps, Rm);
}

}  // namespace eqalg
