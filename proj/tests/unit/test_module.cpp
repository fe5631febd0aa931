#include <string>

#include "doctest.h"
#include "eqalg/bredon.hpp"
#include "eqalg/error.hpp"
#include "eqalg/functors.hpp"
#include "eqalg/module.hpp"

using namespace eqalg;

namespace {

std::vector<std::string> strings(const std::vector<AbelianInvariants>& v) {
  std::vector<std::string> out;
  for (const auto& a : v) out.push_back(a.to_string());
  return out;
}

LatticePtr lattice(const char* name) { return SubgroupLattice::build(parse_group(name)); }

// Hand-written cochain complex Hom(P_*, ℤ) for the periodic resolution of ℤ
// over ℤ[C_n]: ℤ →0 ℤ →n ℤ →0 ℤ →n ℤ ...
std::vector<std::string> cyclic_cohomology_oracle(long n, std::size_t degree) {
  CochainComplex K;
  for (std::size_t k = 0; k <= degree + 1; ++k) K.terms.push_back(FgModule::free(Ring::integers(), 1));
  for (std::size_t k = 0; k <= degree; ++k) K.maps.push_back(Matrix::from_rows(Ring::integers(), {{k % 2 == 0 ? 0 : n}}));
  std::vector<std::string> out;
  for (std::size_t k = 0; k <= degree; ++k) out.push_back(cohomology_at(K, k).to_string());
  return out;
}

}  // namespace

TEST_CASE("constant and representable modules are functors") {
  for (const char* name : {"C2", "S3", "D4"}) {
    OrbitCategory O(Family::all(lattice(name)));
    const auto& C = O.category();
    CHECK(constant_module(C, Ring::integers()).count_functoriality_violations() == 0);
    CHECK(truncated_constant_module(C, Ring::integers(), 2).count_functoriality_violations() == 0);
    for (std::size_t x = 0; x < C.size(); ++x) {
      CatModule R = representable(C, x, Ring::integers());
      CHECK(R.count_functoriality_violations() == 0);
      for (std::size_t y = 0; y < C.size(); ++y) CHECK(R.value(y).ngens() == C.rank(y, x));
    }
  }
}

TEST_CASE("truncated constant supports") {
  OrbitCategory O(Family::all(lattice("S3")));
  CatModule T = truncated_constant_module(O.category(), Ring::integers(), 2);
  for (std::size_t x = 0; x < O.size(); ++x)
    CHECK(T.value(x).ngens() == (O.lattice().order(O.subgroup(x)) <= 2 ? 1u : 0u));
  CHECK_THROWS_AS(truncated_constant_module(O.category(), Ring::integers(), 0), Error);
}

TEST_CASE("free cover of R̲ over the full orbit category of C2") {
  OrbitCategory O(Family::all(lattice("C2")));
  CatModule R = constant_module(O.category(), Ring::integers());
  FreeCover fc = free_cover(R);
  REQUIRE(fc.free.objects.size() == 1);
  CHECK(O.subgroup(fc.free.objects[0]) == O.lattice().whole());
  CHECK(fc.epi.is_natural());
  CHECK(fc.epi.is_iso());
  CHECK(free_cover(zero_module(O.category(), Ring::integers())).free.objects.empty());
  FreeResolution P = resolve(R, 2);
  CHECK(P.finite);
  CHECK(P.length() == 1);
  CHECK(P.kernels[0].is_zero());
  CHECK(P.is_exact());
}

TEST_CASE("resolution over the trivial family of C2 is periodic") {
  OrbitCategory O(Family::trivial(lattice("C2")));
  CatModule R = constant_module(O.category(), Ring::integers());
  FreeResolution P = resolve(R, 4);
  REQUIRE(P.length() == 5);
  for (const auto& t : P.complex.terms) CHECK(t.objects.size() == 1);
  CHECK(P.is_exact());
  CHECK(strings(ext(R, R, 4)) == cyclic_cohomology_oracle(2, 4));
  CHECK(strings(ext(R, R, 4)) == std::vector<std::string>{"Z", "0", "Z/2", "0", "Z/2"});
  CHECK(projective_dimension_up_to(R, 3) == ">3");
  CHECK_FALSE(is_projective(R));
  CHECK(is_projective(base_change(R, Ring::rationals())));
}

TEST_CASE("Ext does not depend on generator order") {
  for (const char* name : {"S3", "C2xC2"}) {
    OrbitCategory O(Family::trivial(lattice(name)));
    CatModule R = constant_module(O.category(), Ring::integers());
    CHECK(strings(ext(R, R, 3, 0)) == strings(ext(R, R, 3, 11)));
    OrbitCategory A(Family::all(lattice(name)));
    CatModule M = representable(A.category(), 0, Ring::integers());
    CatModule T = truncated_constant_module(A.category(), Ring::integers(), 2);
    CHECK(strings(ext(T, M, 2, 0)) == strings(ext(T, M, 2, 5)));
    CHECK(resolve(T, 3, 3).is_exact());
  }
}

TEST_CASE("Bredon cohomology over all subgroups is concentrated in degree 0") {
  for (const char* name : {"C2", "S3"}) {
    OrbitCategory O(Family::all(lattice(name)));
    CatModule R = constant_module(O.category(), Ring::integers());
    CHECK(strings(bredon_cohomology(O, R, 3)) == std::vector<std::string>{"Z", "0", "0", "0"});
    CHECK(is_projective(R));
    CHECK(projective_dimension_up_to(R, 2) == "0");
  }
  // Coefficients R[−, G/1] for C2: H⁰ = Hom(R[−,G/G], M) = M(G/G) by Yoneda.
  OrbitCategory O(Family::all(lattice("C2")));
  CatModule M = representable(O.category(), O.object_of(0), Ring::integers());
  auto h = bredon_cohomology(O, M, 2);
  CHECK(h[0] == M.value(O.object_of(O.lattice().whole())).invariants());
  CHECK(h[0].to_string() == "0");
  CHECK(h[1].is_zero());
  CHECK(h[2].is_zero());
}

TEST_CASE("Yoneda isomorphisms") {
  OrbitCategory O(Family::all(lattice("S3")));
  MackeyCategory Mk(Family::all(lattice("S3")));
  for (const FinAbCategory* C : {&O.category(), &Mk.category()}) {
    std::vector<CatModule> mods{representable(*C, 1, Ring::integers())};
    if (C == &O.category()) {
      mods.push_back(constant_module(*C, Ring::integers()));
      mods.push_back(truncated_constant_module(*C, Ring::integers(), 2));
    } else {
      mods.push_back(burnside_module(Mk, Ring::integers()).module);
    }
    for (const auto& M : mods)
      for (std::size_t x = 0; x < C->size(); ++x) {
        HomGroup H = hom_group(representable(*C, x, Ring::integers()), M);
        CHECK(H.module().invariants() == M.value(x).invariants());
        TensorProduct T = tensor(representable(C->opposite(), x, Ring::integers()), M);
        CHECK(T.module().invariants() == M.value(x).invariants());
        // The Yoneda map from R[−,x] picking each generator is natural.
        for (std::size_t g = 0; g < M.value(x).ngens(); ++g) {
          Matrix e(Ring::integers(), M.value(x).ngens(), 1);
          e.set(g, 0, 1);
          CHECK(yoneda_map(FreeSum{*C, Ring::integers(), {x}}, M, {e}).is_natural());
        }
      }
  }
}

TEST_CASE("Hom group generators are natural transformations") {
  OrbitCategory O(Family::all(lattice("D4")));
  CatModule A = truncated_constant_module(O.category(), Ring::integers(), 4);
  CatModule B = direct_sum({constant_module(O.category(), Ring::integers()), representable(O.category(), 2, Ring::integers())});
  HomGroup H = hom_group(A, B);
  for (std::size_t g = 0; g < H.module().ngens(); ++g) {
    ModuleMap f = H.generator(g);
    CHECK(f.is_natural());
    CHECK(H.sq.coords(H.to_ambient(f)) == H.sq.coords(H.sq.representatives().col(g)));
  }
  CHECK(hom_group(A, A).module().invariants().free_rank >= 1);
}

TEST_CASE("torsion values") {
  OrbitCategory O(Family::trivial(lattice("C2")));
  const auto& C = O.category();
  CatModule R = constant_module(C, Ring::integers());
  // ℤ/2 with trivial action.
  CatModule T(C, Ring::integers(), {FgModule(Ring::integers(), {2})},
              [](std::size_t, std::size_t, std::uint32_t) { return Matrix::from_rows(Ring::integers(), {{1}}); });
  CHECK(T.count_functoriality_violations() == 0);
  CHECK(strings(ext(R, T, 3)) == std::vector<std::string>{"Z/2", "Z/2", "Z/2", "Z/2"});
  CHECK(strings(ext(T, R, 3)) == std::vector<std::string>{"0", "Z/2", "Z/2", "Z/2"});
  CHECK_FALSE(is_projective(T));
  CHECK(base_change(T, Ring::rationals()).is_zero());
  CHECK(base_change(T, Ring::prime_field(2)).value(0).ngens() == 1);
  CHECK(base_change(T, Ring::prime_field(3)).is_zero());
}

TEST_CASE("Tor is balanced") {
  for (const char* name : {"C2", "C3", "S3"}) {
    OrbitCategory O(Family::trivial(lattice(name)));
    const auto& C = O.category();
    CatModule A = constant_module(C, Ring::integers());
    CatModule N = constant_module(C.opposite(), Ring::integers());
    auto left = tor(N, A, 3), right = tor(A, N, 3);
    CHECK(strings(left) == strings(right));
    CHECK(left[0].to_string() == "Z");
  }
  OrbitCategory O(Family::trivial(lattice("C2")));
  auto t = tor(constant_module(O.category().opposite(), Ring::integers()), constant_module(O.category(), Ring::integers()), 3);
  CHECK(strings(t) == std::vector<std::string>{"Z", "Z/2", "0", "Z/2"});
}

TEST_CASE("base change") {
  OrbitCategory O(Family::all(lattice("S3")));
  CatModule R = constant_module(O.category(), Ring::integers());
  CatModule R3 = base_change(R, Ring::prime_field(3));
  CatModule direct = constant_module(O.category(), Ring::prime_field(3));
  for (std::size_t x = 0; x < O.size(); ++x) {
    CHECK(R3.value(x).invariants() == direct.value(x).invariants());
    for (std::size_t y = 0; y < O.size(); ++y)
      for (std::uint32_t k = 0; k < O.category().rank(x, y); ++k) CHECK(R3.act(x, y, k) == direct.act(x, y, k));
  }
  CHECK_THROWS_AS(base_change(R3, Ring::rationals()), Error);
  OrbitCategory T(Family::trivial(lattice("C3")));
  CatModule RT = constant_module(T.category(), Ring::integers());
  CHECK(projective_dimension_up_to(base_change(RT, Ring::prime_field(2)), 2) == "0");
  CHECK(projective_dimension_up_to(base_change(RT, Ring::prime_field(3)), 2) == ">2");
}

TEST_CASE("induction, restriction and the adjunction") {
  auto L = lattice("S3");
  Family F = Family::all(L);
  OrbitCategory O(F);
  MackeyCategory M(F);
  AbFunctor sigma = sigma_functor(O, M);
  const Ring Z = Ring::integers();
  // Ind preserves frees.
  for (std::size_t x = 0; x < O.size(); ++x) {
    CatModule I = induce(representable(O.category(), x, Z), sigma);
    CHECK(I.count_functoriality_violations() == 0);
    CatModule R = representable(M.category(), x, Z);
    for (std::size_t y = 0; y < M.size(); ++y) CHECK(I.value(y).invariants() == R.value(y).invariants());
  }
  CHECK(induce(zero_module(O.category(), Z), sigma).is_zero());
  CatModule A = truncated_constant_module(O.category(), Z, 2);
  CatModule B = burnside_module(M, Z).module;
  CatModule IndA = induce(A, sigma);
  CatModule ResB = restrict_module(B, sigma);
  CHECK(ResB.count_functoriality_violations() == 0);
  CHECK(hom_group(IndA, B).module().invariants() == hom_group(A, ResB).module().invariants());
  // Triangle identities.
  ModuleMap eta = induction_unit(A, sigma, IndA);
  CHECK(eta.is_natural());
  CatModule IndResIndA = induce(restrict_module(IndA, sigma), sigma);
  ModuleMap left = induce_map(eta, sigma, IndA, IndResIndA).then(induction_counit(IndA, sigma, IndResIndA));
  CHECK(left.equals(ModuleMap::identity(IndA)));
  CatModule IndResB = induce(ResB, sigma);
  ModuleMap eps = induction_counit(B, sigma, IndResB);
  CHECK(eps.is_natural());
  ModuleMap right = induction_unit(ResB, sigma, IndResB).then(restrict_map(eps, sigma));
  CHECK(right.equals(ModuleMap::identity(ResB)));
  // Coinduction is right adjoint to restriction.
  CatModule CoA = coinduce(A, sigma);
  CHECK(CoA.count_functoriality_violations() == 0);
  CHECK(hom_group(ResB, A).module().invariants() == hom_group(B, CoA).module().invariants());
}

TEST_CASE("restriction to an endomorphism category") {
  OrbitCategory O(Family::all(lattice("S3")));
  const auto& C = O.category();
  std::size_t x = O.object_of(0);
  FinAbCategory E = endomorphism_category(C, x);
  AbFunctor inc = endomorphism_inclusion(E, C, x);
  CHECK_NOTHROW(inc.verify());
  CatModule R = restrict_module(representable(C, x, Ring::integers()), inc);
  CHECK(R.value(0).ngens() == 6);
  CHECK(R.count_functoriality_violations() == 0);
}

TEST_CASE("duals, double duals and ν") {
  const Ring Z = Ring::integers();
  for (const char* name : {"C2", "S3"}) {
    OrbitCategory O(Family::all(lattice(name)));
    const auto& C = O.category();
    for (std::size_t x = 0; x < C.size(); ++x) {
      CatModule P = representable(C, x, Z);
      CatModule PD = dual(P);
      CHECK(PD.variance() == Variance::Covariant);
      CHECK(PD.count_functoriality_violations() == 0);
      // R[−,x]^D ≅ R[x,−] by the Yoneda map at the identity.
      HomGroup H = hom_group(P, representable(C, x, Z));
      ModuleMap id = ModuleMap::identity(P);
      Matrix u = PD.subquotient(x)->coords(H.to_ambient(id));
      ModuleMap y = yoneda_map(FreeSum{C.opposite(), Z, {x}}, PD, {u});
      CHECK(y.is_natural());
      CHECK(y.is_iso());
      CatModule PDD = dual(PD);
      ModuleMap zeta = double_dual_map(P, PD, PDD);
      CHECK(zeta.is_natural());
      CHECK(zeta.is_iso());
      CatModule N = constant_module(C, Z);
      TensorProduct T = tensor(PD, N);
      HomGroup HN = hom_group(P, N);
      CHECK(is_isomorphism(nu(N, P, PD, T, HN), T.module(), HN.module()));
    }
    CatModule R = constant_module(C, Z);
    CatModule RD = dual(R);
    CatModule top = representable(C.opposite(), O.object_of(O.lattice().whole()), Z);
    for (std::size_t y = 0; y < C.size(); ++y) CHECK(RD.value(y).invariants() == top.value(y).invariants());
  }
  // A torsion module has zero dual, so ζ is not injective.
  OrbitCategory T(Family::trivial(lattice("C2")));
  CatModule M(T.category(), Z, {FgModule(Z, {2})}, [&](std::size_t, std::size_t, std::uint32_t) {
    return Matrix::from_rows(Z, {{1}});
  });
  CatModule MD = dual(M);
  CHECK(MD.is_zero());
  CHECK_FALSE(double_dual_map(M, MD, dual(MD)).is_iso());
}

TEST_CASE("Burnside module") {
  const Ring Z = Ring::integers();
  MackeyCategory C2(Family::all(lattice("C2")));
  BurnsideModule B = burnside_module(C2, Z);
  CHECK_FALSE(B.formal);
  CHECK(B.module.count_functoriality_violations() == 0);
  CHECK(B.module.value(C2.size() - 1).ngens() == 2);
  CHECK(B.module.value(0).ngens() == 1);
  MackeyCategory S3(Family::all(lattice("S3")));
  CHECK(burnside_module(S3, Z).module.value(S3.size() - 1).ngens() == 4);
  MackeyCategory T(Family::trivial(lattice("S3")));
  BurnsideModule BT = burnside_module(T, Z);
  CHECK(BT.formal);
  CHECK(BT.module.count_functoriality_violations() == 0);
}

TEST_CASE("fixed point functors") {
  const Ring Z = Ring::integers();
  for (const char* name : {"C2", "S3", "D4"}) {
    auto L = lattice(name);
    HeckeCategory H(Family::all(L));
    CatModule Rm = fixed_point_constant(H, Z);
    CHECK(Rm.count_functoriality_violations() == 0);
    for (std::size_t x = 0; x < H.size(); ++x) CHECK(Rm.value(x).ngens() == 1);
    auto rho = GModule::trivial(1).all_elements(L->group());
    for (SubgroupId A = 0; A < L->size(); ++A)
      for (SubgroupId K = 0; K < L->size(); ++K) {
        if (!L->is_contained(K, A)) continue;
        auto [b, c] = hecke::pi(*L, mackey::induction(*L, A, K));
        Matrix t = fixed_point_transfer(rho, *L, b, Z).scaled(Scalar(c));
        CHECK(t == Matrix::from_rows(Z, {{static_cast<long>(L->order(A) / L->order(K))}}));
      }
    for (std::size_t y = 0; y < H.size(); ++y) {
      CatModule P = fixed_point_module(GModule::permutation(*L, H.subgroup(y)), H, Z);
      CHECK(P.count_functoriality_violations() == 0);
      for (std::size_t x = 0; x < H.size(); ++x) CHECK(P.value(x).ngens() == H.category().rank(x, y));
    }
  }
  auto L = lattice("C2");
  GModule bad{1, {Matrix::from_rows(Z, {{2}})}};
  CHECK_THROWS_AS(bad.all_elements(L->group()), Error);
}

TEST_CASE("induction isomorphisms along σ and π∘σ") {
  const Ring Z = Ring::integers();
  for (const char* name : {"C2", "S3"}) {
    Family F = Family::all(lattice(name));
    OrbitCategory O(F);
    MackeyCategory M(F);
    HeckeCategory H(F);
    AbFunctor sigma = sigma_functor(O, M);
    AbFunctor ps = sigma.then(pi_functor(M, H));
    CatModule R = constant_module(O.category(), Z);
    CatModule B = burnside_module(M, Z).module;
    CatModule ResB = restrict_module(B, sigma);
    ModuleMap phi{R, ResB, {}};
    for (std::size_t x = 0; x < O.size(); ++x) {
      Matrix v(Z, ResB.value(x).ngens(), 1);
      v.set(0, 0, 1);  // the span G/K ← G/K → G/G has tube K, the last basis element
      std::size_t last = ResB.value(x).ngens() - 1;
      v.set(0, 0, 0);
      v.set(last, 0, 1);
      phi.components.push_back(v);
    }
    REQUIRE(phi.is_natural());
    ModuleMap iso = induction_adjoint(phi, sigma, B);
    CHECK(iso.is_natural());
    CHECK(iso.is_iso());
    CatModule Rm = fixed_point_constant(H, Z);
    ModuleMap one = ModuleMap::identity(R);
    one.target = restrict_module(Rm, ps);
    REQUIRE(one.is_natural());
    ModuleMap iso2 = induction_adjoint(one, ps, Rm);
    CHECK(iso2.is_natural());
    CHECK(iso2.is_iso());
  }
}

TEST_CASE("Bredon chain complexes") {
  auto L = lattice("C2");
  OrbitCategory O(Family::all(L));
  const Ring Z = Ring::integers();
  SubgroupId top = L->whole();
  GCWData point{{{{top, {}}}}};
  BredonComplex P = bredon_chain_complex(O, point, Z);
  CatModule R = constant_module(O.category(), Z);
  CHECK(strings(bredon_cohomology_of(P, R, 2)) == std::vector<std::string>{"Z", "0", "0"});
  // Interval flipped by C2: fixed midpoint, free endpoints, one free 1-cell.
  GCWData interval;
  interval.cells = {{{top, {}}, {0, {}}}, {{0, {{0, 0, 1}, {1, 0, -1}}}}};
  BredonComplex I = bredon_chain_complex(O, interval, Z);
  CHECK(strings(bredon_cohomology_of(I, R, 2)) == std::vector<std::string>{"Z", "0", "0"});
  for (std::size_t x = 0; x < O.size(); ++x) {
    ChainComplex c;
    c.ring = Z;
    c.d.push_back(Matrix(Z, 0, I.complex.terms[0].rank_at(x)));
    c.d.push_back(I.complex.differential_at(1, x));
    CHECK(homology_at(c, 0).to_string() == "Z");
    CHECK(homology_at(c, 1).to_string() == "0");
  }
  GCWData bad;
  bad.cells = {{{top, {}}, {top, {}}}, {{top, {{1, 0, 1}, {0, 0, -1}}}}, {{top, {{0, 0, 1}}}}};
  CHECK_THROWS_AS(bredon_chain_complex(O, bad, Z), Error);
  OrbitCategory T(Family::trivial(L));
  CHECK_THROWS_AS(bredon_chain_complex(T, point, Z), Error);
  try {
    bredon_chain_complex(T, point, Z);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IsotropyNotInFamily);
  }
}
