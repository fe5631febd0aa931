#include "doctest.h"
#include "eqalg/error.hpp"
#include "eqalg/hecke.hpp"

using namespace eqalg;

namespace {

// Permutation matrix of g acting on G/H by left multiplication.
Matrix left_action(const SubgroupLattice& L, SubgroupId H, Elem g) {
  Matrix m(Ring::integers(), L.index(H), L.index(H));
  for (std::uint32_t i = 0; i < L.index(H); ++i) m.set(L.coset_index(H, L.group().mul(g, L.coset_rep(H, i))), i, 1);
  return m;
}

SubgroupId sub(const SubgroupLattice& L, const std::string& gens) {
  return L.generated_by({*L.group().index_of(parse_cycles(gens, L.group().degree()))});
}

}  // namespace

TEST_CASE("ψ is equivariant and injective on the basis") {
  for (const char* name : {"S3", "D4", "C2xC2"}) {
    auto L = SubgroupLattice::build(parse_group(name));
    for (SubgroupId H = 0; H < L->size(); ++H)
      for (SubgroupId K = 0; K < L->size(); ++K) {
        auto basis = hecke::hom_basis(*L, H, K);
        CHECK(basis.size() == L->double_cosets(H, K).size());
        Matrix sum(Ring::integers(), L->index(K), L->index(H));
        for (const auto& b : basis) {
          Matrix p = hecke::psi(*L, b);
          for (Elem g : L->group().generator_indices())
            CHECK(left_action(*L, K, g) * p == p * left_action(*L, H, g));
          CHECK(hecke::from_perm_hom(*L, H, K, p) == HeckeCombo{{b, 1}});
          sum = sum + p;
        }
        // The basis images partition the all-ones matrix: each entry hit once.
        for (std::size_t r = 0; r < sum.rows(); ++r)
          for (std::size_t c = 0; c < sum.cols(); ++c) CHECK(sum(r, c) == 1);
      }
  }
}

TEST_CASE("ψ examples") {
  auto L = SubgroupLattice::build(parse_group("S3"));
  const auto& G = L->group();
  SubgroupId H = sub(*L, "(0 1)"), top = L->whole();
  CHECK(hecke::psi(*L, hecke::make(*L, H, 0, H)) == Matrix::identity(Ring::integers(), 3));
  for (Elem g = 0; g < G.order(); ++g) {
    Matrix p = hecke::psi(*L, hecke::make(*L, 0, g, 0));
    for (Elem a = 0; a < G.order(); ++a) CHECK(p(G.mul(a, g), a) == 1);
  }
  Matrix proj = hecke::psi(*L, hecke::rho(*L, top, H));
  CHECK(proj.rows() == 1);
  CHECK(proj == Matrix::from_rows(Ring::integers(), {{1, 1, 1}}));
}

TEST_CASE("counting formula agrees with the ψ oracle") {
  for (const char* name : {"S3", "D4", "Q8", "A4"}) {
    auto L = SubgroupLattice::build(parse_group(name));
    for (SubgroupId H = 0; H < L->size(); ++H)
      for (SubgroupId K = 0; K < L->size(); ++K)
        for (SubgroupId M = 0; M < L->size(); ++M)
          for (const auto& a : hecke::hom_basis(*L, H, K))
            for (const auto& b : hecke::hom_basis(*L, K, M))
              CHECK(hecke::compose(*L, b, a) == hecke::compose_via_psi(*L, b, a));
  }
  auto L = SubgroupLattice::build(parse_group("C4"));
  CHECK_NOTHROW(HeckeCategory(Family::all(L), true));
}

TEST_CASE("hom(G/1, G/1) is the group ring") {
  auto L = SubgroupLattice::build(parse_group("S3"));
  const auto& G = L->group();
  for (Elem x = 0; x < G.order(); ++x)
    for (Elem y = 0; y < G.order(); ++y)
      CHECK(hecke::compose(*L, {0, 0, y}, {0, 0, x}) == HeckeCombo{{{0, 0, G.mul(x, y)}, 1}});
}

TEST_CASE("π examples and functoriality") {
  auto C2 = SubgroupLattice::build(parse_group("C2"));
  auto [b, c] = hecke::pi(*C2, mackey::standard_form(*C2, 1, 1, 0, 0, 0));
  CHECK(b == HeckeBasic{1, 1, 0});
  CHECK(c == 2);
  for (const char* name : {"S3", "D4", "C2xC2xC2"}) {
    auto L = SubgroupLattice::build(parse_group(name));
    Family F = Family::all(L);
    MackeyCategory M(F);
    HeckeCategory H(F);
    CHECK(H.category().count_law_violations() == 0);
    AbFunctor p = pi_functor(M, H);
    CHECK_NOTHROW(p.verify());
    for (SubgroupId K = 0; K < L->size(); ++K) {
      CHECK(hecke::pi(*L, mackey::identity(*L, K)) == std::pair<HeckeBasic, std::int64_t>{{K, K, 0}, 1});
      for (Elem g = 0; g < L->group().order(); ++g) {
        SubgroupId gK = L->conjugate(K, g);
        auto [cb, cc] = hecke::pi(*L, mackey::conjugation(*L, K, g));
        CHECK(cb == hecke::make(*L, gK, g, K));
        CHECK(cc == 1);
      }
    }
  }
}

TEST_CASE("cohomological axiom on double cosets") {
  auto L = SubgroupLattice::build(parse_group("D4"));
  for (SubgroupId H = 0; H < L->size(); ++H)
    for (SubgroupId K = 0; K < L->size(); ++K) {
      if (!L->is_contained(K, H)) continue;
      auto [i, ci] = hecke::pi(*L, mackey::induction(*L, H, K));
      auto [r, cr] = hecke::pi(*L, mackey::restriction(*L, H, K));
      auto ri = hecke::compose(*L, r, i);
      CHECK(ri == HeckeCombo{{{H, H, 0}, ci * cr * static_cast<std::int64_t>(L->order(H) / L->order(K))}});
    }
}

TEST_CASE("ρ and ι") {
  auto L = SubgroupLattice::build(parse_group("S3"));
  SubgroupId H = L->whole(), Q = sub(*L, "(0 1 2)");
  auto [b, c] = hecke::iota(*L, H, Q, Ring::rationals());
  CHECK(c == Scalar(1, 2));
  CHECK(hecke::iota(*L, H, Q, Ring::prime_field(3)).second == 2);
  CHECK_THROWS_AS(hecke::iota(*L, H, Q, Ring::integers()), Error);
  CHECK_THROWS_AS(hecke::iota(*L, H, Q, Ring::prime_field(2)), Error);
  CHECK_THROWS_AS(hecke::rho(*L, Q, H), Error);
  // ρ ∘ ι = id on G/H over ℚ.
  auto ri = hecke::compose(*L, hecke::rho(*L, H, Q), b);
  CHECK(ri == HeckeCombo{{{H, H, 0}, 2}});
}
