#include <map>
#include <set>

#include "doctest.h"
#include "eqalg/error.hpp"
#include "eqalg/group.hpp"

using namespace eqalg;

namespace {

// Brute force: every subset containing the identity that is closed under
// products is a subgroup. Returns sorted element sets.
std::vector<std::vector<Elem>> brute_subgroups(const PermGroup& G) {
  const std::size_t n = G.order();
  std::vector<std::vector<Elem>> out;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    if (!(mask & 1)) continue;
    bool closed = true;
    for (Elem a = 0; a < n && closed; ++a)
      for (Elem b = 0; b < n && closed; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && !(mask >> G.mul(a, b) & 1)) closed = false;
    if (!closed) continue;
    std::vector<Elem> s;
    for (Elem a = 0; a < n; ++a)
      if (mask >> a & 1) s.push_back(a);
    out.push_back(s);
  }
  return out;
}

std::size_t brute_classes(const PermGroup& G) {
  auto subs = brute_subgroups(G);
  std::set<std::vector<Elem>> seen;
  std::size_t classes = 0;
  for (const auto& s : subs) {
    if (seen.count(s)) continue;
    ++classes;
    for (Elem g = 0; g < G.order(); ++g) {
      std::vector<Elem> c;
      for (Elem x : s) c.push_back(G.mul(G.mul(g, x), G.inv(g)));
      std::sort(c.begin(), c.end());
      seen.insert(c);
    }
  }
  return classes;
}

SubgroupId sub(const LatticePtr& L, const std::string& cycles) {
  std::vector<Elem> gens;
  for (const auto& part : {cycles}) gens.push_back(*L->group().index_of(parse_cycles(part, L->group().degree())));
  return L->generated_by(gens);
}

}  // namespace

TEST_CASE("enumeration") {
  CHECK(PermGroup::enumerate({parse_cycles("(01)")}, 2).order() == 2);
  CHECK(PermGroup::enumerate({parse_cycles("(01)"), parse_cycles("(012)")}, 3).order() == 6);
  CHECK(PermGroup::enumerate({}, 1).order() == 1);
  CHECK_THROWS_AS(PermGroup::enumerate({parse_cycles("(01)"), parse_cycles("(01234)")}, 5, 50), Error);
  PermGroup S3 = parse_group("S3");
  CHECK(S3.element(0) == perm_identity(3));
  for (Elem a = 0; a < S3.order(); ++a) CHECK(S3.mul(a, S3.inv(a)) == 0);
}

TEST_CASE("parsing") {
  CHECK(parse_cycles("(0 1)(2 3)") == Perm{1, 0, 3, 2});
  CHECK(parse_cycles("(012)") == Perm{1, 2, 0});
  CHECK(parse_group("(0 1), (0 1 2)").order() == 6);
  CHECK(parse_group(R"({"degree":3,"generators":[[1,0,2],[1,2,0]]})").order() == 6);
  CHECK(parse_group("C2xC2").order() == 4);
  CHECK(parse_group("D4").order() == 8);
  CHECK(parse_group("Q8").order() == 8);
  CHECK(parse_group("Dic3").order() == 12);
  CHECK(parse_group("A4").order() == 12);
  CHECK_THROWS_AS(parse_group("Z9"), Error);
  CHECK(format_cycles(parse_cycles("(0 2 1)")) == "(0 2 1)");
}

TEST_CASE("presets have the stated orders and are pairwise distinct") {
  std::map<std::size_t, std::size_t> count;
  for (const auto& name : small_group_presets(12)) {
    PermGroup G = parse_group(name);
    auto L = SubgroupLattice::build(G);
    ++count[G.order()];
  }
  CHECK(count[8] == 5);
  CHECK(count[12] == 5);
  CHECK(small_group_presets(12).size() == 24);
  // Distinguish order 8 and order 12 groups by subgroup and class counts.
  std::set<std::pair<std::size_t, std::size_t>> sig8, sig12;
  for (const auto& name : small_group_presets(12)) {
    auto L = SubgroupLattice::build(parse_group(name));
    if (L->group().order() == 8) sig8.insert({L->size(), L->class_count()});
    if (L->group().order() == 12) sig12.insert({L->size(), L->class_count()});
  }
  CHECK(sig8.size() == 5);
  CHECK(sig12.size() == 5);
}

TEST_CASE("subgroup lattice agrees with brute force") {
  for (const char* name : {"C1", "C2", "S3", "C2xC2", "C4", "D4", "Q8", "C2xC2xC2", "A4", "Dic3", "D6"}) {
    auto L = SubgroupLattice::build(parse_group(name));
    auto subs = brute_subgroups(L->group());
    CHECK_MESSAGE(L->size() == subs.size(), name);
    CHECK_MESSAGE(L->class_count() == brute_classes(L->group()), name);
  }
  CHECK(SubgroupLattice::build(parse_group("S3"))->class_count() == 4);
  CHECK(SubgroupLattice::build(parse_group("C2xC2"))->class_count() == 5);
  CHECK(SubgroupLattice::build(parse_group("C1"))->class_count() == 1);
}

TEST_CASE("class representatives are least element sets") {
  auto L = SubgroupLattice::build(parse_group("S4"));
  for (SubgroupId r : L->class_reps())
    for (Elem g = 0; g < L->group().order(); ++g) {
      SubgroupId c = L->conjugate(r, g);
      CHECK(L->elements(r) <= L->elements(c));
    }
}

TEST_CASE("double cosets") {
  auto L = SubgroupLattice::build(parse_group("S3"));
  SubgroupId H = sub(L, "(01)");
  CHECK(L->double_cosets(H, H).size() == 2);
  CHECK(L->double_cosets(L->whole(), H).size() == 1);
  CHECK(L->double_cosets(L->trivial(), L->trivial()).size() == 6);
  auto L4 = SubgroupLattice::build(parse_group("D4"));
  for (SubgroupId a = 0; a < L4->size(); ++a)
    for (SubgroupId b = 0; b < L4->size(); ++b) {
      std::size_t total = 0;
      for (Elem x : L4->double_cosets(a, b)) {
        auto dc = L4->double_coset(a, x, b);
        CHECK(dc.front() == x);
        total += dc.size();
      }
      CHECK(total == L4->group().order());
    }
}

TEST_CASE("weyl groups and fixed points") {
  auto L = SubgroupLattice::build(parse_group("S3"));
  SubgroupId H = sub(L, "(01)"), C3 = sub(L, "(012)");
  CHECK(L->weyl_group(H).order() == 1);
  CHECK(L->weyl_group(L->trivial()).order() == 6);
  CHECK(L->weyl_group(L->whole()).order() == 1);
  CHECK(L->fixed_points(H, H).size() == 1);
  CHECK(L->fixed_points(L->trivial(), H).size() == 3);
  CHECK(L->fixed_points(L->whole(), L->trivial()).empty());
  CHECK(L->is_subconjugate(H, L->whole()));
  CHECK_FALSE(L->is_subconjugate(L->whole(), L->trivial()));
  CHECK_FALSE(L->is_subconjugate(C3, H));
}

TEST_CASE("fixed point count matches the Weyl orbit formula") {
  for (const char* name : {"S3", "D4", "A4", "S4"}) {
    auto L = SubgroupLattice::build(parse_group(name));
    const auto& G = L->group();
    for (SubgroupId H = 0; H < L->size(); ++H)
      for (SubgroupId K = 0; K < L->size(); ++K) {
        SubgroupId N = L->normaliser(H);
        std::size_t expect = 0;
        for (Elem x : L->double_cosets(N, K)) {
          if (!L->is_contained(L->conjugate(H, G.inv(x)), K)) continue;
          SubgroupId stab = L->intersect(N, L->conjugate(K, x));
          expect += L->weyl_order(H) / (L->order(stab) / L->order(H));
        }
        CHECK(L->fixed_points(H, K).size() == expect);
      }
  }
}

TEST_CASE("families") {
  auto L = SubgroupLattice::build(parse_group("S3"));
  CHECK(Family::all(L).representatives().size() == 4);
  CHECK(Family::trivial(L).representatives().size() == 1);
  CHECK(Family::p_subgroups(L, 2).representatives().size() == 2);
  Family f = Family::generated_by(L, {sub(L, "(01)")});
  CHECK(f.members().size() == 4);  // 1 and the three transpositions
  CHECK(Family::parse(L, "p:3").representatives().size() == 2);
  CHECK_THROWS_AS(Family::parse(L, "bogus"), Error);
}
