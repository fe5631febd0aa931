#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "eqalg/error.hpp"
#include "eqalg/houghton.hpp"

using namespace eqalg;
namespace hg = eqalg::houghton;

namespace {

HoughtonElement shift2() { return hg::ray_pairing_shift(2, {{2, 1}}); }

std::vector<Point> window(int n, std::int64_t rows) {
  std::vector<Point> out;
  for (int x = 1; x <= n; ++x)
    for (std::int64_t i = 0; i < rows; ++i) out.push_back({i, x});
  return out;
}

// Number of permutations of {0..m-1} commuting with q, by search.
std::size_t brute_centraliser(const std::vector<std::size_t>& q) {
  const std::size_t m = q.size();
  std::vector<long> c(m, -1);
  std::vector<bool> used(m, false);
  std::function<std::size_t(std::size_t)> go = [&](std::size_t p) -> std::size_t {
    while (p < m && c[p] >= 0) ++p;
    if (p == m) return 1;
    std::size_t total = 0;
    for (std::size_t v = 0; v < m; ++v) {
      if (used[v]) continue;
      std::vector<std::size_t> set;
      bool ok = true;
      std::size_t a = p, b = v;
      do {
        if (c[a] >= 0) {
          ok = c[a] == static_cast<long>(b);
          break;
        }
        if (used[b]) {
          ok = false;
          break;
        }
        c[a] = static_cast<long>(b);
        used[b] = true;
        set.push_back(a);
        a = q[a];
        b = q[b];
      } while (true);
      if (ok) total += go(p + 1);
      for (auto s : set) {
        used[c[s]] = false;
        c[s] = -1;
      }
    }
    return total;
  };
  return go(0);
}

// |C_{Sym_m}(q)| / (m − |supp|)! with four extra fixed points.
mpz_class truncated_oracle(const HoughtonElement& q) {
  std::vector<Point> pts = q.support();
  std::set<Point> have(pts.begin(), pts.end());
  for (std::int64_t i = 0; have.size() < pts.size() + 4; ++i)
    if (!have.count({i + 1000, 1})) have.insert({i + 1000, 1});
  std::vector<Point> all(have.begin(), have.end());
  std::map<Point, std::size_t> idx;
  for (std::size_t k = 0; k < all.size(); ++k) idx[all[k]] = k;
  std::vector<std::size_t> perm(all.size());
  for (std::size_t k = 0; k < all.size(); ++k) perm[k] = idx.at(q(all[k]));
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), 4);
  return mpz_class(static_cast<unsigned long>(brute_centraliser(perm))) / f;
}

}  // namespace

TEST_CASE("houghton elements: validation and canonical form") {
  CHECK_THROWS_AS(EventualMap::make(2, {{{0, 1}, {0, 2}}}, {0, 0}), Error);
  CHECK_THROWS_AS(EventualMap::make(2, {}, {1, 0}), Error);
  CHECK_THROWS_AS(EventualMap::make(2, {}, {-1, 1}, false), Error);
  CHECK_THROWS_AS(EventualMap::make(2, {{{0, 3}, {0, 1}}}, {0, 0}), Error);
  try {
    EventualMap::make(2, {{{0, 1}, {1, 1}}, {{1, 1}, {1, 1}}}, {0, 0});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotBijective);
  }
  HoughtonElement g = shift2();
  HoughtonElement same = EventualMap::make(2, {{{0, 1}, {0, 2}}, {{3, 1}, {2, 1}}, {{2, 2}, {3, 2}}}, {-1, 1});
  CHECK(g == same);
  CHECK(g.cutoffs() == std::vector<std::int64_t>{1, 0});
  CHECK(hg::phi(g) == std::vector<std::int64_t>{-1, 1});
  CHECK(hg::phi(hg::compose(g, g)) == std::vector<std::int64_t>{-2, 2});
  CHECK(hg::compose(g, hg::inverse(g)) == EventualMap::identity(2));
  HoughtonElement t = hg::from_cycles(2, {{{0, 1}, {1, 1}}});
  CHECK(hg::phi(t) == std::vector<std::int64_t>{0, 0});
  CHECK(hg::phi(EventualMap::identity(3)) == std::vector<std::int64_t>{0, 0, 0});
}

TEST_CASE("houghton elements: group law against pointwise evaluation") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + trial % 3;
    HoughtonElement a = trial % 2 ? hg::random_infinite(n, rng) : hg::random_finite(n, 2 + trial % 5, rng);
    HoughtonElement b = hg::random_infinite(n, rng);
    HoughtonElement ab = hg::compose(a, b), ai = hg::inverse(a);
    for (const Point& p : window(n, 12)) {
      CHECK(ab(p) == a(b(p)));
      CHECK(ai(a(p)) == p);
    }
    auto pa = hg::phi(a), pb = hg::phi(b), pab = hg::phi(ab);
    for (int x = 0; x < n; ++x) CHECK(pab[x] == pa[x] + pb[x]);
    CHECK(std::accumulate(pab.begin(), pab.end(), std::int64_t{0}) == 0);
    CHECK(hg::compose(hg::compose(a, b), ai) == hg::compose(a, hg::compose(b, ai)));
  }
}

TEST_CASE("houghton elements: finite order iff φ = 0 iff finite support") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    HoughtonElement q = hg::random_finite(3, 2 + trial % 6, rng);
    CHECK(hg::is_finite_order(q));
    auto type = hg::cycle_type(q);
    std::size_t order = 1;
    for (auto l : type) order = std::lcm(order, l);
    CHECK(hg::power(q, static_cast<std::int64_t>(order)) == EventualMap::identity(3));
    HoughtonElement w = hg::random_infinite(3, rng);
    CHECK_FALSE(hg::is_finite_order(w));
    for (std::int64_t k = 1; k <= 6; ++k) CHECK(hg::power(w, k) != EventualMap::identity(3));
    // Infinitely many points move: far out on a moving ray nothing is fixed.
    int x = w.m()[0] != 0 ? 1 : (w.m()[1] != 0 ? 2 : 3);
    for (std::int64_t i = 100; i < 110; ++i) CHECK(w({i, x}) != Point{i, x});
  }
  CHECK_THROWS_AS(hg::cycle_type(shift2()), Error);
}

TEST_CASE("houghton conjugacy by cycle type") {
  HoughtonElement a = hg::from_cycles(2, {{{0, 1}, {1, 1}}});
  HoughtonElement b = hg::from_cycles(2, {{{3, 2}, {5, 2}}});
  CHECK(hg::are_conjugate_finite(a, b));
  // An explicit conjugator inside a finite symmetric group.
  HoughtonElement h = hg::from_cycles(2, {{{0, 1}, {3, 2}}, {{1, 1}, {5, 2}}});
  CHECK(hg::compose(h, hg::compose(a, hg::inverse(h))) == b);
  std::vector<HoughtonElement> q;
  for (int k = 1; k <= 5; ++k) {
    std::vector<std::vector<Point>> cycles;
    for (int j = 0; j < k; ++j) cycles.push_back({{2 * j, 1}, {2 * j + 1, 1}});
    q.push_back(hg::from_cycles(2, cycles));
  }
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) CHECK(hg::are_conjugate_finite(q[i], q[j]) == (i == j));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    HoughtonElement x = hg::random_finite(3, 2 + trial % 6, rng);
    HoughtonElement g = trial % 2 ? hg::random_infinite(3, rng) : hg::random_finite(3, 4, rng);
    CHECK(hg::cycle_type(hg::compose(g, hg::compose(x, hg::inverse(g)))) == hg::cycle_type(x));
  }
  CHECK_THROWS_AS(hg::are_conjugate_finite(shift2(), a), Error);
}

TEST_CASE("centralisers of finite subgroups") {
  HoughtonElement t = hg::from_cycles(2, {{{0, 1}, {1, 1}}});
  auto C = hg::centraliser_of_finite_subgroup({t});
  CHECK(C.k() == 2);
  CHECK(C.finite_factors.size() == 1);
  CHECK(C.finite_factors[0].weyl_order == 2);
  CHECK(C.finite_factors[0].degree == 1);
  CHECK(C.describe() == "H_2 x C_2");

  auto triv = hg::centraliser_of_finite_subgroup({EventualMap::identity(3)});
  CHECK(triv.describe() == "H_3");
  CHECK(triv.finite_factor_order() == 1);

  HoughtonElement two = hg::from_cycles(2, {{{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}});
  auto C2 = hg::centraliser_of_finite_subgroup({two});
  CHECK(C2.finite_factors.size() == 1);
  CHECK(C2.finite_factors[0].degree == 2);
  CHECK(C2.finite_factor_order() == 8);
  CHECK(C2.describe() == "H_2 x C_2 wr Sym_2");

  // S3 acting on three points and on its six cosets of the trivial group.
  HoughtonElement s = hg::from_cycles(2, {{{0, 1}, {1, 1}}});
  HoughtonElement r = hg::from_cycles(2, {{{0, 1}, {1, 1}, {2, 1}}});
  auto C3 = hg::centraliser_of_finite_subgroup({s, r});
  CHECK(C3.finite_factors.size() == 1);
  CHECK(C3.finite_factors[0].weyl_order == 1);
  CHECK(C3.finite_factor_order() == 1);
}

TEST_CASE("finite centraliser factor order matches the symmetric group oracle") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    HoughtonElement q = hg::random_finite(2 + trial % 2, 2 + trial % 7, rng);
    auto C = hg::centraliser_of_element(q);
    CHECK(C.finite_factor_order() == truncated_oracle(q));
    for (const auto& g : C.generators) {
      CHECK(hg::compose(g, q) == hg::compose(q, g));
    }
    if (C.finite_factor_order() <= 400) {
      CHECK(mpz_class(static_cast<unsigned long>(hg::closure(C.generators).size())) ==
            (C.generators.empty() ? mpz_class(1) : C.finite_factor_order()));
    }
  }
}

TEST_CASE("Γ and centralisers of infinite order elements") {
  HoughtonElement q = hg::ray_pairing_shift(3, {{2, 1}});
  auto G = hg::gamma_graph(q);
  CHECK(G.J == std::vector<int>{3});
  CHECK(G.edges == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(G.components.size() == 1);

  for (int n : {3, 5, 7}) {
    auto Go = hg::gamma_graph(hg::odd_example(n));
    CHECK(Go.J == std::vector<int>{n});
    CHECK(Go.components.size() == static_cast<std::size_t>((n - 1) / 2));
  }
  auto C = hg::centraliser_of_element(hg::odd_example(3));
  CHECK(C.describe() == "H_1 x Z");

  auto paired = hg::centraliser_of_element(hg::ray_pairing_shift(4, {{1, 2}, {3, 4}}));
  CHECK(paired.finite_symmetric);
  CHECK(paired.symmetric_degree == 0);
  CHECK(paired.free_abelian_rank == 2);
  CHECK(paired.describe() == "Z^2");

  auto fin = hg::centraliser_of_element(hg::from_cycles(2, {{{0, 1}, {1, 1}}}));
  CHECK(fin.k() == 2);
  CHECK_THROWS_AS(hg::gamma_graph(EventualMap::identity(2)), Error);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    HoughtonElement w = hg::random_infinite(4, rng);
    auto Gw = hg::gamma_graph(w);
    std::set<int> touched;
    for (auto [a, b] : Gw.edges) {
      touched.insert(a);
      touched.insert(b);
    }
    CHECK(touched.size() == Gw.vertices.size());
    auto Cw = hg::centraliser_of_element(w);
    CHECK(Cw.free_abelian_rank >= 1);
    CHECK(Cw.free_abelian_rank <= (4 - Cw.k()) / 2);
    for (const auto& g : Cw.generators) CHECK(hg::compose(g, w) == hg::compose(w, g));

    // Edges by walking backwards with preimages found by search.
    std::set<std::pair<int, int>> brute;
    const std::int64_t far = 30;
    auto pts = window(4, 300);
    std::map<Point, Point> pre;
    for (const Point& p : pts) pre[w(p)] = p;
    for (int y = 1; y <= 4; ++y)
      for (std::int64_t c = 0; c < w.m()[y - 1]; ++c) {
        Point s{far + c, y};
        for (int k = 0; k < 60; ++k) s = pre.at(s);
        brute.insert({s.x, y});
      }
    CHECK(std::vector<std::pair<int, int>>(brute.begin(), brute.end()) == Gw.edges);
  }
}

TEST_CASE("centralisers of virtually cyclic subgroups") {
  HoughtonElement w = hg::odd_example(3);
  auto plain = hg::centraliser_of_vcyc({}, w);
  auto elem = hg::centraliser_of_element(w);
  CHECK(plain.describe() == elem.describe());

  HoughtonElement f = hg::from_cycles(3, {{{0, 3}, {1, 3}}});
  auto C = hg::centraliser_of_vcyc({f}, w);
  CHECK(C.finite_factors.size() == 1);
  CHECK(C.finite_factor_order() == 2);
  CHECK(C.describe() == "H_1 x Z x C_2");

  HoughtonElement bad = hg::from_cycles(3, {{{0, 1}, {0, 3}}});
  try {
    hg::centraliser_of_vcyc({bad}, w);
    FAIL("expected NotNormalised");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotNormalised);
  }
  // Two finite order elements never compose to an infinite order part.
  HoughtonElement p = hg::from_cycles(3, {{{0, 1}, {1, 1}}}), q = hg::from_cycles(3, {{{1, 1}, {2, 1}}});
  try {
    hg::centraliser_of_vcyc({}, hg::compose(p, q));
    FAIL("expected NotNormalised");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotNormalised);
  }
}

TEST_CASE("poset of injective maps") {
  const int n = 3;
  MonoidVertex t1 = EventualMap::translation({1, 0, 0});
  std::mt19937_64 rng(29);
  HoughtonElement swap = hg::from_cycles(n, {{{0, 1}, {1, 1}}});
  std::vector<HoughtonElement> Q{swap};
  MonoidVertex base = hg::fixed_vertex(n, Q);
  CHECK(hg::is_fixed_by(base, Q));
  CHECK_FALSE(hg::is_fixed_by(EventualMap::identity(n), Q));
  for (int trial = 0; trial < 40; ++trial) {
    MonoidVertex a = hg::compose(base, hg::random_infinite(n, rng));
    MonoidVertex b = hg::compose(hg::compose(base, EventualMap::translation({0, 2, 1})), hg::random_infinite(n, rng));
    CHECK(hg::poset_leq(a, a));
    CHECK(hg::poset_leq(a, hg::compose(a, t1)));
    CHECK_FALSE(hg::poset_leq(hg::compose(a, t1), a));
    CHECK(hg::is_fixed_by(a, Q));
    CHECK(hg::is_fixed_by(b, Q));
    MonoidVertex j = hg::directed_join(a, b, Q);
    CHECK(hg::poset_leq(a, j));
    CHECK(hg::poset_leq(b, j));
    CHECK(hg::is_fixed_by(j, Q));
    if (hg::poset_leq(a, b) && hg::poset_leq(b, a)) CHECK(a == b);
    MonoidVertex jj = hg::directed_join(a, a);
    CHECK(hg::poset_leq(a, jj));
  }
}

TEST_CASE("vertex stabilisers are finite") {
  auto bij = hg::vertex_stabiliser_is_finite(shift2());
  CHECK(bij.size == 0);
  CHECK(bij.order_bound == 1);
  auto t = hg::vertex_stabiliser_is_finite(EventualMap::translation({2, 1, 0}));
  CHECK(t.size == 3);
  CHECK(t.order_bound == 6);
  CHECK(t.complement == std::vector<Point>{{0, 1}, {1, 1}, {0, 2}});
}
