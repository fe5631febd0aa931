#include "eqalg/houghton.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "eqalg/error.hpp"

namespace eqalg {

namespace {

void check_ray(int n, const Point& p) {
  if (p.x < 1 || p.x > n || p.i < 0)
    throw Error(ErrorCode::NotBijective, "point (" + std::to_string(p.i) + "," + std::to_string(p.x) + ") is not in S");
}

void same_rays(const EventualMap& a, const EventualMap& b) {
  if (a.rays() != b.rays()) throw Error(ErrorCode::InvalidInput, "elements act on different numbers of rays");
}

}  // namespace

EventualMap EventualMap::make(int n, const std::vector<std::pair<Point, Point>>& pairs, std::vector<std::int64_t> m,
                              bool bijective) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "need at least one ray");
  if (static_cast<int>(m.size()) != n) throw Error(ErrorCode::InvalidInput, "translation vector has wrong length");
  if (bijective && std::accumulate(m.begin(), m.end(), std::int64_t{0}) != 0)
    throw Error(ErrorCode::NotBijective, "translations of a permutation must sum to zero");
  EventualMap h;
  h.n_ = n;
  h.m_ = std::move(m);
  h.z_.assign(n, 0);
  std::map<Point, Point> listed;
  for (const auto& [p, q] : pairs) {
    check_ray(n, p);
    check_ray(n, q);
    if (!listed.emplace(p, q).second) throw Error(ErrorCode::NotBijective, "point listed twice in the prefix");
    h.z_[p.x - 1] = std::max(h.z_[p.x - 1], p.i + 1);
  }
  for (int x = 0; x < n; ++x) h.z_[x] = std::max(h.z_[x], -h.m_[x]);
  h.images_.assign(n, {});
  std::set<Point> seen;
  for (int x = 1; x <= n; ++x) {
    for (std::int64_t i = 0; i < h.z_[x - 1]; ++i) {
      Point p{i, x};
      auto it = listed.find(p);
      Point q = it != listed.end() ? it->second : Point{i + h.m_[x - 1], x};
      if (q.i < 0) throw Error(ErrorCode::NotBijective, "image leaves S");
      if (q.i >= h.z_[q.x - 1] + h.m_[q.x - 1])
        throw Error(ErrorCode::NotBijective, "image collides with the translated tail");
      if (!seen.insert(q).second) throw Error(ErrorCode::NotBijective, "map is not injective");
      h.images_[x - 1].push_back(q);
    }
  }
  h.canonicalize();
  return h;
}

EventualMap EventualMap::identity(int n) { return make(n, {}, std::vector<std::int64_t>(n, 0)); }

EventualMap EventualMap::translation(const std::vector<std::int64_t>& e) {
  return make(static_cast<int>(e.size()), {}, e, false);
}

void EventualMap::canonicalize() {
  for (int x = 1; x <= n_; ++x) {
    auto& img = images_[x - 1];
    while (!img.empty() && img.back() == Point{static_cast<std::int64_t>(img.size()) - 1 + m_[x - 1], x})
      img.pop_back();
    z_[x - 1] = static_cast<std::int64_t>(img.size());
  }
}

bool EventualMap::is_bijective() const { return std::accumulate(m_.begin(), m_.end(), std::int64_t{0}) == 0; }

Point EventualMap::operator()(const Point& p) const {
  check_ray(n_, p);
  if (p.i < z_[p.x - 1]) return images_[p.x - 1][p.i];
  return {p.i + m_[p.x - 1], p.x};
}

std::vector<std::pair<Point, Point>> EventualMap::table() const {
  std::vector<std::pair<Point, Point>> out;
  for (int x = 1; x <= n_; ++x)
    for (std::int64_t i = 0; i < z_[x - 1]; ++i) out.push_back({{i, x}, images_[x - 1][i]});
  return out;
}

std::vector<Point> EventualMap::support() const {
  std::vector<Point> out;
  for (const auto& [p, q] : table())
    if (p != q) out.push_back(p);
  return out;
}

namespace houghton {

HoughtonElement compose(const HoughtonElement& a, const HoughtonElement& b) {
  same_rays(a, b);
  const int n = a.rays();
  std::vector<std::pair<Point, Point>> pairs;
  std::vector<std::int64_t> m(n);
  for (int x = 1; x <= n; ++x) {
    m[x - 1] = a.m()[x - 1] + b.m()[x - 1];
    std::int64_t z = std::max({b.cutoffs()[x - 1], a.cutoffs()[x - 1] - b.m()[x - 1], std::int64_t{0}});
    for (std::int64_t i = 0; i < z; ++i) pairs.push_back({{i, x}, a(b({i, x}))});
  }
  return EventualMap::make(n, pairs, m, a.is_bijective() && b.is_bijective());
}

HoughtonElement inverse(const HoughtonElement& h) {
  if (!h.is_bijective()) throw Error(ErrorCode::NotBijective, "only permutations have inverses");
  std::vector<std::pair<Point, Point>> pairs;
  for (const auto& [p, q] : h.table()) pairs.push_back({q, p});
  std::vector<std::int64_t> m(h.m());
  for (auto& v : m) v = -v;
  return EventualMap::make(h.rays(), pairs, m);
}

HoughtonElement power(const HoughtonElement& h, std::int64_t k) {
  HoughtonElement base = k < 0 ? inverse(h) : h;
  HoughtonElement out = EventualMap::identity(h.rays());
  for (std::uint64_t e = k < 0 ? -static_cast<std::uint64_t>(k) : k; e; e >>= 1) {
    if (e & 1) out = compose(out, base);
    if (e > 1) base = compose(base, base);
  }
  return out;
}

std::vector<std::int64_t> phi(const HoughtonElement& h) { return h.m(); }

bool is_finite_order(const HoughtonElement& h) {
  return std::all_of(h.m().begin(), h.m().end(), [](std::int64_t v) { return v == 0; });
}

std::vector<std::size_t> cycle_type(const HoughtonElement& q) {
  if (!is_finite_order(q)) throw Error(ErrorCode::InfiniteOrder, "cycle type needs an element of finite order");
  std::vector<std::size_t> out;
  std::set<Point> seen;
  for (const auto& [p, img] : q.table()) {
    if (p == img || seen.count(p)) continue;
    std::size_t len = 0;
    for (Point s = p; seen.insert(s).second; s = q(s)) ++len;
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool are_conjugate_finite(const HoughtonElement& a, const HoughtonElement& b) {
  same_rays(a, b);
  return cycle_type(a) == cycle_type(b);
}

HoughtonElement from_cycles(int n, const std::vector<std::vector<Point>>& cycles) {
  std::vector<std::pair<Point, Point>> pairs;
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k) pairs.push_back({c[k], c[(k + 1) % c.size()]});
  return EventualMap::make(n, pairs, std::vector<std::int64_t>(n, 0));
}

HoughtonElement ray_pairing_shift(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::int64_t> m(n, 0);
  std::vector<std::pair<Point, Point>> table;
  for (auto [x, y] : pairs) {
    if (x < 1 || x > n || y < 1 || y > n || x == y || m[x - 1] || m[y - 1])
      throw Error(ErrorCode::InvalidInput, "rays must be distinct and used once");
    m[x - 1] = 1;
    m[y - 1] = -1;
    table.push_back({{0, y}, {0, x}});
  }
  return EventualMap::make(n, table, m);
}

HoughtonElement odd_example(int n) {
  if (n < 3 || n % 2 == 0) throw Error(ErrorCode::InvalidInput, "the example needs odd n ≥ 3");
  std::vector<std::pair<int, int>> pairs;
  for (int x = 1; x <= (n - 1) / 2; ++x) pairs.push_back({x, x + (n - 1) / 2});
  return ray_pairing_shift(n, pairs);
}

// ------------------------------------------------------------ finite factors

std::string FiniteFactor::describe() const {
  std::string base = weyl_cyclic ? "C_" + std::to_string(weyl_order) : "W_" + std::to_string(weyl_order);
  if (weyl_order == 1) return degree == 1 ? "1" : "Sym_" + std::to_string(degree);
  return degree == 1 ? base : base + " wr Sym_" + std::to_string(degree);
}

mpz_class FiniteFactor::order() const {
  mpz_class w = static_cast<unsigned long>(weyl_order), out = 1, f;
  mpz_pow_ui(out.get_mpz_t(), w.get_mpz_t(), degree);
  mpz_fac_ui(f.get_mpz_t(), degree);
  return out * f;
}

mpz_class CentraliserShape::finite_factor_order() const {
  mpz_class out = 1;
  for (const auto& f : finite_factors) out *= f.order();
  return out;
}

std::string CentraliserShape::describe() const {
  std::vector<std::string> parts;
  if (finite_symmetric) {
    if (symmetric_degree > 1) parts.push_back("Sym_" + std::to_string(symmetric_degree));
  } else {
    parts.push_back("H_" + std::to_string(k()));
  }
  if (free_abelian_rank == 1) parts.push_back("Z");
  if (free_abelian_rank > 1) parts.push_back("Z^" + std::to_string(free_abelian_rank));
  for (const auto& f : finite_factors)
    if (f.order() != 1) parts.push_back(f.describe());
  if (parts.empty()) return "1";
  std::string out = parts[0];
  for (std::size_t k = 1; k < parts.size(); ++k) out += " x " + parts[k];
  return out;
}

namespace {

using Perm = std::vector<std::uint32_t>;

Perm perm_mul(const Perm& a, const Perm& b) {  // a ∘ b
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

std::vector<Perm> perm_closure(const std::vector<Perm>& gens, std::size_t size, std::size_t cap) {
  Perm id(size);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elems{id};
  std::set<Perm> seen{id};
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& g : gens) {
      Perm p = perm_mul(g, elems[k]);
      if (seen.insert(p).second) {
        if (elems.size() >= cap) throw Error(ErrorCode::CapExceeded, "finite subgroup exceeds the element cap");
        elems.push_back(std::move(p));
      }
    }
  return elems;
}

/// The factors C_a of the centraliser of the group generated by `gens`
/// acting on the finite set P, with generators of each factor.
std::vector<FiniteFactor> factors_on(int n, const std::vector<Point>& P, const std::vector<Perm>& gens,
                                     std::vector<HoughtonElement>& generators, std::size_t cap = 100000) {
  const std::size_t N = P.size();
  std::vector<Perm> Q = perm_closure(gens, N, cap);
  std::map<Perm, std::uint32_t> index;
  for (std::uint32_t g = 0; g < Q.size(); ++g) index[Q[g]] = g;
  std::vector<std::uint32_t> inv(Q.size());
  for (std::uint32_t g = 0; g < Q.size(); ++g) {
    Perm p(N);
    for (std::size_t i = 0; i < N; ++i) p[Q[g][i]] = static_cast<std::uint32_t>(i);
    inv[g] = index.at(p);
  }
  auto mul = [&](std::uint32_t a, std::uint32_t b) { return index.at(perm_mul(Q[a], Q[b])); };

  using Sub = std::vector<std::uint32_t>;
  std::vector<Sub> stab(N);
  std::vector<bool> moved(N, false);
  for (std::size_t s = 0; s < N; ++s)
    for (std::uint32_t g = 0; g < Q.size(); ++g) {
      if (Q[g][s] == s) stab[s].push_back(g);
      else moved[s] = true;
    }
  auto conj = [&](const Sub& H, std::uint32_t g) {
    Sub out;
    for (auto h : H) out.push_back(mul(mul(g, h), inv[g]));
    std::sort(out.begin(), out.end());
    return out;
  };

  std::vector<FiniteFactor> out;
  std::vector<bool> assigned(N, false);
  for (std::size_t s0 = 0; s0 < N; ++s0) {
    if (!moved[s0] || assigned[s0]) continue;
    const Sub& Qa = stab[s0];
    std::set<Sub> cls;
    std::vector<std::uint32_t> normaliser;
    for (std::uint32_t g = 0; g < Q.size(); ++g) {
      Sub c = conj(Qa, g);
      if (c == Qa) normaliser.push_back(g);
      cls.insert(std::move(c));
    }
    std::vector<std::size_t> Sa;
    for (std::size_t t = 0; t < N; ++t)
      if (moved[t] && !assigned[t] && cls.count(stab[t])) {
        assigned[t] = true;
        Sa.push_back(t);
      }
    FiniteFactor f;
    f.weyl_order = normaliser.size() / Qa.size();
    f.orbit_size = Q.size() / Qa.size();
    f.points = Sa.size();
    f.degree = Sa.size() / f.orbit_size;
    std::set<std::uint32_t> in_Qa(Qa.begin(), Qa.end());
    f.weyl_cyclic = f.weyl_order == 1;
    for (auto g : normaliser) {
      if (f.weyl_cyclic) break;
      std::size_t ord = 1;
      for (std::uint32_t p = g; !in_Qa.count(p); p = mul(p, g)) ++ord;
      f.weyl_cyclic = ord == f.weyl_order;
    }

    // Orbit representatives with stabiliser exactly Qa.
    std::vector<std::size_t> reps;
    std::vector<bool> covered(N, false);
    for (std::size_t t : Sa) {
      if (covered[t]) continue;
      std::size_t rep = t;
      for (std::uint32_t g = 0; g < Q.size(); ++g)
        if (stab[Q[g][t]] == Qa) {
          rep = Q[g][t];
          break;
        }
      reps.push_back(rep);
      for (const auto& g : Q) covered[g[t]] = true;
    }
    auto element = [&](const std::vector<std::pair<std::size_t, std::size_t>>& moves) {
      std::vector<std::pair<Point, Point>> pairs;
      for (auto [a, b] : moves) pairs.push_back({P[a], P[b]});
      return EventualMap::make(n, pairs, std::vector<std::int64_t>(n, 0));
    };
    // qs_1 ↦ q·ν·s_1 for ν in N_Q(Q_a), one per nontrivial Weyl class.
    std::set<std::size_t> weyl_images;
    for (auto nu : normaliser) {
      std::size_t img = Q[nu][reps[0]];
      if (img == reps[0] || !weyl_images.insert(img).second) continue;
      std::vector<std::pair<std::size_t, std::size_t>> moves;
      std::set<std::size_t> done;
      for (std::uint32_t q = 0; q < Q.size(); ++q) {
        std::size_t from = Q[q][reps[0]];
        if (done.insert(from).second) moves.push_back({from, Q[mul(q, nu)][reps[0]]});
      }
      generators.push_back(element(moves));
    }
    auto orbit_map = [&](const std::vector<std::size_t>& sigma) {
      std::vector<std::pair<std::size_t, std::size_t>> moves;
      std::set<std::size_t> done;
      for (std::size_t k = 0; k < reps.size(); ++k)
        for (const auto& q : Q)
          if (done.insert(q[reps[k]]).second) moves.push_back({q[reps[k]], q[reps[sigma[k]]]});
      return element(moves);
    };
    if (reps.size() >= 2) {
      std::vector<std::size_t> swap(reps.size()), cycle(reps.size());
      std::iota(swap.begin(), swap.end(), 0);
      std::swap(swap[0], swap[1]);
      for (std::size_t k = 0; k < reps.size(); ++k) cycle[k] = (k + 1) % reps.size();
      generators.push_back(orbit_map(swap));
      if (reps.size() >= 3) generators.push_back(orbit_map(cycle));
    }
    out.push_back(f);
  }
  return out;
}

Perm restrict_to(const HoughtonElement& h, const std::vector<Point>& P, const std::map<Point, std::uint32_t>& idx) {
  Perm out(P.size());
  for (std::size_t k = 0; k < P.size(); ++k) {
    auto it = idx.find(h(P[k]));
    if (it == idx.end()) throw Error(ErrorCode::InvalidInput, "point set is not invariant");
    out[k] = it->second;
  }
  return out;
}

std::map<Point, std::uint32_t> index_points(const std::vector<Point>& P) {
  std::map<Point, std::uint32_t> idx;
  for (std::uint32_t k = 0; k < P.size(); ++k) idx[P[k]] = k;
  return idx;
}

/// Points of the listed domain whose q-orbit is finite and nontrivial.
std::vector<Point> finite_orbit_points(const HoughtonElement& q) {
  std::set<Point> domain;
  for (const auto& [p, img] : q.table()) domain.insert(p);
  std::set<Point> out;
  for (const Point& p : domain) {
    if (out.count(p) || q(p) == p) continue;
    std::vector<Point> orbit{p};
    bool finite = false;
    for (Point s = q(p); domain.count(s); s = q(s)) {
      if (s == p) {
        finite = true;
        break;
      }
      orbit.push_back(s);
    }
    if (finite) out.insert(orbit.begin(), orbit.end());
  }
  return {out.begin(), out.end()};
}

void check_bounds(const CentraliserShape& C) {
  std::size_t hi = static_cast<std::size_t>(C.n - static_cast<int>(C.k())) / 2;
  if (C.free_abelian_rank < 1 || C.free_abelian_rank > hi)
    throw Error(ErrorCode::InvalidInput, "centraliser rank outside 1 ≤ r ≤ ⌊(n−k)/2⌋");
}

CentraliserShape infinite_shape(const HoughtonElement& w, const std::vector<HoughtonElement>& F) {
  const int n = w.rays();
  CentraliserShape C;
  C.n = n;
  for (int x = 1; x <= n; ++x)
    if (w.m()[x - 1] == 0) C.houghton_rays.push_back(x);
  std::set<Point> region;
  for (const auto& [p, img] : w.table()) region.insert(p);
  for (const auto& f : F)
    for (const auto& [p, img] : f.table()) region.insert(p);
  auto fixed_by_all = [&](const Point& p) {
    if (w(p) != p) return false;
    return std::all_of(F.begin(), F.end(), [&](const HoughtonElement& f) { return f(p) == p; });
  };
  if (C.houghton_rays.empty()) {
    C.finite_symmetric = true;
    C.symmetric_degree = static_cast<std::size_t>(std::count_if(region.begin(), region.end(), fixed_by_all));
  }
  C.free_abelian_rank = gamma_graph(w).components.size();

  std::set<Point> P;
  for (const Point& p : finite_orbit_points(w)) P.insert(p);
  for (const Point& p : region)
    if (!fixed_by_all(p) && w(p) == p) P.insert(p);
  std::vector<Point> pts(P.begin(), P.end());
  auto idx = index_points(pts);
  std::vector<Perm> gens{restrict_to(w, pts, idx)};
  for (const auto& f : F) gens.push_back(restrict_to(f, pts, idx));
  C.finite_factors = factors_on(n, pts, gens, C.generators);
  check_bounds(C);
  return C;
}

}  // namespace

std::vector<HoughtonElement> closure(const std::vector<HoughtonElement>& gens, std::size_t cap) {
  if (gens.empty()) return {};
  for (const auto& g : gens) {
    same_rays(gens[0], g);
    if (!is_finite_order(g)) throw Error(ErrorCode::InfiniteOrder, "generators must have finite order");
  }
  std::vector<HoughtonElement> elems{EventualMap::identity(gens[0].rays())};
  std::set<HoughtonElement> seen(elems.begin(), elems.end());
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& g : gens) {
      HoughtonElement p = compose(g, elems[k]);
      if (seen.insert(p).second) {
        if (elems.size() >= cap) throw Error(ErrorCode::CapExceeded, "finite subgroup exceeds the element cap");
        elems.push_back(std::move(p));
      }
    }
  return elems;
}

CentraliserShape centraliser_of_finite_subgroup(const std::vector<HoughtonElement>& Q) {
  if (Q.empty()) throw Error(ErrorCode::InvalidInput, "need at least one element to fix the number of rays");
  const int n = Q[0].rays();
  std::set<Point> moved;
  for (const auto& q : Q) {
    same_rays(Q[0], q);
    if (!is_finite_order(q)) throw Error(ErrorCode::InfiniteOrder, "centraliser of a finite subgroup needs φ = 0");
    for (const Point& p : q.support()) moved.insert(p);
  }
  CentraliserShape C;
  C.n = n;
  for (int x = 1; x <= n; ++x) C.houghton_rays.push_back(x);
  std::vector<Point> pts(moved.begin(), moved.end());
  auto idx = index_points(pts);
  std::vector<Perm> gens;
  for (const auto& q : Q) gens.push_back(restrict_to(q, pts, idx));
  C.finite_factors = factors_on(n, pts, gens, C.generators);
  return C;
}

GammaGraph gamma_graph(const HoughtonElement& q) {
  if (!q.is_bijective()) throw Error(ErrorCode::NotBijective, "Γ needs a permutation");
  if (is_finite_order(q)) throw Error(ErrorCode::FiniteOrder, "Γ needs an element of infinite order");
  const int n = q.rays();
  GammaGraph G;
  G.n = n;
  for (int x = 1; x <= n; ++x) (q.m()[x - 1] == 0 ? G.J : G.vertices).push_back(x);
  HoughtonElement qi = inverse(q);
  std::int64_t bound = 4;
  for (int x = 0; x < n; ++x) bound += q.cutoffs()[x] + qi.cutoffs()[x] + std::abs(q.m()[x]);
  std::set<std::pair<int, int>> edges;
  for (int y = 1; y <= n; ++y) {
    if (q.m()[y - 1] <= 0) continue;
    for (std::int64_t c = 0; c < q.m()[y - 1]; ++c) {
      Point s{q.cutoffs()[y - 1] + c, y};
      std::int64_t steps = 0;
      for (;;) {
        s = qi(s);
        if (q.m()[s.x - 1] < 0 && s.i >= qi.cutoffs()[s.x - 1]) break;
        if (++steps > bound) throw Error(ErrorCode::InvalidInput, "tail orbit did not escape");
      }
      edges.insert({s.x, y});
    }
  }
  G.edges.assign(edges.begin(), edges.end());
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [a, b] : G.edges) parent[find(a)] = find(b);
  std::map<int, std::vector<int>> comps;
  for (int v : G.vertices) comps[find(v)].push_back(v);
  for (auto& [r, vs] : comps) G.components.push_back(vs);
  std::sort(G.components.begin(), G.components.end());
  return G;
}

CentraliserShape centraliser_of_element(const HoughtonElement& q) {
  if (!q.is_bijective()) throw Error(ErrorCode::NotBijective, "centraliser needs a permutation");
  if (is_finite_order(q)) return centraliser_of_finite_subgroup({q});
  return infinite_shape(q, {});
}

CentraliserShape centraliser_of_vcyc(const std::vector<HoughtonElement>& F, const HoughtonElement& w) {
  if (!w.is_bijective()) throw Error(ErrorCode::NotBijective, "w must be a permutation");
  if (is_finite_order(w))
    throw Error(ErrorCode::NotNormalised, "w has finite order, so ⟨F, w⟩ is finite and not infinite virtually cyclic");
  for (const auto& f : F) {
    same_rays(w, f);
    if (!is_finite_order(f)) throw Error(ErrorCode::NotNormalised, "F contains an element of infinite order");
  }
  auto elems = closure(F);
  std::set<HoughtonElement> Fset(elems.begin(), elems.end());
  HoughtonElement wi = inverse(w);
  for (const auto& f : F)
    if (!Fset.count(compose(w, compose(f, wi))))
      throw Error(ErrorCode::NotNormalised, "w does not normalise F");
  return infinite_shape(w, F);
}

// ------------------------------------------------------------ poset of injective maps

bool poset_leq(const MonoidVertex& alpha, const MonoidVertex& beta) {
  same_rays(alpha, beta);
  std::vector<std::int64_t> d(alpha.rays());
  for (int x = 0; x < alpha.rays(); ++x) {
    d[x] = beta.m()[x] - alpha.m()[x];
    if (d[x] < 0) return false;
  }
  return compose(alpha, EventualMap::translation(d)) == beta;
}

bool is_fixed_by(const MonoidVertex& alpha, const std::vector<HoughtonElement>& Q) {
  return std::all_of(Q.begin(), Q.end(), [&](const HoughtonElement& q) { return compose(q, alpha) == alpha; });
}

MonoidVertex fixed_vertex(int n, const std::vector<HoughtonElement>& Q) {
  std::vector<std::int64_t> e(n, 0);
  for (const auto& q : Q) {
    if (q.rays() != n) throw Error(ErrorCode::InvalidInput, "elements act on different numbers of rays");
    if (!is_finite_order(q)) throw Error(ErrorCode::InfiniteOrder, "only finite subgroups fix vertices");
    for (int x = 0; x < n; ++x) e[x] = std::max(e[x], q.cutoffs()[x]);
  }
  return EventualMap::translation(e);
}

MonoidVertex directed_join(const MonoidVertex& alpha, const MonoidVertex& beta, const std::vector<HoughtonElement>& Q) {
  same_rays(alpha, beta);
  const int n = alpha.rays();
  std::vector<std::int64_t> a(n), b(n), c(n);
  for (int x = 0; x < n; ++x) {
    a[x] = std::max<std::int64_t>(beta.m()[x] - alpha.m()[x], 0);
    b[x] = std::max<std::int64_t>(alpha.m()[x] - beta.m()[x], 0);
  }
  MonoidVertex am = compose(alpha, EventualMap::translation(a));
  MonoidVertex bn = compose(beta, EventualMap::translation(b));
  for (int x = 0; x < n; ++x) c[x] = std::max(am.cutoffs()[x], bn.cutoffs()[x]);
  MonoidVertex pad = compose(EventualMap::translation(c), fixed_vertex(n, Q));
  MonoidVertex left = compose(am, pad), right = compose(bn, pad);
  if (left != right) throw Error(ErrorCode::InvalidInput, "upper bounds failed to agree");
  return left;
}

StabiliserCertificate vertex_stabiliser_is_finite(const MonoidVertex& alpha, std::size_t bound) {
  std::set<Point> image;
  for (const auto& [p, q] : alpha.table()) image.insert(q);
  StabiliserCertificate out;
  for (int x = 1; x <= alpha.rays(); ++x)
    for (std::int64_t j = 0; j < alpha.cutoffs()[x - 1] + alpha.m()[x - 1]; ++j)
      if (!image.count({j, x})) {
        if (out.complement.size() < bound) out.complement.push_back({j, x});
        ++out.size;
      }
  mpz_fac_ui(out.order_bound.get_mpz_t(), out.size);
  return out;
}

// ------------------------------------------------------------ sampling

HoughtonElement random_finite(int n, std::size_t support, std::mt19937_64& rng) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "need at least one ray");
  if (support == 1) throw Error(ErrorCode::InvalidInput, "a permutation cannot move exactly one point");
  std::vector<Point> pool;
  const std::int64_t rows = static_cast<std::int64_t>(support) + 2;
  for (int x = 1; x <= n; ++x)
    for (std::int64_t i = 0; i < rows; ++i) pool.push_back({i, x});
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(support);
  std::vector<Point> img = pool;
  do std::shuffle(img.begin(), img.end(), rng);
  while ([&] {
    for (std::size_t k = 0; k < support; ++k)
      if (img[k] == pool[k]) return true;
    return false;
  }());
  std::vector<std::pair<Point, Point>> pairs;
  for (std::size_t k = 0; k < support; ++k) pairs.push_back({pool[k], img[k]});
  return EventualMap::make(n, pairs, std::vector<std::int64_t>(n, 0));
}

HoughtonElement random_infinite(int n, std::mt19937_64& rng) {
  if (n < 2) throw Error(ErrorCode::InvalidInput, "infinite order needs at least two rays");
  std::uniform_int_distribution<int> step(-2, 2), pad(0, 3);
  std::vector<std::int64_t> m(n);
  for (;;) {
    std::int64_t sum = 0;
    bool nonzero = false;
    for (int x = 0; x < n - 1; ++x) {
      m[x] = step(rng);
      sum += m[x];
      nonzero = nonzero || m[x] != 0;
    }
    m[n - 1] = -sum;
    if (nonzero && std::abs(m[n - 1]) <= 3) break;
  }
  std::vector<Point> D, T;
  for (int x = 1; x <= n; ++x) {
    std::int64_t z = std::max<std::int64_t>(0, -m[x - 1]) + pad(rng);
    for (std::int64_t i = 0; i < z; ++i) D.push_back({i, x});
    for (std::int64_t j = 0; j < z + m[x - 1]; ++j) T.push_back({j, x});
  }
  std::shuffle(T.begin(), T.end(), rng);
  std::vector<std::pair<Point, Point>> pairs;
  for (std::size_t k = 0; k < D.size(); ++k) pairs.push_back({D[k], T[k]});
  return EventualMap::make(n, pairs, m);
}

}  // namespace houghton
}  // namespace eqalg
