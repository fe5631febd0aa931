#pragma once

#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace eqalg {

/// A point (i, x) of S = ℕ × {1..n}.
struct Point {
  std::int64_t i = 0;
  int x = 1;
  auto operator<=>(const Point&) const = default;
};

/// An injective self-map of S that is eventually a translation on every ray:
/// (i,x) ↦ (i + m_x, x) for i ≥ z_x. Stored canonically with minimal cutoffs
/// and the table of images of {(i,x) : i < z_x}.
class EventualMap {
 public:
  EventualMap() = default;
  /// Listed pairs override the translation; unlisted points are translated.
  /// Throws NotBijective if the map is not injective (or not bijective when
  /// `bijective` is set) or leaves S.
  static EventualMap make(int n, const std::vector<std::pair<Point, Point>>& pairs, std::vector<std::int64_t> m,
                          bool bijective = true);
  static EventualMap identity(int n);
  /// t_1^{e_1} ⋯ t_n^{e_n}: (i,x) ↦ (i + e_x, x).
  static EventualMap translation(const std::vector<std::int64_t>& e);

  int rays() const { return n_; }
  const std::vector<std::int64_t>& m() const { return m_; }
  const std::vector<std::int64_t>& cutoffs() const { return z_; }
  bool is_bijective() const;
  Point operator()(const Point& p) const;
  /// The listed domain {(i,x) : i < z_x} with images, in point order.
  std::vector<std::pair<Point, Point>> table() const;
  /// Points moved by the map.
  std::vector<Point> support() const;

  auto operator<=>(const EventualMap&) const = default;

 private:
  int n_ = 0;
  std::vector<std::int64_t> m_, z_;
  std::vector<std::vector<Point>> images_;  // [x-1][i], i < z_x

  void canonicalize();
};

using HoughtonElement = EventualMap;
using MonoidVertex = EventualMap;

namespace houghton {

/// a ∘ b (b first).
HoughtonElement compose(const HoughtonElement& a, const HoughtonElement& b);
HoughtonElement inverse(const HoughtonElement& h);
HoughtonElement power(const HoughtonElement& h, std::int64_t k);
std::vector<std::int64_t> phi(const HoughtonElement& h);
bool is_finite_order(const HoughtonElement& h);

/// Sorted lengths (≥ 2) of the disjoint cycles. Throws InfiniteOrder.
std::vector<std::size_t> cycle_type(const HoughtonElement& q);
bool are_conjugate_finite(const HoughtonElement& a, const HoughtonElement& b);
/// A finite permutation with the given disjoint cycles.
HoughtonElement from_cycles(int n, const std::vector<std::vector<Point>>& cycles);

/// For each pair (x, y): ray x moves up, ray y moves down and (0,y) ↦ (0,x).
HoughtonElement ray_pairing_shift(int n, const std::vector<std::pair<int, int>>& pairs);
/// The element for odd n fixing only the last ray: pairs (x, x + (n−1)/2).
HoughtonElement odd_example(int n);

/// W_Q Q_a ≀ Sym_r acting on S_a ≅ r · Q/Q_a.
struct FiniteFactor {
  std::size_t weyl_order = 1;
  bool weyl_cyclic = true;
  std::size_t degree = 1;      // r
  std::size_t orbit_size = 1;  // |Q : Q_a|
  std::size_t points = 0;      // |S_a|
  std::string describe() const;
  mpz_class order() const;
};

/// The symbolic centraliser H_k × ℤ^r × C_1 × ⋯ × C_t, or F × ℤ^r × ⋯ with F a
/// finite symmetric group when no ray is eventually fixed.
struct CentraliserShape {
  int n = 0;
  std::vector<int> houghton_rays;  // J
  bool finite_symmetric = false;
  std::size_t symmetric_degree = 0;  // |S^Q| when finite_symmetric
  std::size_t free_abelian_rank = 0;
  std::vector<FiniteFactor> finite_factors;
  std::vector<HoughtonElement> generators;  // of the finite factors

  std::size_t k() const { return houghton_rays.size(); }
  mpz_class finite_factor_order() const;
  std::string describe() const;
};

/// Closure of finitely many finite-order elements, capped at `cap` elements.
std::vector<HoughtonElement> closure(const std::vector<HoughtonElement>& gens, std::size_t cap = 100000);

CentraliserShape centraliser_of_finite_subgroup(const std::vector<HoughtonElement>& Q);

struct GammaGraph {
  int n = 0;
  std::vector<int> J;
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;  // (backward end, forward end), sorted and unique
  std::vector<std::vector<int>> components;
};
/// Throws FiniteOrder.
GammaGraph gamma_graph(const HoughtonElement& q);

CentraliserShape centraliser_of_element(const HoughtonElement& q);
/// C(⟨F, w⟩) for F finite with w F w⁻¹ = F and w of infinite order.
CentraliserShape centraliser_of_vcyc(const std::vector<HoughtonElement>& F, const HoughtonElement& w);

/// β = α ∘ t for some translation t.
bool poset_leq(const MonoidVertex& alpha, const MonoidVertex& beta);
/// Every element of Q fixes the image of α pointwise.
bool is_fixed_by(const MonoidVertex& alpha, const std::vector<HoughtonElement>& Q);
/// A common upper bound, fixed by Q whenever α and β are.
MonoidVertex directed_join(const MonoidVertex& alpha, const MonoidVertex& beta,
                           const std::vector<HoughtonElement>& Q = {});
/// A vertex fixed by every element of Q.
MonoidVertex fixed_vertex(int n, const std::vector<HoughtonElement>& Q);

struct StabiliserCertificate {
  std::vector<Point> complement;  // S \ Sα, at most `bound` listed
  std::size_t size = 0;
  mpz_class order_bound;  // size!
};
StabiliserCertificate vertex_stabiliser_is_finite(const MonoidVertex& alpha, std::size_t bound = 64);

/// A random permutation of `support` points chosen among the first rows of S.
HoughtonElement random_finite(int n, std::size_t support, std::mt19937_64& rng);
/// A random element with nonzero translation vector.
HoughtonElement random_infinite(int n, std::mt19937_64& rng);

}  // namespace houghton
}  // namespace eqalg
