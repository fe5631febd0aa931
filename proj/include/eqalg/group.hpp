#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace eqalg {

/// Image word of a permutation of {0..n-1}.
using Perm = std::vector<std::uint32_t>;
using Elem = std::uint32_t;
using SubgroupId = std::uint32_t;

constexpr std::size_t kDefaultOrderCap = 20000;

/// (a∘b)(x) = a(b(x))
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);
Perm perm_identity(std::size_t degree);
bool perm_is_valid(const Perm& a);
/// "(0 1)(2 3)", "(0,1)" or the compact "(012)"; degree 0 means "just large enough".
Perm parse_cycles(const std::string& text, std::size_t degree = 0);
std::string format_cycles(const Perm& a);

class PermGroup {
 public:
  /// Closure of the generators. Elements are sorted by image word, so the
  /// identity has index 0. Throws CapExceeded above `cap` elements.
  static PermGroup enumerate(std::vector<Perm> generators, std::size_t degree,
                             std::size_t cap = kDefaultOrderCap);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Elem>& generator_indices() const { return generator_indices_; }
  const Perm& element(Elem i) const { return elements_[i]; }
  const std::vector<Perm>& elements() const { return elements_; }
  std::optional<Elem> index_of(const Perm& p) const;

  /// Index of the product a·b, acting as a(b(x)).
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const { return inverse_[a]; }
  static constexpr Elem identity() { return 0; }
  std::size_t element_order(Elem a) const;

 private:
  std::size_t degree_ = 1;
  std::vector<Perm> generators_;
  std::vector<Elem> generator_indices_;
  std::vector<Perm> elements_;
  std::vector<Elem> inverse_;
  std::vector<Elem> table_;  // empty for large groups
};

/// Every subgroup of a finite group with coset, conjugation and
/// normaliser tables. Subgroup ids are sorted by (order, element set), so
/// id 0 is the trivial subgroup and the least id in a conjugacy class is
/// its least element set.
class SubgroupLattice {
 public:
  static constexpr std::size_t kMaxOrder = 2000;

  static std::shared_ptr<const SubgroupLattice> build(PermGroup group);

  const PermGroup& group() const { return group_; }
  std::size_t size() const { return subgroups_.size(); }
  SubgroupId trivial() const { return 0; }
  SubgroupId whole() const { return static_cast<SubgroupId>(subgroups_.size() - 1); }

  const std::vector<Elem>& elements(SubgroupId h) const { return subgroups_[h].elements; }
  const std::vector<Elem>& generators(SubgroupId h) const { return subgroups_[h].generators; }
  std::size_t order(SubgroupId h) const { return subgroups_[h].elements.size(); }
  bool contains(SubgroupId h, Elem g) const { return subgroups_[h].member[g]; }
  bool is_contained(SubgroupId a, SubgroupId b) const;

  std::optional<SubgroupId> find(std::vector<Elem> elements) const;
  /// The subgroup generated by the given elements.
  SubgroupId generated_by(const std::vector<Elem>& elements) const;
  /// Throws NotASubgroup unless the set is closed.
  SubgroupId subgroup_from_set(const std::vector<Elem>& elements) const;

  /// g H g⁻¹
  SubgroupId conjugate(SubgroupId h, Elem g) const { return conj_[h * group_.order() + g]; }
  SubgroupId intersect(SubgroupId a, SubgroupId b) const;
  SubgroupId normaliser(SubgroupId h) const { return subgroups_[h].normaliser; }

  std::size_t class_of(SubgroupId h) const { return subgroups_[h].conj_class; }
  std::size_t class_count() const { return class_reps_.size(); }
  /// Least id in the conjugacy class.
  SubgroupId class_rep(std::size_t cls) const { return class_reps_[cls]; }
  const std::vector<SubgroupId>& class_reps() const { return class_reps_; }
  /// Least conjugate of h under conjugation by elements of `by`.
  SubgroupId canonical_conjugate(SubgroupId h, SubgroupId by) const;

  /// Index of the left coset gK; cosets are numbered by their least element.
  std::uint32_t coset_index(SubgroupId k, Elem g) const { return subgroups_[k].coset_of[g]; }
  Elem coset_rep(SubgroupId k, std::uint32_t coset) const { return subgroups_[k].coset_reps[coset]; }
  const std::vector<Elem>& coset_reps(SubgroupId k) const { return subgroups_[k].coset_reps; }
  std::size_t index(SubgroupId k) const { return subgroups_[k].coset_reps.size(); }

  /// Least element of HgK.
  Elem double_coset_rep(SubgroupId h, Elem g, SubgroupId k) const;
  /// Least elements of all double cosets, ascending.
  std::vector<Elem> double_cosets(SubgroupId h, SubgroupId k) const;
  /// Elements of HgK, sorted.
  std::vector<Elem> double_coset(SubgroupId h, Elem g, SubgroupId k) const;
  /// Canonical reps g of the cosets gK with g⁻¹Hg ≤ K, ascending.
  std::vector<Elem> fixed_points(SubgroupId h, SubgroupId k) const;
  bool is_subconjugate(SubgroupId h, SubgroupId k) const;
  /// N_G(H)/H acting on the cosets of H in N_G(H).
  PermGroup weyl_group(SubgroupId h) const;
  std::size_t weyl_order(SubgroupId h) const { return order(normaliser(h)) / order(h); }

  std::string describe(SubgroupId h) const;

 private:
  struct Sub {
    std::vector<Elem> elements;
    std::vector<Elem> generators;
    std::vector<bool> member;
    std::vector<std::uint32_t> coset_of;
    std::vector<Elem> coset_reps;
    SubgroupId normaliser = 0;
    std::size_t conj_class = 0;
  };

  explicit SubgroupLattice(PermGroup group);
  std::vector<Elem> closure(const std::vector<Elem>& gens) const;

  PermGroup group_;
  std::vector<Sub> subgroups_;
  std::vector<SubgroupId> conj_;
  std::vector<SubgroupId> class_reps_;
};

using LatticePtr = std::shared_ptr<const SubgroupLattice>;

class Family {
 public:
  enum class Kind { All, Trivial, PSubgroups, Explicit };

  static Family all(LatticePtr lattice);
  static Family trivial(LatticePtr lattice);
  static Family p_subgroups(LatticePtr lattice, unsigned long p);
  /// Smallest family containing the given subgroups.
  static Family generated_by(LatticePtr lattice, const std::vector<SubgroupId>& subgroups);
  /// "all", "triv", "p2" / "p:2", or a list "explicit:3,5" of subgroup ids.
  static Family parse(LatticePtr lattice, const std::string& text);

  Kind kind() const { return kind_; }
  unsigned long prime() const { return p_; }
  const LatticePtr& lattice() const { return lattice_; }
  bool contains(SubgroupId h) const { return member_[h]; }
  /// Conjugacy-class representatives lying in the family, ascending id.
  std::vector<SubgroupId> representatives() const;
  std::vector<SubgroupId> members() const;
  std::string name() const;

 private:
  Family(LatticePtr lattice, Kind kind, unsigned long p, std::vector<bool> member)
      : lattice_(std::move(lattice)), kind_(kind), p_(p), member_(std::move(member)) {}

  LatticePtr lattice_;
  Kind kind_;
  unsigned long p_;
  std::vector<bool> member_;
};

/// JSON {"degree":n,"generators":[[...]]}, cycle strings separated by ';'
/// or top-level ',', or presets C<n>, S<n>, A<n>, D<n>, Q8, Dic3 and
/// direct products joined by 'x' (e.g. C2xC2).
PermGroup parse_group(const std::string& text, std::size_t cap = kDefaultOrderCap);
/// Every group of order at most 12 up to isomorphism, by preset name.
std::vector<std::string> small_group_presets(std::size_t max_order);

}  // namespace eqalg
