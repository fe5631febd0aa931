#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "eqalg/group.hpp"

namespace eqalg {

/// Integer combination of basis morphisms, sorted by index, no zero terms.
using SparseVec = std::vector<std::pair<std::uint32_t, std::int64_t>>;

void sparse_add(SparseVec& acc, const SparseVec& v, std::int64_t scale = 1);
SparseVec sparse_normalize(std::vector<std::pair<std::uint32_t, std::int64_t>> terms);

/// Number of worker threads, from EQALG_THREADS (default 1).
unsigned thread_count();
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

struct ObjectInfo {
  std::string label;
  SubgroupId subgroup = 0;
  std::size_t subgroup_order = 1;
};

/// Everything needed to tabulate a category with free abelian hom groups.
struct CategorySpec {
  std::string kind;
  LatticePtr lattice;
  std::vector<ObjectInfo> objects;
  std::vector<std::vector<std::vector<std::string>>> basis_labels;  // [x][y][k]
  std::vector<std::uint32_t> identity;                                // basis index in hom(x,x)
  /// b ∘ a for a ∈ hom(x,y), b ∈ hom(y,z).
  std::function<SparseVec(std::size_t x, std::size_t y, std::size_t z, std::uint32_t b, std::uint32_t a)> compose;
};

/// A finite category whose hom groups are free abelian on canonical bases,
/// with integer structure constants. The opposite view shares the tables.
class FinAbCategory {
 public:
  FinAbCategory() = default;
  static FinAbCategory build(const CategorySpec& spec);

  std::size_t size() const;
  std::size_t rank(std::size_t x, std::size_t y) const;
  /// b ∘ a for a ∈ hom(x,y), b ∈ hom(y,z).
  const SparseVec& compose(std::size_t x, std::size_t y, std::size_t z, std::uint32_t b, std::uint32_t a) const;
  SparseVec compose(std::size_t x, std::size_t y, std::size_t z, const SparseVec& b, const SparseVec& a) const;
  std::uint32_t identity(std::size_t x) const;

  bool is_opposite() const { return op_; }
  FinAbCategory opposite() const;
  bool same_as(const FinAbCategory& o) const { return data_ == o.data_ && op_ == o.op_; }
  bool same_underlying(const FinAbCategory& o) const { return data_ == o.data_; }

  const std::string& kind() const;
  const LatticePtr& lattice() const;
  const ObjectInfo& object(std::size_t x) const;
  /// Larger priority objects are tried first when choosing generators.
  long priority(std::size_t x) const;
  std::string basis_label(std::size_t x, std::size_t y, std::uint32_t k) const;

  /// Associativity and unit laws over all basis triples; returns the number of
  /// violations.
  std::size_t count_law_violations() const;

 private:
  struct Data {
    CategorySpec spec;
    std::vector<std::vector<std::size_t>> rank;
    std::vector<std::vector<SparseVec>> table;  // [(x*n+y)*n+z][b*rank(x,y)+a]
  };
  std::shared_ptr<const Data> data_;
  bool op_ = false;
};

/// An additive functor given on objects and on basis morphisms.
class AbFunctor {
 public:
  using ImageFn = std::function<SparseVec(std::size_t x, std::size_t y, std::uint32_t k)>;

  AbFunctor() = default;
  AbFunctor(FinAbCategory source, FinAbCategory target, std::vector<std::size_t> object_map, const ImageFn& image);

  const FinAbCategory& source() const { return source_; }
  const FinAbCategory& target() const { return target_; }
  std::size_t object(std::size_t x) const { return object_map_[x]; }
  const SparseVec& image(std::size_t x, std::size_t y, std::uint32_t k) const;
  SparseVec image(std::size_t x, std::size_t y, const SparseVec& v) const;

  /// Throws FunctorNotAdditive if identities or composites are not preserved.
  void verify() const;
  AbFunctor opposite() const;
  /// next ∘ this
  AbFunctor then(const AbFunctor& next) const;

 private:
  FinAbCategory source_, target_;
  std::vector<std::size_t> object_map_;
  std::vector<std::vector<SparseVec>> images_;  // [x*n+y][k]
};

/// The full subcategory on one object.
FinAbCategory endomorphism_category(const FinAbCategory& C, std::size_t x);
AbFunctor endomorphism_inclusion(const FinAbCategory& End, const FinAbCategory& C, std::size_t x);

}  // namespace eqalg
