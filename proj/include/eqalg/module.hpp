#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eqalg/category.hpp"
#include "eqalg/linalg.hpp"

namespace eqalg {

enum class Variance { Contravariant, Covariant };
const char* variance_name(Variance v);

/// A contravariant additive functor from `acting` to finitely presented
/// R-modules. A covariant module over C is stored as a contravariant module
/// over C^op. For k ∈ hom(x,y), act(x,y,k) is the matrix value(y) → value(x)
/// on generators.
class CatModule {
 public:
  using ActionFn = std::function<Matrix(std::size_t x, std::size_t y, std::uint32_t k)>;

  CatModule() = default;
  CatModule(FinAbCategory acting, Ring ring, std::vector<FgModule> values, const ActionFn& act);
  /// Values Z_x/B_x inside ambient modules on which `ambient(x,y,k)` acts.
  static CatModule from_subquotients(FinAbCategory acting, Ring ring, std::vector<Subquotient> values,
                                     const ActionFn& ambient);

  const FinAbCategory& acting() const { return data_->acting; }
  Variance variance() const { return acting().is_opposite() ? Variance::Covariant : Variance::Contravariant; }
  const Ring& ring() const { return data_->ring; }
  std::size_t size() const { return data_->values.size(); }
  const FgModule& value(std::size_t x) const { return data_->values[x]; }
  const Matrix& act(std::size_t x, std::size_t y, std::uint32_t k) const;
  Matrix act(std::size_t x, std::size_t y, const SparseVec& v) const;
  /// The subquotient description when built by from_subquotients.
  const Subquotient* subquotient(std::size_t x) const;

  bool is_zero() const;
  /// Identity, composition and well-definedness checks over all basis pairs.
  std::size_t count_functoriality_violations() const;
  std::vector<AbelianInvariants> invariants() const;

 private:
  struct Data {
    FinAbCategory acting;
    Ring ring = Ring::integers();
    std::vector<FgModule> values;
    std::vector<std::vector<Matrix>> acts;  // [x*n+y][k]
    std::vector<Subquotient> sq;
  };
  std::shared_ptr<const Data> data_;
};

/// A natural transformation given by one matrix per object.
struct ModuleMap {
  CatModule source, target;
  std::vector<Matrix> components;

  static ModuleMap identity(const CatModule& M);
  static ModuleMap zero(const CatModule& source, const CatModule& target);
  bool is_well_defined() const;
  bool is_natural() const;
  bool is_iso() const;
  bool is_zero() const;
  /// next ∘ this
  ModuleMap then(const ModuleMap& next) const;
  bool equals(const ModuleMap& o) const;
};

// ---------------------------------------------------------------- constructors

/// R[−,x]: value at y free on the basis of hom(y,x).
CatModule representable(const FinAbCategory& C, std::size_t x, const Ring& ring);
/// R̲: R everywhere, identities on basis morphisms.
CatModule constant_module(const FinAbCategory& C, const Ring& ring);
/// R̲_k: R at objects whose subgroup has order ≤ k, 0 elsewhere.
CatModule truncated_constant_module(const FinAbCategory& C, const Ring& ring, std::size_t k);
CatModule zero_module(const FinAbCategory& C, const Ring& ring);
CatModule direct_sum(const std::vector<CatModule>& parts);

/// ⊕_j R[−, x_j].
struct FreeSum {
  FinAbCategory acting;
  Ring ring = Ring::integers();
  std::vector<std::size_t> objects;

  CatModule module() const;
  /// Rank of the value at y, and the offset of summand j inside it.
  std::size_t rank_at(std::size_t y) const;
  std::size_t offset(std::size_t y, std::size_t j) const;
};

/// The map ⊕_j R[−,x_j] → M sending the generator id_{x_j} to images[j] ∈ M(x_j).
ModuleMap yoneda_map(const FreeSum& F, const CatModule& M, const std::vector<Matrix>& images);

// ---------------------------------------------------------------- resolutions

struct FreeCover {
  FreeSum free;
  std::vector<Matrix> images;  // generator images, columns in M(x_j)
  ModuleMap epi;
};

/// Generators are chosen greedily at objects of larger priority first and
/// then pruned. A nonzero seed shuffles the candidate order.
FreeCover free_cover(const CatModule& M, std::uint64_t seed = 0);

/// A complex of finite sums of representables. d[n][j] is the image of the
/// j-th generator of P_n, a column in P_{n-1}(x_j); d[0] is empty.
struct FreeComplex {
  FinAbCategory acting;
  Ring ring = Ring::integers();
  std::vector<FreeSum> terms;
  std::vector<std::vector<Matrix>> d;

  /// The matrix of d_n at object y.
  Matrix differential_at(std::size_t n, std::size_t y) const;
  /// Throws NotAComplex unless d∘d = 0.
  void check_complex() const;
  /// Hom(P_*, B) as a cochain complex of R-modules.
  CochainComplex hom_complex(const CatModule& B) const;
  /// N ⊗ P_* for N over acting^op, reindexed so that H_n sits at degree top−n.
  CochainComplex tensor_complex(const CatModule& N) const;
};

struct FreeResolution {
  CatModule target;
  FreeComplex complex;
  std::vector<Matrix> augmentation;  // images of the P_0 generators in target
  std::vector<CatModule> kernels;    // K_n = ker(P_n → P_{n−1}), as subquotients of P_n
  bool finite = false;               // some kernel vanished

  std::size_t length() const { return complex.terms.size(); }
  /// Objectwise exactness of P_* → A → 0 up to the computed degree.
  bool is_exact() const;
};

FreeResolution resolve(const CatModule& A, std::size_t degree, std::uint64_t seed = 0);

std::vector<AbelianInvariants> ext(const CatModule& A, const CatModule& B, std::size_t degree, std::uint64_t seed = 0);
std::vector<AbelianInvariants> ext_from_resolution(const FreeResolution& P, const CatModule& B, std::size_t degree);
/// Tor_k(N, A) for N over acting^op and A over acting, resolving A.
std::vector<AbelianInvariants> tor(const CatModule& N, const CatModule& A, std::size_t degree, std::uint64_t seed = 0);

// ---------------------------------------------------------------- Hom and ⊗

/// Hom(A,B) inside the ambient ⊕_{x,i} B(x), one block θ_x(e_i) per generator
/// e_i of A(x).
struct HomGroup {
  CatModule source, target;
  FgModule ambient;
  Subquotient sq;
  std::vector<std::vector<std::size_t>> block;  // [x][i] -> ambient offset

  const FgModule& module() const { return sq.module(); }
  /// The natural transformation with the given ambient vector.
  ModuleMap to_map(const Matrix& ambient_vector) const;
  Matrix to_ambient(const ModuleMap& f) const;
  /// Generator g as a natural transformation.
  ModuleMap generator(std::size_t g) const;
};
HomGroup hom_group(const CatModule& A, const CatModule& B);

/// N ⊗_C A for N over C^op and A over C, on generators (x, i, j).
struct TensorProduct {
  CatModule left, right;
  Subquotient sq;
  std::vector<std::vector<std::vector<std::size_t>>> index;  // [x][i][j] -> ambient generator

  const FgModule& module() const { return sq.module(); }
};
TensorProduct tensor(const CatModule& N, const CatModule& A);

// ---------------------------------------------------------------- change of category

/// A∘ι.
CatModule restrict_module(const CatModule& A, const AbFunctor& iota);
ModuleMap restrict_map(const ModuleMap& f, const AbFunctor& iota);
/// R[?, ι(−)] ⊗_C A.
CatModule induce(const CatModule& A, const AbFunctor& iota);
ModuleMap induce_map(const ModuleMap& f, const AbFunctor& iota, const CatModule& IndA, const CatModule& IndB);
/// Hom_C(R[ι(−), ?], A).
CatModule coinduce(const CatModule& A, const AbFunctor& iota);
/// η: A → Res Ind A.
ModuleMap induction_unit(const CatModule& A, const AbFunctor& iota, const CatModule& IndA);
/// ε: Ind Res B → B.
ModuleMap induction_counit(const CatModule& B, const AbFunctor& iota, const CatModule& IndResB);
/// The map Ind A → B adjoint to φ: A → Res B.
ModuleMap induction_adjoint(const ModuleMap& phi, const AbFunctor& iota, const CatModule& B);

// ---------------------------------------------------------------- duality

/// M^D(x) = Hom(M, R[−,x]), a module over acting^op.
CatModule dual(const CatModule& M);
/// ζ: M → M^DD.
ModuleMap double_dual_map(const CatModule& M, const CatModule& MD, const CatModule& MDD);
/// ν: N ⊗ M^D → Hom(M, N), as a matrix between the two R-modules.
Matrix nu(const CatModule& N, const CatModule& M, const CatModule& MD, const TensorProduct& T, const HomGroup& H);

// ---------------------------------------------------------------- dimension

bool is_projective(const CatModule& A);
/// "0".."d", or ">d" when no kernel up to degree d is projective.
std::string projective_dimension_up_to(const CatModule& A, std::size_t d);
/// ℤ → 𝔽_p or ℤ → ℚ (and the identity).
CatModule base_change(const CatModule& A, const Ring& target);

}  // namespace eqalg
