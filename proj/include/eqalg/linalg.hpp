#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace eqalg {

using Scalar = mpq_class;

class Ring {
 public:
  enum class Kind { Integers, Rationals, PrimeField };

  static Ring integers() { return Ring(Kind::Integers, 0); }
  static Ring rationals() { return Ring(Kind::Rationals, 0); }
  static Ring prime_field(unsigned long p);
  /// Accepts "Z", "Q", "Fp" / "F_p" / "GF(p)".
  static Ring parse(const std::string& text);

  Kind kind() const { return kind_; }
  unsigned long characteristic() const { return p_; }
  bool is_field() const { return kind_ != Kind::Integers; }
  std::string name() const;

  /// Canonical representative: integers stay integers, residues land in [0,p).
  Scalar normalize(const Scalar& x) const;

  bool operator==(const Ring& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Ring& o) const { return !(*this == o); }

 private:
  Ring(Kind k, unsigned long p) : kind_(k), p_(p) {}
  Kind kind_;
  unsigned long p_;
};

/// Dense exact matrix acting on column vectors. Entries are kept normalised
/// for the ring.
class Matrix {
 public:
  Matrix() : ring_(Ring::integers()) {}
  Matrix(Ring ring, std::size_t rows, std::size_t cols);

  static Matrix identity(Ring ring, std::size_t n);
  static Matrix from_rows(Ring ring, const std::vector<std::vector<long>>& rows);
  static Matrix column(Ring ring, const std::vector<Scalar>& entries);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const Scalar& v) { data_[i * cols_ + j] = ring_.normalize(v); }
  void add_to(std::size_t i, std::size_t j, const Scalar& v);

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const;
  Matrix col(std::size_t j) const;
  Matrix cols_range(std::size_t begin, std::size_t end) const;
  Matrix rows_range(std::size_t begin, std::size_t end) const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Matrix select_cols(const std::vector<std::size_t>& idx) const;
  Matrix hcat(const Matrix& o) const;
  Matrix vcat(const Matrix& o) const;
  /// Reinterpret entries over another ring (ℤ → ℚ, ℤ → 𝔽_p, ℚ → ℤ for integral data).
  Matrix with_ring(const Ring& r) const;

  bool is_zero() const;
  bool is_integral() const;
  std::string to_string() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row a += c·row b
  void add_row_multiple(std::size_t a, std::size_t b, const Scalar& c);
  /// col a += c·col b
  void add_col_multiple(std::size_t a, std::size_t b, const Scalar& c);
  void scale_row(std::size_t a, const Scalar& c);
  void scale_col(std::size_t a, const Scalar& c);

 private:
  Ring ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

struct SmithForm {
  Matrix S, U, Uinv, V;
  std::size_t rank = 0;
  std::vector<Scalar> diagonal;  // the first `rank` diagonal entries of S
};

/// U·A·V = S for any ring; over fields the nonzero diagonal is all ones.
SmithForm smith_decompose(const Matrix& A);
/// Integer-only entry point; throws RingMismatch otherwise.
SmithForm smith_normal_form(const Matrix& A);

Matrix kernel_basis(const Matrix& A);
Matrix image_basis(const Matrix& A);
std::size_t rank(const Matrix& A);
/// Some X with A·X = B, or nothing. Over ℤ solvability is decided exactly.
std::optional<Matrix> solve(const Matrix& A, const Matrix& B);

struct AbelianInvariants {
  Ring ring = Ring::integers();
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  std::size_t dimension() const { return free_rank; }
  std::string to_string() const;
  bool operator==(const AbelianInvariants& o) const;
};

/// R^f ⊕ ⊕ R/d_i with one cyclic summand per generator: orders[i] == 0 means free.
class FgModule {
 public:
  FgModule() = default;
  FgModule(Ring ring, std::vector<mpz_class> orders);
  static FgModule free(Ring ring, std::size_t rank);

  const Ring& ring() const { return ring_; }
  std::size_t ngens() const { return orders_.size(); }
  const std::vector<mpz_class>& orders() const { return orders_; }
  bool is_free() const;
  bool is_zero() const { return orders_.empty(); }
  /// Diagonal relation columns, one per torsion generator.
  Matrix relations() const;
  /// Reduce each row of x modulo the generator orders.
  Matrix reduce(const Matrix& x) const;
  /// x ≡ y in the module, column by column.
  bool equal(const Matrix& x, const Matrix& y) const;
  AbelianInvariants invariants() const;

 private:
  Ring ring_ = Ring::integers();
  std::vector<mpz_class> orders_;
};

/// Z/B for lattices B ⊆ Z ⊆ R^n given by spanning columns.
class Subquotient {
 public:
  Subquotient() = default;
  Subquotient(const Matrix& Z, const Matrix& B);

  const FgModule& module() const { return module_; }
  /// Ambient representatives of the generators (n × ngens).
  const Matrix& representatives() const { return reps_; }
  /// Coordinates of ambient columns lying in Z.
  Matrix coords(const Matrix& z) const;
  std::size_t ambient() const { return ambient_; }

 private:
  FgModule module_;
  Matrix reps_;
  Matrix to_coords_;  // rational when the ring is ℤ
  Ring ring_ = Ring::integers();
  std::size_t ambient_ = 0;
};

/// Generators of {x : f·x ∈ relations(target)}.
Matrix kernel_mod(const Matrix& f, const FgModule& target);
/// Is f (n_target × n_source) well defined on the source relations?
bool well_defined(const Matrix& f, const FgModule& source, const FgModule& target);
Subquotient kernel_of(const Matrix& f, const FgModule& source, const FgModule& target);
Subquotient cokernel_of(const Matrix& f, const FgModule& target);
bool is_isomorphism(const Matrix& f, const FgModule& source, const FgModule& target);

/// terms[k] --maps[k]--> terms[k+1].
struct CochainComplex {
  std::vector<FgModule> terms;
  std::vector<Matrix> maps;
};
/// Throws NotAComplex if consecutive maps do not compose to zero.
AbelianInvariants cohomology_at(const CochainComplex& C, std::size_t k);

/// d[n]: C_n → C_{n-1}; d[0] has zero rows.
struct ChainComplex {
  Ring ring = Ring::integers();
  std::vector<Matrix> d;
};
AbelianInvariants homology_at(const ChainComplex& C, std::size_t n);

}  // namespace eqalg
