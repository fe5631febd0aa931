#include "eqalg/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "eqalg/error.hpp"

namespace eqalg {

namespace {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Ordering used for pivot choice: absolute value for ℤ and ℚ, residue for 𝔽_p.
bool smaller_pivot(const Scalar& a, const Scalar& b) { return abs(a) < abs(b); }

}  // namespace

Ring Ring::prime_field(unsigned long p) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidInput, "not a prime: " + std::to_string(p));
  return Ring(Kind::PrimeField, p);
}

Ring Ring::parse(const std::string& text) {
  if (text == "Z" || text == "ZZ") return integers();
  if (text == "Q" || text == "QQ") return rationals();
  std::string digits;
  if (text.rfind("GF(", 0) == 0 && text.back() == ')')
    digits = text.substr(3, text.size() - 4);
  else if (text.rfind("F_", 0) == 0)
    digits = text.substr(2);
  else if (text.rfind("F", 0) == 0)
    digits = text.substr(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
    throw Error(ErrorCode::InvalidInput, "unknown ring: " + text);
  return prime_field(std::stoul(digits));
}

std::string Ring::name() const {
  switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::PrimeField: return "F" + std::to_string(p_);
  }
  return "?";
}

Scalar Ring::normalize(const Scalar& x) const {
  if (kind_ != Kind::PrimeField) return x;
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class num = x.get_num() % p;
  if (num < 0) num += p;
  if (x.get_den() != 1) {
    mpz_class den = x.get_den() % p, inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      throw Error(ErrorCode::InvalidInput, "denominator divisible by characteristic");
    num = (num * inv) % p;
  }
  return Scalar(num);
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(Ring ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

Matrix Matrix::from_rows(Ring ring, const std::vector<std::vector<long>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  Matrix m(ring, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw Error(ErrorCode::InvalidInput, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Scalar(rows[i][j]));
  }
  return m;
}

Matrix Matrix::column(Ring ring, const std::vector<Scalar>& entries) {
  Matrix m(ring, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
  return m;
}

void Matrix::add_to(std::size_t i, std::size_t j, const Scalar& v) {
  Scalar& e = data_[i * cols_ + j];
  e = ring_.normalize(e + v);
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::InvalidInput, "matrix shape mismatch in product");
  if (ring_ != o.ring_) throw Error(ErrorCode::RingMismatch, "matrix product over different rings");
  Matrix r(ring_, rows_, o.cols_);
  Scalar t;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = data_[i * cols_ + k];
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.data_[k * o.cols_ + j];
        if (sgn(b) == 0) continue;
        t = a * b;
        r.data_[i * o.cols_ + j] += t;
      }
    }
  if (ring_.kind() == Ring::Kind::PrimeField)
    for (auto& e : r.data_) e = ring_.normalize(e);
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::InvalidInput, "matrix shape mismatch in sum");
  Matrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = ring_.normalize(data_[i] + o.data_[i]);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::InvalidInput, "matrix shape mismatch in difference");
  Matrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = ring_.normalize(data_[i] - o.data_[i]);
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r(*this);
  for (auto& e : r.data_) e = ring_.normalize(e * c);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::transpose() const {
  Matrix r(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.data_[j * rows_ + i] = data_[i * cols_ + j];
  return r;
}

Matrix Matrix::col(std::size_t j) const { return cols_range(j, j + 1); }

Matrix Matrix::cols_range(std::size_t begin, std::size_t end) const {
  Matrix r(ring_, rows_, end - begin);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = begin; j < end; ++j) r.data_[i * r.cols_ + (j - begin)] = data_[i * cols_ + j];
  return r;
}

Matrix Matrix::rows_range(std::size_t begin, std::size_t end) const {
  Matrix r(ring_, end - begin, cols_);
  std::copy(data_.begin() + begin * cols_, data_.begin() + end * cols_, r.data_.begin());
  return r;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix r(ring_, idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k)
    std::copy(data_.begin() + idx[k] * cols_, data_.begin() + (idx[k] + 1) * cols_, r.data_.begin() + k * cols_);
  return r;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
  Matrix r(ring_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < idx.size(); ++k) r.data_[i * idx.size() + k] = data_[i * cols_ + idx[k]];
  return r;
}

Matrix Matrix::hcat(const Matrix& o) const {
  if (rows_ != o.rows_) throw Error(ErrorCode::InvalidInput, "hcat row mismatch");
  Matrix r(ring_, rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.data_[i * r.cols_ + j] = data_[i * cols_ + j];
    for (std::size_t j = 0; j < o.cols_; ++j) r.data_[i * r.cols_ + cols_ + j] = o.data_[i * o.cols_ + j];
  }
  return r;
}

Matrix Matrix::vcat(const Matrix& o) const {
  if (cols_ != o.cols_) throw Error(ErrorCode::InvalidInput, "vcat column mismatch");
  Matrix r(ring_, rows_ + o.rows_, cols_);
  std::copy(data_.begin(), data_.end(), r.data_.begin());
  std::copy(o.data_.begin(), o.data_.end(), r.data_.begin() + data_.size());
  return r;
}

Matrix Matrix::with_ring(const Ring& r) const {
  Matrix m(r, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (r.kind() == Ring::Kind::Integers && data_[i].get_den() != 1)
      throw Error(ErrorCode::RingMismatch, "non-integral entry for an integer matrix");
    m.data_[i] = r.normalize(data_[i]);
  }
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

bool Matrix::is_integral() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x.get_den() == 1; });
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << data_[i * cols_ + j].get_str();
    out << "]";
  }
  out << "]";
  return out.str();
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(data_[a * cols_ + j], data_[b * cols_ + j]);
}

void Matrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap(data_[i * cols_ + a], data_[i * cols_ + b]);
}

void Matrix::add_row_multiple(std::size_t a, std::size_t b, const Scalar& c) {
  if (sgn(c) == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    const Scalar& v = data_[b * cols_ + j];
    if (sgn(v) != 0) data_[a * cols_ + j] = ring_.normalize(data_[a * cols_ + j] + c * v);
  }
}

void Matrix::add_col_multiple(std::size_t a, std::size_t b, const Scalar& c) {
  if (sgn(c) == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    const Scalar& v = data_[i * cols_ + b];
    if (sgn(v) != 0) data_[i * cols_ + a] = ring_.normalize(data_[i * cols_ + a] + c * v);
  }
}

void Matrix::scale_row(std::size_t a, const Scalar& c) {
  for (std::size_t j = 0; j < cols_; ++j) data_[a * cols_ + j] = ring_.normalize(data_[a * cols_ + j] * c);
}

void Matrix::scale_col(std::size_t a, const Scalar& c) {
  for (std::size_t i = 0; i < rows_; ++i) data_[i * cols_ + a] = ring_.normalize(data_[i * cols_ + a] * c);
}

// ---------------------------------------------------------------- Smith form

namespace {

struct SmithState {
  Matrix S, U, Uinv, V;
  bool field;

  Scalar quotient(const Scalar& a, const Scalar& b) const {
    if (field) return a / b;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
    return Scalar(q);
  }
  void row_add(std::size_t a, std::size_t b, const Scalar& c) {
    S.add_row_multiple(a, b, c);
    U.add_row_multiple(a, b, c);
    Uinv.add_col_multiple(b, a, -c);
  }
  void row_swap(std::size_t a, std::size_t b) {
    S.swap_rows(a, b);
    U.swap_rows(a, b);
    Uinv.swap_cols(a, b);
  }
  void row_scale(std::size_t a, const Scalar& u) {
    S.scale_row(a, u);
    U.scale_row(a, u);
    Uinv.scale_col(a, 1 / u);
  }
  void col_add(std::size_t a, std::size_t b, const Scalar& c) {
    S.add_col_multiple(a, b, c);
    V.add_col_multiple(a, b, c);
  }
  void col_swap(std::size_t a, std::size_t b) {
    S.swap_cols(a, b);
    V.swap_cols(a, b);
  }
};

}  // namespace

SmithForm smith_decompose(const Matrix& A) {
  const Ring& ring = A.ring();
  const std::size_t m = A.rows(), n = A.cols();
  SmithState st{A, Matrix::identity(ring, m), Matrix::identity(ring, m), Matrix::identity(ring, n), ring.is_field()};
  Matrix& S = st.S;

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (sgn(S(i, j)) != 0 && (pi == m || smaller_pivot(S(i, j), S(pi, pj)))) pi = i, pj = j;
    if (pi == m) break;
    st.row_swap(t, pi);
    st.col_swap(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(S(i, t)) == 0) continue;
        st.row_add(i, t, -st.quotient(S(i, t), S(t, t)));
        if (sgn(S(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(S(t, j)) == 0) continue;
        st.col_add(j, t, -st.quotient(S(t, j), S(t, t)));
        if (sgn(S(t, j)) != 0) clean = false;
      }
      if (!clean) {
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (sgn(S(i, t)) != 0 && smaller_pivot(S(i, t), S(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (sgn(S(t, j)) != 0 && smaller_pivot(S(t, j), S(bi, bj))) bi = t, bj = j;
        st.row_swap(t, bi);
        st.col_swap(t, bj);
        continue;
      }
      if (st.field) break;
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (S(i, j).get_num() % S(t, t).get_num() != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      st.row_add(t, bad, 1);
    }
    if (st.field) {
      if (S(t, t) != 1) st.row_scale(t, 1 / S(t, t));
    } else if (sgn(S(t, t)) < 0) {
      st.row_scale(t, -1);
    }
  }

  SmithForm out{st.S, st.U, st.Uinv, st.V, t, {}};
  for (std::size_t i = 0; i < t; ++i) out.diagonal.push_back(out.S(i, i));
  return out;
}

SmithForm smith_normal_form(const Matrix& A) {
  if (A.ring().kind() != Ring::Kind::Integers)
    throw Error(ErrorCode::RingMismatch, "Smith normal form requires an integer matrix");
  return smith_decompose(A);
}

Matrix kernel_basis(const Matrix& A) {
  SmithForm s = smith_decompose(A);
  return s.V.cols_range(s.rank, A.cols());
}

Matrix image_basis(const Matrix& A) {
  SmithForm s = smith_decompose(A);
  Matrix B = s.Uinv.cols_range(0, s.rank);
  for (std::size_t i = 0; i < s.rank; ++i) B.scale_col(i, s.diagonal[i]);
  return B;
}

std::size_t rank(const Matrix& A) { return smith_decompose(A).rank; }

std::optional<Matrix> solve(const Matrix& A, const Matrix& B) {
  if (A.rows() != B.rows()) throw Error(ErrorCode::InvalidInput, "solve: shape mismatch");
  SmithForm s = smith_decompose(A);
  Matrix C = s.U * B;
  Matrix Y(A.ring(), A.cols(), B.cols());
  for (std::size_t i = 0; i < C.rows(); ++i)
    for (std::size_t j = 0; j < C.cols(); ++j) {
      if (i >= s.rank) {
        if (sgn(C(i, j)) != 0) return std::nullopt;
        continue;
      }
      Scalar q = C(i, j) / s.diagonal[i];
      if (!A.ring().is_field() && q.get_den() != 1) return std::nullopt;
      Y.set(i, j, q);
    }
  return s.V * Y;
}

// ---------------------------------------------------------------- invariants

std::string AbelianInvariants::to_string() const {
  std::vector<std::string> parts;
  if (free_rank > 0) {
    std::string base = ring.name();
    parts.push_back(free_rank == 1 ? base : base + "^" + std::to_string(free_rank));
  }
  for (const auto& d : torsion) parts.push_back("Z/" + d.get_str());
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
  return s;
}

bool AbelianInvariants::operator==(const AbelianInvariants& o) const {
  return ring == o.ring && free_rank == o.free_rank && torsion == o.torsion;
}

// ---------------------------------------------------------------- FgModule

FgModule::FgModule(Ring ring, std::vector<mpz_class> orders) : ring_(ring), orders_(std::move(orders)) {
  for (const auto& o : orders_)
    if (o != 0 && (ring_.is_field() || o < 2)) throw Error(ErrorCode::InvalidInput, "bad generator order");
}

FgModule FgModule::free(Ring ring, std::size_t rank) { return FgModule(ring, std::vector<mpz_class>(rank, 0)); }

bool FgModule::is_free() const {
  return std::all_of(orders_.begin(), orders_.end(), [](const mpz_class& o) { return o == 0; });
}

Matrix FgModule::relations() const {
  std::vector<std::size_t> tors;
  for (std::size_t i = 0; i < orders_.size(); ++i)
    if (orders_[i] != 0) tors.push_back(i);
  Matrix R(ring_, orders_.size(), tors.size());
  for (std::size_t k = 0; k < tors.size(); ++k) R.set(tors[k], k, Scalar(orders_[tors[k]]));
  return R;
}

Matrix FgModule::reduce(const Matrix& x) const {
  Matrix r(x);
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (orders_[i] == 0) continue;
    for (std::size_t j = 0; j < x.cols(); ++j) {
      mpz_class v;
      mpz_fdiv_r(v.get_mpz_t(), x(i, j).get_num_mpz_t(), orders_[i].get_mpz_t());
      r.set(i, j, Scalar(v));
    }
  }
  return r;
}

bool FgModule::equal(const Matrix& x, const Matrix& y) const { return reduce(x - y).is_zero(); }

AbelianInvariants FgModule::invariants() const {
  AbelianInvariants inv;
  inv.ring = ring_;
  for (const auto& o : orders_) {
    if (o == 0)
      ++inv.free_rank;
    else
      inv.torsion.push_back(o);
  }
  std::sort(inv.torsion.begin(), inv.torsion.end());
  return inv;
}

// ---------------------------------------------------------------- Subquotient

Subquotient::Subquotient(const Matrix& Z, const Matrix& B) : ring_(Z.ring()), ambient_(Z.rows()) {
  const Ring& ring = ring_;
  Matrix Zb = image_basis(Z);
  const std::size_t z = Zb.cols();
  std::optional<Matrix> C = solve(Zb, B.cols() ? B : Matrix(ring, ambient_, 0));
  if (!C) throw Error(ErrorCode::InvalidInput, "subquotient: B is not contained in Z");
  SmithForm s = smith_decompose(*C);

  std::vector<std::size_t> kept;
  std::vector<mpz_class> orders;
  for (std::size_t i = 0; i < z; ++i) {
    if (i < s.rank) {
      mpz_class d = abs(s.diagonal[i].get_num());
      if (ring.is_field() || d == 1) continue;
      kept.push_back(i);
      orders.push_back(d);
    } else {
      kept.push_back(i);
      orders.push_back(0);
    }
  }
  module_ = FgModule(ring, orders);
  reps_ = Zb * s.Uinv.select_cols(kept);

  // Left inverse of Zb, rational over ℤ.
  Ring work = ring.is_field() ? ring : Ring::rationals();
  SmithForm zs = smith_decompose(Zb.with_ring(work));
  Matrix Splus(work, z, ambient_);
  for (std::size_t i = 0; i < z; ++i) Splus.set(i, i, 1 / zs.diagonal[i]);
  Matrix left_inv = zs.V * Splus * zs.U;
  to_coords_ = s.U.select_rows(kept).with_ring(work) * left_inv;
}

Matrix Subquotient::coords(const Matrix& z) const {
  if (z.rows() != ambient_) throw Error(ErrorCode::InvalidInput, "subquotient coords: wrong ambient size");
  if (module_.ngens() == 0) return Matrix(ring_, 0, z.cols());
  Matrix c = to_coords_ * z.with_ring(to_coords_.ring());
  if (!ring_.is_field()) {
    if (!c.is_integral()) throw Error(ErrorCode::InvalidInput, "subquotient coords: vector not in Z");
    c = c.with_ring(ring_);
  }
  return module_.reduce(c);
}

// ---------------------------------------------------------------- module maps

Matrix kernel_mod(const Matrix& f, const FgModule& target) {
  Matrix rel = target.relations();
  if (rel.cols() == 0) return kernel_basis(f);
  return kernel_basis(f.hcat(rel)).rows_range(0, f.cols());
}

bool well_defined(const Matrix& f, const FgModule& source, const FgModule& target) {
  return target.reduce(f * source.relations()).is_zero();
}

Subquotient kernel_of(const Matrix& f, const FgModule& source, const FgModule& target) {
  Matrix rel = source.relations();
  return Subquotient(kernel_mod(f, target).hcat(rel), rel);
}

Subquotient cokernel_of(const Matrix& f, const FgModule& target) {
  return Subquotient(Matrix::identity(target.ring(), target.ngens()), f.hcat(target.relations()));
}

bool is_isomorphism(const Matrix& f, const FgModule& source, const FgModule& target) {
  return kernel_of(f, source, target).module().is_zero() && cokernel_of(f, target).module().is_zero();
}

AbelianInvariants cohomology_at(const CochainComplex& C, std::size_t k) {
  if (k >= C.terms.size()) throw Error(ErrorCode::InvalidInput, "cohomology degree out of range");
  const FgModule& T = C.terms[k];
  const Ring& ring = T.ring();
  Matrix rel = T.relations();
  Matrix Z = rel;
  if (k < C.maps.size() && k + 1 < C.terms.size())
    Z = kernel_mod(C.maps[k], C.terms[k + 1]).hcat(rel);
  else
    Z = Matrix::identity(ring, T.ngens());
  Matrix B = rel;
  if (k > 0 && k - 1 < C.maps.size()) {
    if (k < C.maps.size() && k + 1 < C.terms.size() &&
        !C.terms[k + 1].reduce(C.maps[k] * C.maps[k - 1]).is_zero())
      throw Error(ErrorCode::NotAComplex, "consecutive maps do not compose to zero at degree " + std::to_string(k));
    B = C.maps[k - 1].hcat(rel);
  }
  return Subquotient(Z, B).module().invariants();
}

AbelianInvariants homology_at(const ChainComplex& C, std::size_t n) {
  if (n >= C.d.size()) throw Error(ErrorCode::InvalidInput, "homology degree out of range");
  const Matrix& out = C.d[n];
  Matrix Z = kernel_basis(out);
  Matrix B(C.ring, out.cols(), 0);
  if (n + 1 < C.d.size()) {
    const Matrix& in = C.d[n + 1];
    if (!(out * in).is_zero())
      throw Error(ErrorCode::NotAComplex, "d∘d ≠ 0 at degree " + std::to_string(n));
    B = in;
  }
  return Subquotient(Z, B).module().invariants();
}

}  // namespace eqalg
