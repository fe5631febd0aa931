#include "eqalg/module.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "eqalg/error.hpp"

namespace eqalg {

const char* variance_name(Variance v) { return v == Variance::Covariant ? "covariant" : "contravariant"; }

namespace {

Matrix unit_column(const Ring& ring, std::size_t n, std::size_t i) {
  Matrix e(ring, n, 1);
  e.set(i, 0, 1);
  return e;
}

Matrix empty(const Ring& ring, std::size_t rows, std::size_t cols) { return Matrix(ring, rows, cols); }

void place(Matrix& dst, std::size_t r0, std::size_t c0, const Matrix& src, const Scalar& scale = 1) {
  for (std::size_t i = 0; i < src.rows(); ++i)
    for (std::size_t j = 0; j < src.cols(); ++j)
      if (sgn(src(i, j)) != 0) dst.add_to(r0 + i, c0 + j, scale * src(i, j));
}

FgModule concat(const Ring& ring, const std::vector<const FgModule*>& parts) {
  std::vector<mpz_class> orders;
  for (auto* p : parts) orders.insert(orders.end(), p->orders().begin(), p->orders().end());
  return FgModule(ring, orders);
}

void require_same(const FinAbCategory& a, const FinAbCategory& b, const char* what) {
  if (!a.same_as(b)) throw Error(ErrorCode::ObjectMismatch, what);
}

void require_ring(const Ring& a, const Ring& b) {
  if (a != b) throw Error(ErrorCode::RingMismatch, "modules over " + a.name() + " and " + b.name());
}

// Offsets of the blocks θ_x(e_i) in the ambient of Hom(A, ·), block sizes
// given per object.
std::vector<std::vector<std::size_t>> hom_layout(const CatModule& A, const std::function<std::size_t(std::size_t)>& size,
                                                 std::size_t& total) {
  std::vector<std::vector<std::size_t>> block(A.size());
  total = 0;
  for (std::size_t x = 0; x < A.size(); ++x)
    for (std::size_t i = 0; i < A.value(x).ngens(); ++i) {
      block[x].push_back(total);
      total += size(x);
    }
  return block;
}

// Ambient generators (c, i, f) of an induced module at d, f ∈ hom_D(d, ιc).
struct IndLayout {
  std::vector<std::vector<std::vector<std::size_t>>> base;  // [d][c][i]
  std::vector<std::size_t> total;                          // [d]
};

IndLayout ind_layout(const CatModule& A, const AbFunctor& iota) {
  const auto& D = iota.target();
  IndLayout L;
  L.base.resize(D.size());
  L.total.assign(D.size(), 0);
  for (std::size_t d = 0; d < D.size(); ++d) {
    L.base[d].resize(A.size());
    for (std::size_t c = 0; c < A.size(); ++c)
      for (std::size_t i = 0; i < A.value(c).ngens(); ++i) {
        L.base[d][c].push_back(L.total[d]);
        L.total[d] += D.rank(d, iota.object(c));
      }
  }
  return L;
}

}  // namespace

// ---------------------------------------------------------------- CatModule

CatModule::CatModule(FinAbCategory acting, Ring ring, std::vector<FgModule> values, const ActionFn& act) {
  auto data = std::make_shared<Data>();
  data->acting = std::move(acting);
  data->ring = ring;
  data->values = std::move(values);
  const std::size_t n = data->acting.size();
  if (data->values.size() != n) throw Error(ErrorCode::ObjectMismatch, "module has the wrong number of values");
  for (const auto& v : data->values) require_ring(v.ring(), ring);
  data->acts.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::uint32_t k = 0; k < data->acting.rank(x, y); ++k) {
        Matrix m = act(x, y, k);
        if (m.rows() != data->values[x].ngens() || m.cols() != data->values[y].ngens())
          throw Error(ErrorCode::InvalidInput, "action matrix has the wrong shape");
        data->acts[x * n + y].push_back(data->values[x].reduce(m.with_ring(ring)));
      }
  data_ = data;
}

CatModule CatModule::from_subquotients(FinAbCategory acting, Ring ring, std::vector<Subquotient> values,
                                       const ActionFn& ambient) {
  std::vector<FgModule> mods;
  for (const auto& s : values) mods.push_back(s.module());
  CatModule M(std::move(acting), ring, mods, [&](std::size_t x, std::size_t y, std::uint32_t k) {
    return values[x].coords(ambient(x, y, k) * values[y].representatives());
  });
  std::const_pointer_cast<Data>(M.data_)->sq = std::move(values);
  return M;
}

const Matrix& CatModule::act(std::size_t x, std::size_t y, std::uint32_t k) const {
  return data_->acts[x * size() + y][k];
}

Matrix CatModule::act(std::size_t x, std::size_t y, const SparseVec& v) const {
  Matrix out(ring(), value(x).ngens(), value(y).ngens());
  for (const auto& [k, c] : v) out = out + act(x, y, k).scaled(Scalar(static_cast<long>(c)));
  return value(x).reduce(out);
}

const Subquotient* CatModule::subquotient(std::size_t x) const {
  return data_->sq.empty() ? nullptr : &data_->sq[x];
}

bool CatModule::is_zero() const {
  for (const auto& v : data_->values)
    if (!v.is_zero()) return false;
  return true;
}

std::size_t CatModule::count_functoriality_violations() const {
  const auto& C = acting();
  const std::size_t n = size();
  std::size_t bad = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (!value(x).equal(act(x, x, C.identity(x)), Matrix::identity(ring(), value(x).ngens()))) ++bad;
    for (std::size_t y = 0; y < n; ++y)
      for (std::uint32_t a = 0; a < C.rank(x, y); ++a) {
        if (!well_defined(act(x, y, a), value(y), value(x))) ++bad;
        for (std::size_t z = 0; z < n; ++z)
          for (std::uint32_t b = 0; b < C.rank(y, z); ++b)
            if (!value(x).equal(act(x, z, C.compose(x, y, z, b, a)), act(x, y, a) * act(y, z, b))) ++bad;
      }
  }
  return bad;
}

std::vector<AbelianInvariants> CatModule::invariants() const {
  std::vector<AbelianInvariants> out;
  for (const auto& v : data_->values) out.push_back(v.invariants());
  return out;
}

// ---------------------------------------------------------------- ModuleMap

ModuleMap ModuleMap::identity(const CatModule& M) {
  ModuleMap f{M, M, {}};
  for (std::size_t x = 0; x < M.size(); ++x) f.components.push_back(Matrix::identity(M.ring(), M.value(x).ngens()));
  return f;
}

ModuleMap ModuleMap::zero(const CatModule& source, const CatModule& target) {
  ModuleMap f{source, target, {}};
  for (std::size_t x = 0; x < source.size(); ++x)
    f.components.push_back(empty(source.ring(), target.value(x).ngens(), source.value(x).ngens()));
  return f;
}

bool ModuleMap::is_well_defined() const {
  for (std::size_t x = 0; x < source.size(); ++x)
    if (!well_defined(components[x], source.value(x), target.value(x))) return false;
  return true;
}

bool ModuleMap::is_natural() const {
  if (!source.acting().same_as(target.acting())) return false;
  if (!is_well_defined()) return false;
  const auto& C = source.acting();
  for (std::size_t x = 0; x < C.size(); ++x)
    for (std::size_t y = 0; y < C.size(); ++y)
      for (std::uint32_t a = 0; a < C.rank(x, y); ++a)
        if (!target.value(x).equal(components[x] * source.act(x, y, a), target.act(x, y, a) * components[y]))
          return false;
  return true;
}

bool ModuleMap::is_iso() const {
  for (std::size_t x = 0; x < source.size(); ++x)
    if (!is_isomorphism(components[x], source.value(x), target.value(x))) return false;
  return true;
}

bool ModuleMap::is_zero() const {
  for (std::size_t x = 0; x < source.size(); ++x)
    if (!target.value(x).reduce(components[x]).is_zero()) return false;
  return true;
}

ModuleMap ModuleMap::then(const ModuleMap& next) const {
  ModuleMap f{source, next.target, {}};
  for (std::size_t x = 0; x < source.size(); ++x)
    f.components.push_back(next.target.value(x).reduce(next.components[x] * components[x]));
  return f;
}

bool ModuleMap::equals(const ModuleMap& o) const {
  for (std::size_t x = 0; x < source.size(); ++x)
    if (!target.value(x).equal(components[x], o.components[x])) return false;
  return true;
}

// ---------------------------------------------------------------- constructors

CatModule representable(const FinAbCategory& C, std::size_t x, const Ring& ring) {
  return FreeSum{C, ring, {x}}.module();
}

CatModule constant_module(const FinAbCategory& C, const Ring& ring) {
  return truncated_constant_module(C, ring, SIZE_MAX);
}

CatModule truncated_constant_module(const FinAbCategory& C, const Ring& ring, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidInput, "truncation bound must be at least 1");
  std::vector<FgModule> values;
  for (std::size_t x = 0; x < C.size(); ++x)
    values.push_back(FgModule::free(ring, C.object(x).subgroup_order <= k ? 1 : 0));
  return CatModule(C, ring, values, [&](std::size_t x, std::size_t y, std::uint32_t) {
    Matrix m(ring, values[x].ngens(), values[y].ngens());
    if (m.rows() == 1 && m.cols() == 1) m.set(0, 0, 1);
    return m;
  });
}

CatModule zero_module(const FinAbCategory& C, const Ring& ring) {
  std::vector<FgModule> values(C.size(), FgModule::free(ring, 0));
  return CatModule(C, ring, values, [&](std::size_t, std::size_t, std::uint32_t) { return Matrix(ring, 0, 0); });
}

CatModule direct_sum(const std::vector<CatModule>& parts) {
  if (parts.empty()) throw Error(ErrorCode::InvalidInput, "direct sum of no modules");
  const auto& C = parts[0].acting();
  const Ring& ring = parts[0].ring();
  for (const auto& p : parts) {
    require_same(p.acting(), C, "summands over different categories");
    require_ring(p.ring(), ring);
  }
  std::vector<FgModule> values;
  for (std::size_t x = 0; x < C.size(); ++x) {
    std::vector<const FgModule*> v;
    for (const auto& p : parts) v.push_back(&p.value(x));
    values.push_back(concat(ring, v));
  }
  return CatModule(C, ring, values, [&](std::size_t x, std::size_t y, std::uint32_t k) {
    Matrix m(ring, values[x].ngens(), values[y].ngens());
    std::size_t r = 0, c = 0;
    for (const auto& p : parts) {
      place(m, r, c, p.act(x, y, k));
      r += p.value(x).ngens();
      c += p.value(y).ngens();
    }
    return m;
  });
}

std::size_t FreeSum::rank_at(std::size_t y) const {
  std::size_t r = 0;
  for (auto x : objects) r += acting.rank(y, x);
  return r;
}

std::size_t FreeSum::offset(std::size_t y, std::size_t j) const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < j; ++i) r += acting.rank(y, objects[i]);
  return r;
}

CatModule FreeSum::module() const {
  std::vector<FgModule> values;
  for (std::size_t y = 0; y < acting.size(); ++y) values.push_back(FgModule::free(ring, rank_at(y)));
  return CatModule(acting, ring, values, [&](std::size_t y2, std::size_t y, std::uint32_t a) {
    Matrix m(ring, rank_at(y2), rank_at(y));
    for (std::size_t j = 0; j < objects.size(); ++j) {
      std::size_t x = objects[j], r0 = offset(y2, j), c0 = offset(y, j);
      for (std::uint32_t f = 0; f < acting.rank(y, x); ++f)
        for (const auto& [g, c] : acting.compose(y2, y, x, f, a)) m.add_to(r0 + g, c0 + f, Scalar(static_cast<long>(c)));
    }
    return m;
  });
}

ModuleMap yoneda_map(const FreeSum& F, const CatModule& M, const std::vector<Matrix>& images) {
  require_same(F.acting, M.acting(), "Yoneda map between different categories");
  if (images.size() != F.objects.size()) throw Error(ErrorCode::InvalidInput, "one image per generator required");
  ModuleMap f{F.module(), M, {}};
  for (std::size_t y = 0; y < M.size(); ++y) {
    Matrix m(M.ring(), M.value(y).ngens(), F.rank_at(y));
    for (std::size_t j = 0; j < F.objects.size(); ++j) {
      std::size_t x = F.objects[j], c0 = F.offset(y, j);
      for (std::uint32_t k = 0; k < F.acting.rank(y, x); ++k) place(m, 0, c0 + k, M.act(y, x, k) * images[j]);
    }
    f.components.push_back(M.value(y).reduce(m));
  }
  return f;
}

// ---------------------------------------------------------------- free covers

namespace {

Matrix cover_image(const CatModule& M, std::size_t y, const std::vector<std::pair<std::size_t, Matrix>>& gens) {
  const auto& C = M.acting();
  std::size_t cols = 0;
  for (const auto& g : gens) cols += C.rank(y, g.first);
  Matrix m(M.ring(), M.value(y).ngens(), cols);
  std::size_t c0 = 0;
  for (const auto& [x, v] : gens)
    for (std::uint32_t k = 0; k < C.rank(y, x); ++k) place(m, 0, c0++, M.act(y, x, k) * v);
  return m;
}

bool surjective_at(const CatModule& M, std::size_t y, const std::vector<std::pair<std::size_t, Matrix>>& gens) {
  if (M.value(y).is_zero()) return true;
  return cokernel_of(cover_image(M, y, gens), M.value(y)).module().is_zero();
}

}  // namespace

FreeCover free_cover(const CatModule& M, std::uint64_t seed) {
  const auto& C = M.acting();
  const std::size_t n = M.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  if (seed) std::shuffle(order.begin(), order.end(), rng);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return C.priority(a) > C.priority(b); });

  std::vector<std::pair<std::size_t, Matrix>> gens;
  for (std::size_t y : order) {
    std::vector<std::size_t> cand(M.value(y).ngens());
    std::iota(cand.begin(), cand.end(), 0);
    if (seed) std::shuffle(cand.begin(), cand.end(), rng);
    for (std::size_t i : cand) {
      if (surjective_at(M, y, gens)) break;
      Matrix img = cover_image(M, y, gens).hcat(M.value(y).relations());
      Matrix e = unit_column(M.ring(), M.value(y).ngens(), i);
      if (img.cols() > 0 && solve(img, e)) continue;
      gens.push_back({y, e});
    }
    if (!surjective_at(M, y, gens)) throw Error(ErrorCode::InvalidInput, "free cover failed to become surjective");
  }
  for (std::size_t g = 0; g < gens.size();) {
    auto trial = gens;
    trial.erase(trial.begin() + static_cast<long>(g));
    bool ok = true;
    for (std::size_t y = 0; y < n && ok; ++y) ok = surjective_at(M, y, trial);
    if (ok)
      gens = std::move(trial);
    else
      ++g;
  }

  FreeCover fc;
  fc.free = FreeSum{C, M.ring(), {}};
  for (auto& [x, v] : gens) {
    fc.free.objects.push_back(x);
    fc.images.push_back(v);
  }
  fc.epi = yoneda_map(fc.free, M, fc.images);
  return fc;
}

// ---------------------------------------------------------------- complexes

Matrix FreeComplex::differential_at(std::size_t n, std::size_t y) const {
  if (n == 0 || n >= terms.size()) throw Error(ErrorCode::InvalidInput, "differential degree out of range");
  return yoneda_map(terms[n], terms[n - 1].module(), d[n]).components[y];
}

void FreeComplex::check_complex() const {
  for (std::size_t n = 2; n < terms.size(); ++n)
    for (std::size_t j = 0; j < terms[n].objects.size(); ++j)
      if (!(differential_at(n - 1, terms[n].objects[j]) * d[n][j]).is_zero())
        throw Error(ErrorCode::NotAComplex, "d∘d ≠ 0 at degree " + std::to_string(n));
}

CochainComplex FreeComplex::hom_complex(const CatModule& B) const {
  require_same(acting, B.acting(), "Hom complex over different categories");
  CochainComplex K;
  std::vector<std::vector<std::size_t>> off(terms.size());
  for (std::size_t n = 0; n < terms.size(); ++n) {
    std::vector<const FgModule*> parts;
    std::size_t o = 0;
    for (auto x : terms[n].objects) {
      parts.push_back(&B.value(x));
      off[n].push_back(o);
      o += B.value(x).ngens();
    }
    K.terms.push_back(concat(B.ring(), parts));
  }
  for (std::size_t n = 1; n < terms.size(); ++n) {
    Matrix m(B.ring(), K.terms[n].ngens(), K.terms[n - 1].ngens());
    for (std::size_t j = 0; j < terms[n].objects.size(); ++j) {
      std::size_t xj = terms[n].objects[j];
      for (std::size_t i = 0; i < terms[n - 1].objects.size(); ++i) {
        std::size_t xi = terms[n - 1].objects[i], base = terms[n - 1].offset(xj, i);
        for (std::uint32_t f = 0; f < acting.rank(xj, xi); ++f) {
          const Scalar& c = d[n][j](base + f, 0);
          if (sgn(c) != 0) place(m, off[n][j], off[n - 1][i], B.act(xj, xi, f), c);
        }
      }
    }
    K.maps.push_back(K.terms[n].reduce(m));
  }
  return K;
}

CochainComplex FreeComplex::tensor_complex(const CatModule& N) const {
  require_same(acting.opposite(), N.acting(), "tensor complex needs a module over the opposite category");
  const std::size_t m = terms.size();
  std::vector<FgModule> S;
  std::vector<std::vector<std::size_t>> off(m);
  for (std::size_t n = 0; n < m; ++n) {
    std::vector<const FgModule*> parts;
    std::size_t o = 0;
    for (auto x : terms[n].objects) {
      parts.push_back(&N.value(x));
      off[n].push_back(o);
      o += N.value(x).ngens();
    }
    S.push_back(concat(N.ring(), parts));
  }
  std::vector<Matrix> del(m);
  for (std::size_t n = 1; n < m; ++n) {
    Matrix mat(N.ring(), S[n - 1].ngens(), S[n].ngens());
    for (std::size_t j = 0; j < terms[n].objects.size(); ++j) {
      std::size_t xj = terms[n].objects[j];
      for (std::size_t i = 0; i < terms[n - 1].objects.size(); ++i) {
        std::size_t xi = terms[n - 1].objects[i], base = terms[n - 1].offset(xj, i);
        for (std::uint32_t f = 0; f < acting.rank(xj, xi); ++f) {
          const Scalar& c = d[n][j](base + f, 0);
          if (sgn(c) != 0) place(mat, off[n - 1][i], off[n][j], N.act(xi, xj, f), c);
        }
      }
    }
    del[n] = S[n - 1].reduce(mat);
  }
  CochainComplex K;
  for (std::size_t k = 0; k < m; ++k) K.terms.push_back(S[m - 1 - k]);
  for (std::size_t k = 0; k + 1 < m; ++k) K.maps.push_back(del[m - 1 - k]);
  return K;
}

// ---------------------------------------------------------------- resolutions

bool FreeResolution::is_exact() const {
  const auto& C = complex.acting;
  const std::size_t m = complex.terms.size();
  try {
    complex.check_complex();
  } catch (const Error&) {
    return false;
  }
  for (std::size_t y = 0; y < C.size(); ++y) {
    if (m == 0) {
      if (!target.value(y).is_zero()) return false;
      continue;
    }
    Matrix eps = yoneda_map(complex.terms[0], target, augmentation).components[y];
    if (!target.value(y).is_zero() && !cokernel_of(eps, target.value(y)).module().is_zero()) return false;
    try {
      for (std::size_t n = 0; n < m; ++n) {
        Matrix Z = n == 0 ? kernel_mod(eps, target.value(y)) : kernel_basis(complex.differential_at(n, y));
        if (n + 1 < m) {
          if (!Subquotient(Z, complex.differential_at(n + 1, y)).module().is_zero()) return false;
        } else if (finite && Z.cols() > 0 && rank(Z) > 0) {
          return false;
        }
      }
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

FreeResolution resolve(const CatModule& A, std::size_t degree, std::uint64_t seed) {
  FreeResolution R;
  R.target = A;
  R.complex.acting = A.acting();
  R.complex.ring = A.ring();
  CatModule current = A;
  for (std::size_t n = 0; n <= degree; ++n) {
    if (current.is_zero()) {
      R.finite = true;
      break;
    }
    FreeCover fc = free_cover(current, seed ? seed + n : 0);
    std::vector<Matrix> amb;
    for (std::size_t j = 0; j < fc.images.size(); ++j)
      amb.push_back(n == 0 ? fc.images[j]
                           : current.subquotient(fc.free.objects[j])->representatives() * fc.images[j]);
    R.complex.terms.push_back(fc.free);
    if (n == 0) {
      R.augmentation = amb;
      R.complex.d.push_back({});
    } else {
      R.complex.d.push_back(amb);
    }
    CatModule P = fc.free.module();
    std::vector<Subquotient> sqs;
    for (std::size_t y = 0; y < P.size(); ++y)
      sqs.push_back(kernel_of(fc.epi.components[y], P.value(y), current.value(y)));
    current = CatModule::from_subquotients(A.acting(), A.ring(), sqs,
                                           [&P](std::size_t x, std::size_t y, std::uint32_t k) { return P.act(x, y, k); });
    R.kernels.push_back(current);
  }
  if (current.is_zero()) R.finite = true;
  return R;
}

std::vector<AbelianInvariants> ext_from_resolution(const FreeResolution& P, const CatModule& B, std::size_t degree) {
  require_ring(P.complex.ring, B.ring());
  if (!P.finite && P.length() < degree + 2)
    throw Error(ErrorCode::InvalidInput, "resolution too short for the requested degree");
  CochainComplex K = P.complex.hom_complex(B);
  std::vector<AbelianInvariants> out;
  for (std::size_t k = 0; k <= degree; ++k) {
    if (k < K.terms.size()) {
      out.push_back(cohomology_at(K, k));
    } else {
      AbelianInvariants z;
      z.ring = B.ring();
      out.push_back(z);
    }
  }
  return out;
}

std::vector<AbelianInvariants> ext(const CatModule& A, const CatModule& B, std::size_t degree, std::uint64_t seed) {
  require_same(A.acting(), B.acting(), "Ext between modules over different categories");
  require_ring(A.ring(), B.ring());
  return ext_from_resolution(resolve(A, degree + 1, seed), B, degree);
}

std::vector<AbelianInvariants> tor(const CatModule& N, const CatModule& A, std::size_t degree, std::uint64_t seed) {
  require_ring(N.ring(), A.ring());
  FreeResolution P = resolve(A, degree + 1, seed);
  CochainComplex K = P.complex.tensor_complex(N);
  const std::size_t m = K.terms.size();
  std::vector<AbelianInvariants> out;
  for (std::size_t k = 0; k <= degree; ++k) {
    if (k < m) {
      out.push_back(cohomology_at(K, m - 1 - k));
    } else {
      AbelianInvariants z;
      z.ring = A.ring();
      out.push_back(z);
    }
  }
  return out;
}

// ---------------------------------------------------------------- Hom and ⊗

HomGroup hom_group(const CatModule& A, const CatModule& B) {
  require_same(A.acting(), B.acting(), "Hom between modules over different categories");
  require_ring(A.ring(), B.ring());
  const auto& C = A.acting();
  const Ring& ring = A.ring();
  HomGroup H{A, B, {}, {}, {}};
  std::size_t total = 0;
  H.block = hom_layout(A, [&](std::size_t x) { return B.value(x).ngens(); }, total);
  {
    std::vector<mpz_class> orders;
    for (std::size_t x = 0; x < A.size(); ++x)
      for (std::size_t i = 0; i < A.value(x).ngens(); ++i)
        orders.insert(orders.end(), B.value(x).orders().begin(), B.value(x).orders().end());
    H.ambient = FgModule(ring, orders);
  }

  std::vector<Matrix> rows;
  std::vector<mpz_class> target_orders;
  auto add_rows = [&](std::size_t x, const Matrix& m) {
    rows.push_back(m);
    target_orders.insert(target_orders.end(), B.value(x).orders().begin(), B.value(x).orders().end());
  };
  for (std::size_t x = 0; x < A.size(); ++x) {
    const std::size_t nb = B.value(x).ngens();
    if (nb == 0) continue;
    for (std::size_t i = 0; i < A.value(x).ngens(); ++i) {
      const mpz_class& o = A.value(x).orders()[i];
      if (o == 0) continue;
      Matrix m(ring, nb, total);
      place(m, 0, H.block[x][i], Matrix::identity(ring, nb), Scalar(o));
      add_rows(x, m);
    }
    for (std::size_t y = 0; y < A.size(); ++y)
      for (std::uint32_t a = 0; a < C.rank(x, y); ++a) {
        const Matrix& Aa = A.act(x, y, a);
        const Matrix& Ba = B.act(x, y, a);
        for (std::size_t j = 0; j < A.value(y).ngens(); ++j) {
          Matrix m(ring, nb, total);
          for (std::size_t i = 0; i < A.value(x).ngens(); ++i)
            if (sgn(Aa(i, j)) != 0) place(m, 0, H.block[x][i], Matrix::identity(ring, nb), Aa(i, j));
          if (B.value(y).ngens() > 0) place(m, 0, H.block[y][j], Ba, -1);
          add_rows(x, m);
        }
      }
  }
  Matrix rel = H.ambient.relations();
  if (rows.empty()) {
    H.sq = Subquotient(Matrix::identity(ring, total).hcat(rel), rel);
  } else {
    Matrix cons = rows[0];
    for (std::size_t r = 1; r < rows.size(); ++r) cons = cons.vcat(rows[r]);
    H.sq = kernel_of(cons, H.ambient, FgModule(ring, target_orders));
  }
  return H;
}

ModuleMap HomGroup::to_map(const Matrix& v) const {
  ModuleMap f{source, target, {}};
  for (std::size_t x = 0; x < source.size(); ++x) {
    const std::size_t nb = target.value(x).ngens();
    Matrix m(source.ring(), nb, source.value(x).ngens());
    for (std::size_t i = 0; i < source.value(x).ngens(); ++i)
      for (std::size_t r = 0; r < nb; ++r) m.set(r, i, v(block[x][i] + r, 0));
    f.components.push_back(target.value(x).reduce(m));
  }
  return f;
}

Matrix HomGroup::to_ambient(const ModuleMap& f) const {
  Matrix v(source.ring(), ambient.ngens(), 1);
  for (std::size_t x = 0; x < source.size(); ++x)
    for (std::size_t i = 0; i < source.value(x).ngens(); ++i)
      for (std::size_t r = 0; r < target.value(x).ngens(); ++r) v.set(block[x][i] + r, 0, f.components[x](r, i));
  return v;
}

ModuleMap HomGroup::generator(std::size_t g) const { return to_map(sq.representatives().col(g)); }

TensorProduct tensor(const CatModule& N, const CatModule& A) {
  require_same(N.acting(), A.acting().opposite(), "tensor needs modules over opposite categories");
  require_ring(N.ring(), A.ring());
  const auto& C = A.acting();
  const Ring& ring = A.ring();
  TensorProduct T{N, A, {}, {}};
  std::size_t total = 0;
  T.index.resize(C.size());
  for (std::size_t x = 0; x < C.size(); ++x) {
    T.index[x].resize(N.value(x).ngens());
    for (std::size_t i = 0; i < N.value(x).ngens(); ++i)
      for (std::size_t j = 0; j < A.value(x).ngens(); ++j) T.index[x][i].push_back(total++);
  }
  std::vector<Matrix> cols;
  for (std::size_t x = 0; x < C.size(); ++x) {
    const auto& on = N.value(x).orders();
    const auto& oa = A.value(x).orders();
    for (std::size_t i = 0; i < on.size(); ++i)
      for (std::size_t j = 0; j < oa.size(); ++j) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), on[i].get_mpz_t(), oa[j].get_mpz_t());
        if (g == 0) continue;
        Matrix c(ring, total, 1);
        c.set(T.index[x][i][j], 0, Scalar(g));
        cols.push_back(c);
      }
    for (std::size_t y = 0; y < C.size(); ++y)
      for (std::uint32_t a = 0; a < C.rank(x, y); ++a) {
        const Matrix& Na = N.act(y, x, a);  // N(x) → N(y)
        const Matrix& Aa = A.act(x, y, a);  // A(y) → A(x)
        for (std::size_t i = 0; i < on.size(); ++i)
          for (std::size_t j = 0; j < A.value(y).ngens(); ++j) {
            Matrix c(ring, total, 1);
            for (std::size_t p = 0; p < N.value(y).ngens(); ++p)
              if (sgn(Na(p, i)) != 0) c.add_to(T.index[y][p][j], 0, Na(p, i));
            for (std::size_t q = 0; q < oa.size(); ++q)
              if (sgn(Aa(q, j)) != 0) c.add_to(T.index[x][i][q], 0, -Aa(q, j));
            if (!c.is_zero()) cols.push_back(c);
          }
      }
  }
  Matrix B(ring, total, 0);
  for (const auto& c : cols) B = B.hcat(c);
  T.sq = Subquotient(Matrix::identity(ring, total), B);
  return T;
}

// ---------------------------------------------------------------- change of category

CatModule restrict_module(const CatModule& A, const AbFunctor& iota) {
  require_same(A.acting(), iota.target(), "restriction along a functor into another category");
  std::vector<FgModule> values;
  for (std::size_t c = 0; c < iota.source().size(); ++c) values.push_back(A.value(iota.object(c)));
  return CatModule(iota.source(), A.ring(), values, [&](std::size_t x, std::size_t y, std::uint32_t k) {
    return A.act(iota.object(x), iota.object(y), iota.image(x, y, k));
  });
}

ModuleMap restrict_map(const ModuleMap& f, const AbFunctor& iota) {
  ModuleMap g{restrict_module(f.source, iota), restrict_module(f.target, iota), {}};
  for (std::size_t c = 0; c < iota.source().size(); ++c) g.components.push_back(f.components[iota.object(c)]);
  return g;
}

CatModule induce(const CatModule& A, const AbFunctor& iota) {
  require_same(A.acting(), iota.source(), "induction along a functor from another category");
  const auto& C = iota.source();
  const auto& D = iota.target();
  const Ring& ring = A.ring();
  IndLayout L = ind_layout(A, iota);
  std::vector<Subquotient> sqs;
  for (std::size_t d = 0; d < D.size(); ++d) {
    const std::size_t total = L.total[d];
    std::vector<Matrix> cols;
    for (std::size_t c = 0; c < C.size(); ++c) {
      const std::size_t ic = iota.object(c);
      for (std::size_t i = 0; i < A.value(c).ngens(); ++i) {
        const mpz_class& o = A.value(c).orders()[i];
        if (o == 0) continue;
        for (std::uint32_t f = 0; f < D.rank(d, ic); ++f) {
          Matrix col(ring, total, 1);
          col.set(L.base[d][c][i] + f, 0, Scalar(o));
          cols.push_back(col);
        }
      }
      for (std::size_t c2 = 0; c2 < C.size(); ++c2) {
        const std::size_t ic2 = iota.object(c2);
        for (std::uint32_t a = 0; a < C.rank(c, c2); ++a) {
          const Matrix& Aa = A.act(c, c2, a);
          const SparseVec& ia = iota.image(c, c2, a);
          for (std::uint32_t f = 0; f < D.rank(d, ic); ++f) {
            SparseVec moved = D.compose(d, ic, ic2, ia, SparseVec{{f, 1}});
            for (std::size_t j = 0; j < A.value(c2).ngens(); ++j) {
              Matrix col(ring, total, 1);
              for (const auto& [g, k] : moved) col.add_to(L.base[d][c2][j] + g, 0, Scalar(static_cast<long>(k)));
              for (std::size_t i = 0; i < A.value(c).ngens(); ++i)
                if (sgn(Aa(i, j)) != 0) col.add_to(L.base[d][c][i] + f, 0, -Aa(i, j));
              if (!col.is_zero()) cols.push_back(col);
            }
          }
        }
      }
    }
    Matrix B(ring, total, 0);
    for (const auto& c : cols) B = B.hcat(c);
    sqs.push_back(Subquotient(Matrix::identity(ring, total), B));
  }
  return CatModule::from_subquotients(D, ring, sqs, [&](std::size_t d2, std::size_t d, std::uint32_t g) {
    Matrix m(ring, L.total[d2], L.total[d]);
    for (std::size_t c = 0; c < C.size(); ++c) {
      const std::size_t ic = iota.object(c);
      for (std::size_t i = 0; i < A.value(c).ngens(); ++i)
        for (std::uint32_t f = 0; f < D.rank(d, ic); ++f)
          for (const auto& [h, k] : D.compose(d2, d, ic, f, g))
            m.add_to(L.base[d2][c][i] + h, L.base[d][c][i] + f, Scalar(static_cast<long>(k)));
    }
    return m;
  });
}

ModuleMap induce_map(const ModuleMap& f, const AbFunctor& iota, const CatModule& IndA, const CatModule& IndB) {
  const auto& D = iota.target();
  IndLayout LA = ind_layout(f.source, iota), LB = ind_layout(f.target, iota);
  ModuleMap g{IndA, IndB, {}};
  for (std::size_t d = 0; d < D.size(); ++d) {
    Matrix m(f.source.ring(), LB.total[d], LA.total[d]);
    for (std::size_t c = 0; c < f.source.size(); ++c) {
      const Matrix& fc = f.components[c];
      for (std::size_t i = 0; i < f.source.value(c).ngens(); ++i)
        for (std::size_t p = 0; p < f.target.value(c).ngens(); ++p) {
          if (sgn(fc(p, i)) == 0) continue;
          for (std::uint32_t h = 0; h < D.rank(d, iota.object(c)); ++h)
            m.add_to(LB.base[d][c][p] + h, LA.base[d][c][i] + h, fc(p, i));
        }
    }
    g.components.push_back(IndB.subquotient(d)->coords(m * IndA.subquotient(d)->representatives()));
  }
  return g;
}

CatModule coinduce(const CatModule& A, const AbFunctor& iota) {
  require_same(A.acting(), iota.source(), "coinduction along a functor from another category");
  const auto& C = iota.source();
  const auto& D = iota.target();
  const Ring& ring = A.ring();
  std::vector<HomGroup> homs;
  for (std::size_t d = 0; d < D.size(); ++d)
    homs.push_back(hom_group(restrict_module(representable(D, d, ring), iota), A));
  std::vector<Subquotient> sqs;
  for (const auto& h : homs) sqs.push_back(h.sq);
  return CatModule::from_subquotients(D, ring, sqs, [&](std::size_t d2, std::size_t d, std::uint32_t g) {
    Matrix m(ring, homs[d2].ambient.ngens(), homs[d].ambient.ngens());
    for (std::size_t c = 0; c < C.size(); ++c) {
      const std::size_t ic = iota.object(c), na = A.value(c).ngens();
      for (std::uint32_t f2 = 0; f2 < D.rank(ic, d2); ++f2)
        for (const auto& [f, k] : D.compose(ic, d2, d, g, f2))
          place(m, homs[d2].block[c][f2], homs[d].block[c][f], Matrix::identity(ring, na), Scalar(static_cast<long>(k)));
    }
    return m;
  });
}

ModuleMap induction_unit(const CatModule& A, const AbFunctor& iota, const CatModule& IndA) {
  const auto& D = iota.target();
  IndLayout L = ind_layout(A, iota);
  ModuleMap u{A, restrict_module(IndA, iota), {}};
  for (std::size_t c = 0; c < A.size(); ++c) {
    const std::size_t ic = iota.object(c);
    Matrix m(A.ring(), L.total[ic], A.value(c).ngens());
    for (std::size_t i = 0; i < A.value(c).ngens(); ++i) m.set(L.base[ic][c][i] + D.identity(ic), i, 1);
    u.components.push_back(IndA.subquotient(ic)->coords(m));
  }
  return u;
}

ModuleMap induction_counit(const CatModule& B, const AbFunctor& iota, const CatModule& IndResB) {
  const auto& D = iota.target();
  CatModule ResB = restrict_module(B, iota);
  IndLayout L = ind_layout(ResB, iota);
  ModuleMap e{IndResB, B, {}};
  for (std::size_t d = 0; d < D.size(); ++d) {
    Matrix m(B.ring(), B.value(d).ngens(), L.total[d]);
    for (std::size_t c = 0; c < ResB.size(); ++c) {
      const std::size_t ic = iota.object(c);
      for (std::size_t i = 0; i < ResB.value(c).ngens(); ++i)
        for (std::uint32_t f = 0; f < D.rank(d, ic); ++f) place(m, 0, L.base[d][c][i] + f, B.act(d, ic, f).col(i));
    }
    e.components.push_back(B.value(d).reduce(m * IndResB.subquotient(d)->representatives()));
  }
  return e;
}

ModuleMap induction_adjoint(const ModuleMap& phi, const AbFunctor& iota, const CatModule& B) {
  CatModule IndA = induce(phi.source, iota);
  CatModule IndResB = induce(phi.target, iota);
  return induce_map(phi, iota, IndA, IndResB).then(induction_counit(B, iota, IndResB));
}

// ---------------------------------------------------------------- duality

CatModule dual(const CatModule& M) {
  const auto& C = M.acting();
  const Ring& ring = M.ring();
  std::vector<HomGroup> homs;
  for (std::size_t x = 0; x < C.size(); ++x) homs.push_back(hom_group(M, representable(C, x, ring)));
  std::vector<Subquotient> sqs;
  for (const auto& h : homs) sqs.push_back(h.sq);
  // For k ∈ hom_C(y,x): θ ↦ R[−,k] ∘ θ, from M^D(y) to M^D(x).
  return CatModule::from_subquotients(C.opposite(), ring, sqs, [&](std::size_t x, std::size_t y, std::uint32_t k) {
    Matrix m(ring, homs[x].ambient.ngens(), homs[y].ambient.ngens());
    for (std::size_t c = 0; c < C.size(); ++c)
      for (std::size_t i = 0; i < M.value(c).ngens(); ++i)
        for (std::uint32_t g = 0; g < C.rank(c, y); ++g)
          for (const auto& [h, v] : C.compose(c, y, x, k, g))
            m.add_to(homs[x].block[c][i] + h, homs[y].block[c][i] + g, Scalar(static_cast<long>(v)));
    return m;
  });
}

ModuleMap double_dual_map(const CatModule& M, const CatModule& MD, const CatModule& MDD) {
  const auto& C = M.acting();
  ModuleMap z{M, MDD, {}};
  for (std::size_t x = 0; x < C.size(); ++x) {
    std::size_t total = 0;
    auto outer = hom_layout(MD, [&](std::size_t y) { return C.rank(x, y); }, total);
    std::size_t inner_total = 0;
    Matrix m(M.ring(), total, M.value(x).ngens());
    for (std::size_t y = 0; y < C.size(); ++y) {
      auto inner = hom_layout(M, [&](std::size_t c) { return C.rank(c, y); }, inner_total);
      const Matrix& reps = MD.subquotient(y)->representatives();
      for (std::size_t g = 0; g < MD.value(y).ngens(); ++g)
        for (std::size_t i = 0; i < M.value(x).ngens(); ++i)
          for (std::uint32_t f = 0; f < C.rank(x, y); ++f) m.set(outer[y][g] + f, i, reps(inner[x][i] + f, g));
    }
    z.components.push_back(MDD.subquotient(x)->coords(m));
  }
  return z;
}

Matrix nu(const CatModule& N, const CatModule& M, const CatModule& MD, const TensorProduct& T, const HomGroup& H) {
  const auto& C = M.acting();
  const Ring& ring = M.ring();
  Matrix V(ring, H.ambient.ngens(), T.sq.ambient());
  for (std::size_t c = 0; c < C.size(); ++c) {
    std::size_t inner_total = 0;
    auto inner = hom_layout(M, [&](std::size_t y) { return C.rank(y, c); }, inner_total);
    const Matrix& reps = MD.subquotient(c)->representatives();
    for (std::size_t i = 0; i < MD.value(c).ngens(); ++i)
      for (std::size_t j = 0; j < N.value(c).ngens(); ++j) {
        std::size_t col = T.index[c][i][j];
        for (std::size_t y = 0; y < C.size(); ++y)
          for (std::size_t p = 0; p < M.value(y).ngens(); ++p)
            for (std::uint32_t f = 0; f < C.rank(y, c); ++f) {
              const Scalar& coeff = reps(inner[y][p] + f, i);
              if (sgn(coeff) == 0) continue;
              Matrix img = N.act(y, c, f).col(j);
              for (std::size_t r = 0; r < img.rows(); ++r) V.add_to(H.block[y][p] + r, col, coeff * img(r, 0));
            }
      }
  }
  return H.sq.coords(V * T.sq.representatives());
}

// ---------------------------------------------------------------- dimension

bool is_projective(const CatModule& A) {
  if (A.is_zero()) return true;
  FreeCover fc = free_cover(A);
  CatModule P = fc.free.module();
  HomGroup H = hom_group(A, P);
  const Ring& ring = A.ring();
  const std::size_t ng = H.module().ngens();
  std::size_t rows = 0;
  for (std::size_t x = 0; x < A.size(); ++x) rows += A.value(x).ngens() * A.value(x).ngens();
  std::size_t slack = 0;
  for (std::size_t x = 0; x < A.size(); ++x) slack += A.value(x).ngens() * A.value(x).relations().cols();
  Matrix sys(ring, rows, ng + slack), rhs(ring, rows, 1);
  const Matrix& reps = H.sq.representatives();
  std::size_t r0 = 0, s0 = ng;
  for (std::size_t x = 0; x < A.size(); ++x) {
    const std::size_t na = A.value(x).ngens(), np = P.value(x).ngens();
    Matrix rel = A.value(x).relations();
    for (std::size_t i = 0; i < na; ++i) {
      for (std::size_t g = 0; g < ng; ++g) {
        Matrix s(ring, np, 1);
        for (std::size_t r = 0; r < np; ++r) s.set(r, 0, reps(H.block[x][i] + r, g));
        place(sys, r0, g, fc.epi.components[x] * s);
      }
      place(sys, r0, s0, rel);
      s0 += rel.cols();
      rhs.set(r0 + i, 0, 1);
      r0 += na;
    }
  }
  return solve(sys, rhs).has_value();
}

std::string projective_dimension_up_to(const CatModule& A, std::size_t d) {
  if (is_projective(A)) return "0";
  if (d == 0) return ">0";
  FreeResolution R = resolve(A, d - 1);
  for (std::size_t n = 0; n < R.kernels.size() && n + 1 <= d; ++n)
    if (is_projective(R.kernels[n])) return std::to_string(n + 1);
  return ">" + std::to_string(d);
}

CatModule base_change(const CatModule& A, const Ring& target) {
  if (A.ring() == target) return A;
  if (A.ring() != Ring::integers() || target == Ring::integers())
    throw Error(ErrorCode::RingMismatch, "base change " + A.ring().name() + " → " + target.name() + " unsupported");
  std::vector<std::vector<std::size_t>> keep(A.size());
  std::vector<FgModule> values;
  for (std::size_t x = 0; x < A.size(); ++x) {
    const auto& o = A.value(x).orders();
    for (std::size_t i = 0; i < o.size(); ++i) {
      bool survives = o[i] == 0;
      if (!survives && target.kind() == Ring::Kind::PrimeField) survives = mpz_divisible_ui_p(o[i].get_mpz_t(), target.characteristic());
      if (survives) keep[x].push_back(i);
    }
    values.push_back(FgModule::free(target, keep[x].size()));
  }
  return CatModule(A.acting(), target, values, [&](std::size_t x, std::size_t y, std::uint32_t k) {
    return A.act(x, y, k).select_rows(keep[x]).select_cols(keep[y]).with_ring(target);
  });
}

}  // namespace eqalg
