#include "eqalg/category.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <thread>

#include "eqalg/error.hpp"

namespace eqalg {

void sparse_add(SparseVec& acc, const SparseVec& v, std::int64_t scale) {
  if (scale == 0 || v.empty()) return;
  SparseVec out;
  out.reserve(acc.size() + v.size());
  std::size_t i = 0, j = 0;
  while (i < acc.size() || j < v.size()) {
    if (j == v.size() || (i < acc.size() && acc[i].first < v[j].first)) {
      out.push_back(acc[i++]);
    } else if (i == acc.size() || v[j].first < acc[i].first) {
      out.push_back({v[j].first, v[j].second * scale});
      ++j;
    } else {
      std::int64_t c = acc[i].second + v[j].second * scale;
      if (c != 0) out.push_back({acc[i].first, c});
      ++i, ++j;
    }
  }
  acc = std::move(out);
}

SparseVec sparse_normalize(std::vector<std::pair<std::uint32_t, std::int64_t>> terms) {
  std::sort(terms.begin(), terms.end());
  SparseVec out;
  for (const auto& [k, c] : terms) {
    if (!out.empty() && out.back().first == k)
      out.back().second += c;
    else
      out.push_back({k, c});
    if (out.back().second == 0) out.pop_back();
  }
  return out;
}

unsigned thread_count() {
  const char* env = std::getenv("EQALG_THREADS");
  if (!env) return 1;
  long v = std::strtol(env, nullptr, 10);
  return v < 1 ? 1u : static_cast<unsigned>(std::min<long>(v, 256));
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  unsigned t = std::min<std::size_t>(thread_count(), n);
  if (t <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(t);
  for (unsigned w = 0; w < t; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += t) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// ---------------------------------------------------------------- FinAbCategory

FinAbCategory FinAbCategory::build(const CategorySpec& spec) {
  auto data = std::make_shared<Data>();
  data->spec = spec;
  const std::size_t n = spec.objects.size();
  data->rank.assign(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) data->rank[x][y] = spec.basis_labels[x][y].size();
  data->table.resize(n * n * n);
  parallel_for(n * n * n, [&](std::size_t t) {
    std::size_t x = t / (n * n), y = (t / n) % n, z = t % n;
    std::size_t rxy = data->rank[x][y], ryz = data->rank[y][z];
    auto& cell = data->table[t];
    cell.resize(rxy * ryz);
    for (std::uint32_t b = 0; b < ryz; ++b)
      for (std::uint32_t a = 0; a < rxy; ++a) cell[b * rxy + a] = spec.compose(x, y, z, b, a);
  });
  data->spec.compose = nullptr;
  FinAbCategory C;
  C.data_ = data;
  return C;
}

std::size_t FinAbCategory::size() const { return data_->spec.objects.size(); }

std::size_t FinAbCategory::rank(std::size_t x, std::size_t y) const {
  return op_ ? data_->rank[y][x] : data_->rank[x][y];
}

const SparseVec& FinAbCategory::compose(std::size_t x, std::size_t y, std::size_t z, std::uint32_t b,
                                        std::uint32_t a) const {
  const std::size_t n = size();
  if (!op_) return data_->table[(x * n + y) * n + z][b * data_->rank[x][y] + a];
  // b ∘op a = a ∘ b in the underlying category, with b: z→y and a: y→x.
  return data_->table[(z * n + y) * n + x][a * data_->rank[z][y] + b];
}

SparseVec FinAbCategory::compose(std::size_t x, std::size_t y, std::size_t z, const SparseVec& b,
                                 const SparseVec& a) const {
  SparseVec out;
  for (const auto& [kb, cb] : b)
    for (const auto& [ka, ca] : a) sparse_add(out, compose(x, y, z, kb, ka), cb * ca);
  return out;
}

std::uint32_t FinAbCategory::identity(std::size_t x) const { return data_->spec.identity[x]; }

FinAbCategory FinAbCategory::opposite() const {
  FinAbCategory C(*this);
  C.op_ = !op_;
  return C;
}

const std::string& FinAbCategory::kind() const { return data_->spec.kind; }
const LatticePtr& FinAbCategory::lattice() const { return data_->spec.lattice; }
const ObjectInfo& FinAbCategory::object(std::size_t x) const { return data_->spec.objects[x]; }

long FinAbCategory::priority(std::size_t x) const {
  long p = static_cast<long>(data_->spec.objects[x].subgroup_order);
  return op_ ? -p : p;
}

std::string FinAbCategory::basis_label(std::size_t x, std::size_t y, std::uint32_t k) const {
  return op_ ? data_->spec.basis_labels[y][x][k] : data_->spec.basis_labels[x][y][k];
}

std::size_t FinAbCategory::count_law_violations() const {
  const std::size_t n = size();
  std::size_t bad = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::uint32_t a = 0; a < rank(x, y); ++a) {
        SparseVec self{{a, 1}};
        if (compose(x, y, y, identity(y), a) != self) ++bad;
        if (compose(x, x, y, a, identity(x)) != self) ++bad;
        for (std::size_t z = 0; z < n; ++z)
          for (std::uint32_t b = 0; b < rank(y, z); ++b)
            for (std::size_t w = 0; w < n; ++w)
              for (std::uint32_t c = 0; c < rank(z, w); ++c) {
                SparseVec left = compose(x, z, w, SparseVec{{c, 1}}, compose(x, y, z, b, a));
                SparseVec right = compose(x, y, w, compose(y, z, w, c, b), SparseVec{{a, 1}});
                if (left != right) ++bad;
              }
      }
  return bad;
}

// ---------------------------------------------------------------- AbFunctor

AbFunctor::AbFunctor(FinAbCategory source, FinAbCategory target, std::vector<std::size_t> object_map,
                     const ImageFn& image)
    : source_(std::move(source)), target_(std::move(target)), object_map_(std::move(object_map)) {
  const std::size_t n = source_.size();
  if (object_map_.size() != n) throw Error(ErrorCode::ObjectMismatch, "functor object map has wrong size");
  for (auto o : object_map_)
    if (o >= target_.size()) throw Error(ErrorCode::ObjectMismatch, "functor object out of range");
  images_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::uint32_t k = 0; k < source_.rank(x, y); ++k) {
        SparseVec v = image(x, y, k);
        for (const auto& [idx, c] : v)
          if (idx >= target_.rank(object_map_[x], object_map_[y]))
            throw Error(ErrorCode::FunctorNotAdditive, "functor image index out of range");
        images_[x * n + y].push_back(std::move(v));
      }
}

const SparseVec& AbFunctor::image(std::size_t x, std::size_t y, std::uint32_t k) const {
  return images_[x * source_.size() + y][k];
}

SparseVec AbFunctor::image(std::size_t x, std::size_t y, const SparseVec& v) const {
  SparseVec out;
  for (const auto& [k, c] : v) sparse_add(out, image(x, y, k), c);
  return out;
}

void AbFunctor::verify() const {
  const std::size_t n = source_.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (image(x, x, source_.identity(x)) != SparseVec{{target_.identity(object(x)), 1}})
      throw Error(ErrorCode::FunctorNotAdditive, "identity of object " + std::to_string(x) + " not preserved");
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::uint32_t a = 0; a < source_.rank(x, y); ++a)
          for (std::uint32_t b = 0; b < source_.rank(y, z); ++b) {
            SparseVec lhs = image(x, z, source_.compose(x, y, z, b, a));
            SparseVec rhs = target_.compose(object(x), object(y), object(z), image(y, z, b), image(x, y, a));
            if (lhs != rhs)
              throw Error(ErrorCode::FunctorNotAdditive,
                          "composite not preserved for objects " + std::to_string(x) + "," + std::to_string(y) +
                              "," + std::to_string(z));
          }
  }
}

AbFunctor AbFunctor::opposite() const {
  return AbFunctor(source_.opposite(), target_.opposite(), object_map_,
                   [this](std::size_t x, std::size_t y, std::uint32_t k) { return image(y, x, k); });
}

AbFunctor AbFunctor::then(const AbFunctor& next) const {
  if (!target_.same_as(next.source_)) throw Error(ErrorCode::ObjectMismatch, "functors are not composable");
  std::vector<std::size_t> obj(object_map_.size());
  for (std::size_t x = 0; x < obj.size(); ++x) obj[x] = next.object(object(x));
  return AbFunctor(source_, next.target_, obj, [&](std::size_t x, std::size_t y, std::uint32_t k) {
    return next.image(object(x), object(y), image(x, y, k));
  });
}

FinAbCategory endomorphism_category(const FinAbCategory& C, std::size_t x) {
  CategorySpec spec;
  spec.kind = "End(" + C.kind() + ")";
  spec.lattice = C.lattice();
  spec.objects = {C.object(x)};
  std::vector<std::string> labels;
  for (std::uint32_t k = 0; k < C.rank(x, x); ++k) labels.push_back(C.basis_label(x, x, k));
  spec.basis_labels = {{labels}};
  spec.identity = {C.identity(x)};
  spec.compose = [C, x](std::size_t, std::size_t, std::size_t, std::uint32_t b, std::uint32_t a) {
    return C.compose(x, x, x, b, a);
  };
  return FinAbCategory::build(spec);
}

AbFunctor endomorphism_inclusion(const FinAbCategory& End, const FinAbCategory& C, std::size_t x) {
  return AbFunctor(End, C, {x}, [](std::size_t, std::size_t, std::uint32_t k) { return SparseVec{{k, 1}}; });
}

}  // namespace eqalg
