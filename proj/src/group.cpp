#include "eqalg/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "eqalg/error.hpp"
#include "json.hpp"

namespace eqalg {

namespace {

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

Perm pad(Perm p, std::size_t degree) {
  for (std::size_t i = p.size(); i < degree; ++i) p.push_back(static_cast<std::uint32_t>(i));
  return p;
}

}  // namespace

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) r[x] = a[b[x]];
  return r;
}

Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[a[x]] = static_cast<std::uint32_t>(x);
  return r;
}

Perm perm_identity(std::size_t degree) {
  Perm r(degree);
  std::iota(r.begin(), r.end(), 0u);
  return r;
}

bool perm_is_valid(const Perm& a) {
  std::vector<bool> seen(a.size(), false);
  for (auto x : a) {
    if (x >= a.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Perm parse_cycles(const std::string& text, std::size_t degree) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  std::string s = trim(text);
  if (s.empty() || s == "()" || s == "id" || s == "e") return perm_identity(std::max<std::size_t>(degree, 1));
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    if (s[i] != '(') throw Error(ErrorCode::InvalidInput, "bad cycle notation: " + text);
    auto close = s.find(')', i);
    if (close == std::string::npos) throw Error(ErrorCode::InvalidInput, "unbalanced cycle notation: " + text);
    std::string body = s.substr(i + 1, close - i - 1);
    std::vector<std::uint32_t> cyc;
    bool separated = body.find_first_of(" ,") != std::string::npos;
    if (separated) {
      std::string tok;
      for (char& c : body)
        if (c == ',') c = ' ';
      std::istringstream in2(body);
      while (in2 >> tok) {
        if (!std::all_of(tok.begin(), tok.end(), ::isdigit))
          throw Error(ErrorCode::InvalidInput, "bad point in cycle: " + tok);
        cyc.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
      }
    } else {
      for (char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw Error(ErrorCode::InvalidInput, "bad point in cycle: " + body);
        cyc.push_back(static_cast<std::uint32_t>(c - '0'));
      }
    }
    cycles.push_back(cyc);
    i = close + 1;
  }
  std::size_t n = degree;
  for (const auto& c : cycles)
    for (auto x : c) n = std::max<std::size_t>(n, x + 1);
  if (degree != 0 && n > degree) throw Error(ErrorCode::InvalidInput, "cycle point exceeds degree");
  Perm p = perm_identity(std::max<std::size_t>(n, 1));
  std::vector<bool> used(p.size(), false);
  for (const auto& c : cycles) {
    for (auto x : c) {
      if (used[x]) throw Error(ErrorCode::InvalidInput, "cycles are not disjoint: " + text);
      used[x] = true;
    }
    for (std::size_t k = 0; k < c.size(); ++k) p[c[k]] = c[(k + 1) % c.size()];
  }
  return p;
}

std::string format_cycles(const Perm& a) {
  std::string out;
  std::vector<bool> seen(a.size(), false);
  for (std::uint32_t x = 0; x < a.size(); ++x) {
    if (seen[x] || a[x] == x) continue;
    out += "(";
    std::uint32_t y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = true;
      out += (first ? "" : " ") + std::to_string(y);
      first = false;
      y = a[y];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

// ---------------------------------------------------------------- PermGroup

PermGroup PermGroup::enumerate(std::vector<Perm> generators, std::size_t degree, std::size_t cap) {
  for (const auto& g : generators) degree = std::max(degree, g.size());
  degree = std::max<std::size_t>(degree, 1);
  PermGroup G;
  G.degree_ = degree;
  for (auto& g : generators) {
    if (!perm_is_valid(g)) throw Error(ErrorCode::InvalidInput, "generator is not a permutation");
    g = pad(g, degree);
  }
  G.generators_ = generators;

  std::unordered_map<Perm, bool, PermHash> seen;
  std::vector<Perm> found{perm_identity(degree)};
  seen[found[0]] = true;
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (const auto& s : generators) {
      Perm y = perm_compose(s, found[k]);
      if (seen.emplace(y, true).second) {
        found.push_back(std::move(y));
        if (found.size() > cap)
          throw Error(ErrorCode::CapExceeded, "group order exceeds cap " + std::to_string(cap));
      }
    }
  }
  std::sort(found.begin(), found.end());
  G.elements_ = std::move(found);

  const std::size_t n = G.elements_.size();
  G.inverse_.resize(n);
  for (Elem a = 0; a < n; ++a) G.inverse_[a] = *G.index_of(perm_inverse(G.elements_[a]));
  for (const auto& s : G.generators_) G.generator_indices_.push_back(*G.index_of(s));
  if (n <= 2048) {
    std::unordered_map<Perm, Elem, PermHash> index;
    for (Elem a = 0; a < n; ++a) index[G.elements_[a]] = a;
    G.table_.resize(n * n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) G.table_[a * n + b] = index.at(perm_compose(G.elements_[a], G.elements_[b]));
  }
  return G;
}

std::optional<Elem> PermGroup::index_of(const Perm& p) const {
  Perm q = pad(p, degree_);
  auto it = std::lower_bound(elements_.begin(), elements_.end(), q);
  if (it == elements_.end() || *it != q) return std::nullopt;
  return static_cast<Elem>(it - elements_.begin());
}

Elem PermGroup::mul(Elem a, Elem b) const {
  if (!table_.empty()) return table_[a * elements_.size() + b];
  return *index_of(perm_compose(elements_[a], elements_[b]));
}

std::size_t PermGroup::element_order(Elem a) const {
  std::size_t k = 1;
  for (Elem x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

// ---------------------------------------------------------------- lattice

std::vector<Elem> SubgroupLattice::closure(const std::vector<Elem>& gens) const {
  std::vector<bool> in(group_.order(), false);
  std::vector<Elem> out{PermGroup::identity()};
  in[0] = true;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (Elem s : gens) {
      Elem y = group_.mul(s, out[k]);
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::shared_ptr<const SubgroupLattice> SubgroupLattice::build(PermGroup group) {
  return std::shared_ptr<const SubgroupLattice>(new SubgroupLattice(std::move(group)));
}

SubgroupLattice::SubgroupLattice(PermGroup group) : group_(std::move(group)) {
  const std::size_t n = group_.order();
  if (n > kMaxOrder)
    throw Error(ErrorCode::CapExceeded, "subgroup lattice limited to order " + std::to_string(kMaxOrder));

  std::map<std::vector<Elem>, std::size_t> seen;
  std::vector<std::pair<std::vector<Elem>, std::vector<Elem>>> found;  // elements, generators
  std::vector<Elem> cyclic_gens;
  for (Elem g = 0; g < n; ++g) {
    auto elems = closure({g});
    if (seen.emplace(elems, found.size()).second) {
      found.push_back({elems, g == 0 ? std::vector<Elem>{} : std::vector<Elem>{g}});
      if (g != 0) cyclic_gens.push_back(g);
    }
  }
  // Every subgroup is a join of cyclic subgroups; close the list under joins.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Elem c : cyclic_gens) {
      const auto& elems = found[i].first;
      if (std::binary_search(elems.begin(), elems.end(), c)) continue;
      std::vector<Elem> gens = found[i].second;
      gens.push_back(c);
      auto joined = closure(gens);
      if (seen.emplace(joined, found.size()).second) found.push_back({std::move(joined), std::move(gens)});
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });

  subgroups_.resize(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) {
    Sub& s = subgroups_[i];
    s.elements = std::move(found[i].first);
    s.generators = std::move(found[i].second);
    s.member.assign(n, false);
    for (Elem e : s.elements) s.member[e] = true;
    s.coset_of.assign(n, UINT32_MAX);
    for (Elem g = 0; g < n; ++g) {
      if (s.coset_of[g] != UINT32_MAX) continue;
      auto c = static_cast<std::uint32_t>(s.coset_reps.size());
      s.coset_reps.push_back(g);
      for (Elem k : s.elements) s.coset_of[group_.mul(g, k)] = c;
    }
  }

  std::map<std::vector<Elem>, SubgroupId> lookup;
  for (SubgroupId h = 0; h < subgroups_.size(); ++h) lookup[subgroups_[h].elements] = h;
  conj_.resize(subgroups_.size() * n);
  for (SubgroupId h = 0; h < subgroups_.size(); ++h) {
    std::vector<Elem> normal;
    for (Elem g = 0; g < n; ++g) {
      std::vector<Elem> c;
      c.reserve(subgroups_[h].elements.size());
      Elem gi = group_.inv(g);
      for (Elem x : subgroups_[h].elements) c.push_back(group_.mul(group_.mul(g, x), gi));
      std::sort(c.begin(), c.end());
      SubgroupId k = lookup.at(c);
      conj_[h * n + g] = k;
      if (k == h) normal.push_back(g);
    }
    subgroups_[h].normaliser = lookup.at(normal);
  }

  std::vector<bool> assigned(subgroups_.size(), false);
  for (SubgroupId h = 0; h < subgroups_.size(); ++h) {
    if (assigned[h]) continue;
    std::size_t cls = class_reps_.size();
    class_reps_.push_back(h);
    for (Elem g = 0; g < n; ++g) {
      SubgroupId k = conjugate(h, g);
      assigned[k] = true;
      subgroups_[k].conj_class = cls;
    }
  }
}

bool SubgroupLattice::is_contained(SubgroupId a, SubgroupId b) const {
  if (order(a) > order(b) || order(b) % order(a) != 0) return false;
  for (Elem g : generators(a))
    if (!contains(b, g)) return false;
  return true;
}

std::optional<SubgroupId> SubgroupLattice::find(std::vector<Elem> elements) const {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  auto lo = std::lower_bound(subgroups_.begin(), subgroups_.end(), elements, [](const Sub& s, const std::vector<Elem>& e) {
    if (s.elements.size() != e.size()) return s.elements.size() < e.size();
    return s.elements < e;
  });
  if (lo == subgroups_.end() || lo->elements != elements) return std::nullopt;
  return static_cast<SubgroupId>(lo - subgroups_.begin());
}

SubgroupId SubgroupLattice::generated_by(const std::vector<Elem>& elements) const {
  for (Elem e : elements)
    if (e >= group_.order()) throw Error(ErrorCode::InvalidInput, "element index out of range");
  return *find(closure(elements));
}

SubgroupId SubgroupLattice::subgroup_from_set(const std::vector<Elem>& elements) const {
  auto id = find(elements);
  if (!id) throw Error(ErrorCode::NotASubgroup, "element set is not a subgroup");
  return *id;
}

SubgroupId SubgroupLattice::intersect(SubgroupId a, SubgroupId b) const {
  std::vector<Elem> common;
  for (Elem x : elements(a))
    if (contains(b, x)) common.push_back(x);
  return *find(common);
}

SubgroupId SubgroupLattice::canonical_conjugate(SubgroupId h, SubgroupId by) const {
  SubgroupId best = h;
  for (Elem g : elements(by)) best = std::min(best, conjugate(h, g));
  return best;
}

Elem SubgroupLattice::double_coset_rep(SubgroupId h, Elem g, SubgroupId k) const {
  Elem best = g;
  for (Elem x : elements(h)) best = std::min(best, coset_rep(k, coset_index(k, group_.mul(x, g))));
  return best;
}

std::vector<Elem> SubgroupLattice::double_cosets(SubgroupId h, SubgroupId k) const {
  std::vector<bool> marked(index(k), false);
  std::vector<Elem> reps;
  for (std::uint32_t c = 0; c < index(k); ++c) {
    if (marked[c]) continue;
    Elem g = coset_rep(k, c);
    reps.push_back(g);
    for (Elem x : elements(h)) marked[coset_index(k, group_.mul(x, g))] = true;
  }
  return reps;
}

std::vector<Elem> SubgroupLattice::double_coset(SubgroupId h, Elem g, SubgroupId k) const {
  std::vector<bool> in(group_.order(), false);
  for (Elem x : elements(h))
    for (Elem y : elements(k)) in[group_.mul(group_.mul(x, g), y)] = true;
  std::vector<Elem> out;
  for (Elem e = 0; e < in.size(); ++e)
    if (in[e]) out.push_back(e);
  return out;
}

std::vector<Elem> SubgroupLattice::fixed_points(SubgroupId h, SubgroupId k) const {
  std::vector<Elem> out;
  for (std::uint32_t c = 0; c < index(k); ++c) {
    Elem g = coset_rep(k, c);
    bool fixed = true;
    for (Elem x : generators(h))
      if (coset_index(k, group_.mul(x, g)) != c) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(g);
  }
  return out;
}

bool SubgroupLattice::is_subconjugate(SubgroupId h, SubgroupId k) const {
  if (order(k) % order(h) != 0) return false;
  return !fixed_points(h, k).empty();
}

PermGroup SubgroupLattice::weyl_group(SubgroupId h) const {
  SubgroupId N = normaliser(h);
  std::vector<std::uint32_t> slot(index(h), UINT32_MAX);
  std::vector<std::uint32_t> cosets;
  for (std::uint32_t c = 0; c < index(h); ++c)
    if (contains(N, coset_rep(h, c))) {
      slot[c] = static_cast<std::uint32_t>(cosets.size());
      cosets.push_back(c);
    }
  std::vector<Perm> gens;
  for (Elem n : generators(N)) {
    Perm p(cosets.size());
    for (std::uint32_t i = 0; i < cosets.size(); ++i)
      p[i] = slot[coset_index(h, group_.mul(n, coset_rep(h, cosets[i])))];
    gens.push_back(p);
  }
  return PermGroup::enumerate(gens, cosets.size());
}

std::string SubgroupLattice::describe(SubgroupId h) const {
  std::string gens;
  for (Elem g : generators(h)) gens += (gens.empty() ? "" : ", ") + format_cycles(group_.element(g));
  return "<" + gens + ">";
}

// ---------------------------------------------------------------- families

Family Family::all(LatticePtr lattice) {
  std::vector<bool> m(lattice->size(), true);
  return Family(std::move(lattice), Kind::All, 0, std::move(m));
}

Family Family::trivial(LatticePtr lattice) {
  std::vector<bool> m(lattice->size(), false);
  m[lattice->trivial()] = true;
  return Family(std::move(lattice), Kind::Trivial, 0, std::move(m));
}

Family Family::p_subgroups(LatticePtr lattice, unsigned long p) {
  if (p < 2) throw Error(ErrorCode::InvalidInput, "p-subgroup family needs a prime");
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw Error(ErrorCode::InvalidInput, "p-subgroup family needs a prime");
  std::vector<bool> m(lattice->size(), false);
  for (SubgroupId h = 0; h < lattice->size(); ++h) {
    std::size_t o = lattice->order(h);
    while (o % p == 0) o /= p;
    m[h] = (o == 1);
  }
  return Family(std::move(lattice), Kind::PSubgroups, p, std::move(m));
}

Family Family::generated_by(LatticePtr lattice, const std::vector<SubgroupId>& subgroups) {
  std::vector<bool> m(lattice->size(), false);
  const std::size_t n = lattice->group().order();
  for (SubgroupId s : subgroups) {
    if (s >= lattice->size()) throw Error(ErrorCode::InvalidInput, "subgroup id out of range");
    for (Elem g = 0; g < n; ++g) {
      SubgroupId c = lattice->conjugate(s, g);
      for (SubgroupId h = 0; h < lattice->size(); ++h)
        if (!m[h] && lattice->is_contained(h, c)) m[h] = true;
    }
  }
  m[lattice->trivial()] = true;
  return Family(std::move(lattice), Kind::Explicit, 0, std::move(m));
}

Family Family::parse(LatticePtr lattice, const std::string& text) {
  std::string t = trim(text);
  std::string low = t;
  std::transform(low.begin(), low.end(), low.begin(), ::tolower);
  if (low == "all" || low == "fin") return all(std::move(lattice));
  if (low == "triv" || low == "trivial" || low == "1") return trivial(std::move(lattice));
  if (!low.empty() && low[0] == 'p') {
    std::string digits = low.substr(low.size() > 1 && low[1] == ':' ? 2 : 1);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit))
      return p_subgroups(std::move(lattice), std::stoul(digits));
  }
  if (low.rfind("explicit:", 0) == 0) {
    std::vector<SubgroupId> ids;
    std::string rest = t.substr(9);
    for (char& c : rest)
      if (c == ',') c = ' ';
    std::istringstream in(rest);
    long v;
    while (in >> v) {
      if (v < 0) throw Error(ErrorCode::InvalidInput, "negative subgroup id");
      ids.push_back(static_cast<SubgroupId>(v));
    }
    return generated_by(std::move(lattice), ids);
  }
  throw Error(ErrorCode::InvalidInput, "unknown family: " + text);
}

std::vector<SubgroupId> Family::representatives() const {
  std::vector<SubgroupId> out;
  for (SubgroupId h : lattice_->class_reps())
    if (member_[h]) out.push_back(h);
  return out;
}

std::vector<SubgroupId> Family::members() const {
  std::vector<SubgroupId> out;
  for (SubgroupId h = 0; h < member_.size(); ++h)
    if (member_[h]) out.push_back(h);
  return out;
}

std::string Family::name() const {
  switch (kind_) {
    case Kind::All: return "all";
    case Kind::Trivial: return "triv";
    case Kind::PSubgroups: return "p" + std::to_string(p_);
    case Kind::Explicit: return "explicit";
  }
  return "?";
}

// ---------------------------------------------------------------- parsing

namespace {

struct Generated {
  std::vector<Perm> gens;
  std::size_t degree;
};

Generated preset(const std::string& name) {
  auto num = [&](std::size_t prefix) -> std::size_t {
    std::string d = name.substr(prefix);
    if (d.empty() || !std::all_of(d.begin(), d.end(), ::isdigit))
      throw Error(ErrorCode::InvalidInput, "unknown group preset: " + name);
    std::size_t v = std::stoul(d);
    if (v == 0 || v > 64) throw Error(ErrorCode::InvalidInput, "preset size out of range: " + name);
    return v;
  };
  auto cycle = [](std::size_t n) {
    Perm p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>((i + 1) % n);
    return p;
  };
  if (name == "Q8")
    return {{parse_cycles("(0 1 2 3)(4 5 6 7)", 8), parse_cycles("(0 4 2 6)(1 7 3 5)", 8)}, 8};
  if (name == "Dic3")
    return {{parse_cycles("(0 1 2)", 7), parse_cycles("(0 1)(3 4 5 6)", 7)}, 7};
  if (name == "V4" || name == "K4") return preset("D2");
  if (name.rfind("Dic", 0) == 0) throw Error(ErrorCode::InvalidInput, "unknown group preset: " + name);
  switch (name.empty() ? '?' : name[0]) {
    case 'C': {
      std::size_t n = num(1);
      if (n == 1) return {{}, 1};
      return {{cycle(n)}, n};
    }
    case 'S': {
      std::size_t n = num(1);
      if (n == 1) return {{}, 1};
      return {{parse_cycles("(0 1)", n), cycle(n)}, n};
    }
    case 'A': {
      std::size_t n = num(1);
      std::vector<Perm> gens;
      for (std::size_t k = 2; k < n; ++k) gens.push_back(parse_cycles("(0 1 " + std::to_string(k) + ")", n));
      return {gens, n};
    }
    case 'D': {
      std::size_t n = num(1);
      if (n == 1) return {{parse_cycles("(0 1)", 2)}, 2};
      if (n == 2) return {{parse_cycles("(0 1)(2 3)", 4), parse_cycles("(0 2)(1 3)", 4)}, 4};
      Perm r(n);
      for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<std::uint32_t>((n - i) % n);
      return {{cycle(n), r}, n};
    }
    default: break;
  }
  throw Error(ErrorCode::InvalidInput, "unknown group preset: " + name);
}

Generated direct_product(const std::vector<Generated>& factors) {
  Generated out{{}, 0};
  for (const auto& f : factors) out.degree += f.degree;
  std::size_t offset = 0;
  for (const auto& f : factors) {
    for (const auto& g : f.gens) {
      Perm p = perm_identity(out.degree);
      for (std::size_t i = 0; i < f.degree; ++i)
        p[offset + i] = static_cast<std::uint32_t>(offset + (i < g.size() ? g[i] : i));
      out.gens.push_back(p);
    }
    offset += f.degree;
  }
  return out;
}

std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if ((c == ';' || c == ',') && depth == 0) {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(trim(cur));
  parts.erase(std::remove(parts.begin(), parts.end(), std::string()), parts.end());
  return parts;
}

}  // namespace

PermGroup parse_group(const std::string& text, std::size_t cap) {
  std::string t = trim(text);
  if (t.empty()) throw Error(ErrorCode::InvalidInput, "empty group description");
  if (t[0] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(t);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::InvalidInput, std::string("group JSON: ") + e.what());
    }
    std::size_t degree = j.value("degree", 0);
    std::vector<Perm> gens;
    for (const auto& g : j.value("generators", nlohmann::json::array())) {
      if (g.is_string()) {
        gens.push_back(parse_cycles(g.get<std::string>(), degree));
      } else {
        Perm p = g.get<Perm>();
        if (degree != 0 && p.size() != degree) throw Error(ErrorCode::InvalidInput, "generator length differs from degree");
        gens.push_back(p);
      }
    }
    return PermGroup::enumerate(gens, degree, cap);
  }
  if (t[0] == '(') {
    std::vector<Perm> gens;
    std::size_t degree = 0;
    for (const auto& part : split_top_level(t)) {
      gens.push_back(parse_cycles(part));
      degree = std::max(degree, gens.back().size());
    }
    return PermGroup::enumerate(gens, degree, cap);
  }
  std::vector<Generated> factors;
  std::string cur;
  for (char c : t + "x") {
    if (c == 'x' || c == 'X') {
      factors.push_back(preset(trim(cur)));
      cur.clear();
    } else {
      cur += c;
    }
  }
  Generated g = factors.size() == 1 ? factors[0] : direct_product(factors);
  return PermGroup::enumerate(g.gens, g.degree, cap);
}

std::vector<std::string> small_group_presets(std::size_t max_order) {
  static const std::vector<std::pair<std::size_t, std::string>> table = {
      {1, "C1"},  {2, "C2"},        {3, "C3"},         {4, "C4"},   {4, "C2xC2"}, {5, "C5"},
      {6, "C6"},  {6, "S3"},        {7, "C7"},         {8, "C8"},   {8, "C2xC4"}, {8, "C2xC2xC2"},
      {8, "D4"},  {8, "Q8"},        {9, "C9"},         {9, "C3xC3"}, {10, "C10"}, {10, "D5"},
      {11, "C11"}, {12, "C12"},     {12, "C2xC6"},     {12, "D6"},  {12, "A4"},   {12, "Dic3"}};
  std::vector<std::string> out;
  for (const auto& [o, name] : table)
    if (o <= max_order) out.push_back(name);
  return out;
}

}  // namespace eqalg
