#include "brokencycle/consheaf.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

#include "brokencycle/error.hpp"

namespace bc {

StratSheaf::StratSheaf(StratSheafData data)
    : data_(std::move(data)), poset_(enumerate_conv(data_.base)) {}

const Matrix& StratSheaf::edge(std::uint32_t lower, std::uint32_t upper) const {
  auto it = data_.maps.find({lower, upper});
  if (it == data_.maps.end()) {
    raise(ErrorCode::kInvalidArgument,
          "no covering map " + std::to_string(lower) + " -> " + std::to_string(upper));
  }
  return it->second;
}

Matrix StratSheaf::map_between(const ConvexRelation& e, const ConvexRelation& e2) const {
  if (!e.leq(e2)) {
    raise(ErrorCode::kInvalidArgument, e.to_string() + " is not below " + e2.to_string());
  }
  std::uint32_t current = e.mask();
  Matrix m = Matrix::identity(field(), dim(e));
  std::uint32_t drop = e.mask() & ~e2.mask();
  while (drop != 0) {
    std::uint32_t bit = drop & (~drop + 1U);
    drop &= ~bit;
    std::uint32_t next = current & ~bit;
    m = edge(current, next) * m;
    current = next;
  }
  return m;
}

StratSheaf validate_sheaf(StratSheafData data) {
  ConvPoset poset = enumerate_conv(data.base);
  if (data.dims.size() != poset.size()) {
    raise(ErrorCode::kDimensionMismatch, "expected " + std::to_string(poset.size()) +
                                             " stalk dimensions, got " +
                                             std::to_string(data.dims.size()));
  }
  for (const auto& [lo, up] : poset.covers) {
    auto lo_mask = static_cast<std::uint32_t>(lo + 1);
    auto up_mask = static_cast<std::uint32_t>(up + 1);
    auto it = data.maps.find({lo_mask, up_mask});
    std::string name = poset.elements[lo].to_string() + " -> " + poset.elements[up].to_string();
    if (it == data.maps.end()) raise(ErrorCode::kDimensionMismatch, "missing map " + name);
    const Matrix& m = it->second;
    if (!(m.field() == data.field) || m.rows() != data.dims[up] || m.cols() != data.dims[lo]) {
      raise(ErrorCode::kDimensionMismatch,
            "map " + name + " is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                ", expected " + std::to_string(data.dims[up]) + "x" + std::to_string(data.dims[lo]));
    }
  }
  if (data.maps.size() != poset.covers.size()) {
    raise(ErrorCode::kInvalidArgument, "maps given for pairs that are not covering relations");
  }
  const int k = data.base.class_count();
  const std::uint32_t full = (1U << k) - 1U;
  for (std::uint32_t a = 1; a <= full; ++a) {
    if (std::popcount(a) < 3) continue;
    for (int i = 0; i < k; ++i) {
      if (!((a >> i) & 1U)) continue;
      for (int j = i + 1; j < k; ++j) {
        if (!((a >> j) & 1U)) continue;
        std::uint32_t bi = a & ~(1U << i);
        std::uint32_t bj = a & ~(1U << j);
        std::uint32_t c = bi & ~(1U << j);
        Matrix via_i = data.maps.at({bi, c}) * data.maps.at({a, bi});
        Matrix via_j = data.maps.at({bj, c}) * data.maps.at({a, bj});
        if (!(via_i == via_j)) {
          raise(ErrorCode::kNotFunctorial,
                "diamond at " + poset.elements[a - 1].to_string() + " dropping " +
                    std::to_string(i) + " and " + std::to_string(j) + " does not commute");
        }
      }
    }
  }
  return StratSheaf(std::move(data));
}

StratSheaf constant_sheaf(const ParaPreorder& base, Field field, std::size_t dim) {
  ConvPoset poset = enumerate_conv(base);
  StratSheafData data{base, field, std::vector<std::size_t>(poset.size(), dim), {}};
  for (const auto& [lo, up] : poset.covers) {
    data.maps.emplace(std::pair{static_cast<std::uint32_t>(lo + 1), static_cast<std::uint32_t>(up + 1)},
                      Matrix::identity(field, dim));
  }
  return validate_sheaf(std::move(data));
}

// ---------------------------------------------------------------------------
// Up-sets

UpSet::UpSet(const ConvPoset& poset, std::vector<bool> members) : members_(std::move(members)) {
  if (members_.size() != poset.size()) {
    raise(ErrorCode::kInvalidArgument, "membership vector has the wrong length");
  }
  for (const auto& [lo, up] : poset.covers) {
    if (members_[lo] && !members_[up]) {
      raise(ErrorCode::kNotUpwardClosed, poset.elements[lo].to_string() + " is a member but " +
                                             poset.elements[up].to_string() + " is not");
    }
  }
}

UpSet UpSet::all(const ConvPoset& poset) { return UpSet(std::vector<bool>(poset.size(), true), true); }

UpSet UpSet::empty(const ConvPoset& poset) {
  return UpSet(std::vector<bool>(poset.size(), false), true);
}

UpSet UpSet::generated_by(const ConvPoset& poset, const std::vector<ConvexRelation>& gens) {
  std::vector<bool> members(poset.size(), false);
  for (std::size_t i = 0; i < poset.size(); ++i) {
    for (const auto& g : gens) {
      if (g.leq(poset.elements[i])) members[i] = true;
    }
  }
  return UpSet(std::move(members), true);
}

std::vector<std::size_t> UpSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i]) out.push_back(i);
  }
  return out;
}

std::size_t UpSet::size() const {
  return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true));
}

UpSet UpSet::unite(const UpSet& other) const {
  std::vector<bool> m(members_.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = members_[i] || other.members_[i];
  return UpSet(std::move(m), true);
}

UpSet UpSet::intersect(const UpSet& other) const {
  std::vector<bool> m(members_.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = members_[i] && other.members_[i];
  return UpSet(std::move(m), true);
}

bool UpSet::subset_of(const UpSet& other) const {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] && !other.members_[i]) return false;
  }
  return true;
}

std::string UpSet::to_string(const ConvPoset& poset) const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto i : indices()) {
    os << (first ? "" : " ") << poset.elements[i].to_string();
    first = false;
  }
  os << "}";
  return os.str();
}

std::vector<UpSet> enumerate_upsets(const ConvPoset& poset) {
  const std::size_t n = poset.size();
  if (n > kMaxUpSetPoset) {
    raise(ErrorCode::kResourceBound, "poset of size " + std::to_string(n) + " has too many up-sets");
  }
  std::vector<std::uint32_t> above(n, 0);
  for (const auto& [lo, up] : poset.covers) above[lo] |= 1U << up;
  std::vector<std::uint32_t> closed;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (((s >> i) & 1U) && (above[i] & ~s) != 0) ok = false;
    }
    if (ok) closed.push_back(s);
  }
  std::stable_sort(closed.begin(), closed.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  std::vector<UpSet> out;
  for (auto s : closed) {
    std::vector<bool> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = ((s >> i) & 1U) != 0;
    out.push_back(UpSet(poset, std::move(m)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sections

Sections sections(const StratSheaf& f, const UpSet& u) {
  const ConvPoset& poset = f.poset();
  Sections out;
  out.offsets.assign(poset.size(), 0);
  for (std::size_t i = 0; i < poset.size(); ++i) {
    out.offsets[i] = out.ambient;
    if (u.contains(i)) out.ambient += f.dim_at(i);
  }
  std::size_t rows = 0;
  for (const auto& [lo, up] : poset.covers) {
    if (u.contains(lo) && u.contains(up)) rows += f.dim_at(up);
  }
  Matrix system(f.field(), rows, out.ambient);
  std::size_t r = 0;
  for (const auto& [lo, up] : poset.covers) {
    if (!u.contains(lo) || !u.contains(up)) continue;
    const Matrix& m = f.edge(static_cast<std::uint32_t>(lo + 1), static_cast<std::uint32_t>(up + 1));
    system.set_block(r, out.offsets[lo], m);
    system.set_block(r, out.offsets[up], -Matrix::identity(f.field(), f.dim_at(up)));
    r += f.dim_at(up);
  }
  out.basis = canonical_basis(kernel(system));
  out.dim = out.basis.cols();
  return out;
}

namespace {

// Coordinate matrix from the ambient space of u to that of v, matching the
// stalks of common members and zero elsewhere.
Matrix projection(const StratSheaf& f, const UpSet& u, const UpSet& v) {
  std::size_t amb_u = 0;
  std::size_t amb_v = 0;
  for (std::size_t i = 0; i < u.members().size(); ++i) {
    if (u.contains(i)) amb_u += f.dim_at(i);
    if (v.contains(i)) amb_v += f.dim_at(i);
  }
  Matrix p(f.field(), amb_v, amb_u);
  std::size_t ou = 0;
  std::size_t ov = 0;
  for (std::size_t i = 0; i < u.members().size(); ++i) {
    std::size_t d = f.dim_at(i);
    if (v.contains(i) && u.contains(i)) {
      for (std::size_t k = 0; k < d; ++k) p(ov + k, ou + k) = 1;
    }
    if (v.contains(i)) ov += d;
    if (u.contains(i)) ou += d;
  }
  return p;
}

GluingReport glue(const StratSheaf& f, const UpSet& u1, const UpSet& u2, const Sections& s1,
                  const Sections& s2, const Sections& su) {
  UpSet u = u1.unite(u2);
  UpSet w = u1.intersect(u2);
  Matrix r1 = projection(f, u1, w) * s1.basis;
  Matrix r2 = projection(f, u2, w) * s2.basis;
  Matrix k = kernel(hstack(r1, -r2));
  GluingReport rep;
  rep.dim_union = su.dim;
  rep.dim_fiber_product = k.cols();
  // Glue each compatible pair into a family on U: take the U1 part where
  // defined and the U2 part on U2 minus U1.
  Matrix k1 = k.block(0, 0, s1.dim, k.cols());
  Matrix k2 = k.block(s1.dim, 0, s2.dim, k.cols());
  Matrix only2 = projection(f, u2, u2) - projection(f, w, u2) * projection(f, u2, w);
  Matrix glued = projection(f, u, u1).transpose() * (s1.basis * k1) +
                 projection(f, u, u2).transpose() * (only2 * (s2.basis * k2));
  if (rep.dim_union != rep.dim_fiber_product) {
    rep.detail = "dim sections(U1 u U2) = " + std::to_string(rep.dim_union) +
                 " but fiber product has dim " + std::to_string(rep.dim_fiber_product);
    return rep;
  }
  if (rank(glued) != glued.cols() || !(canonical_basis(glued) == su.basis)) {
    rep.detail = "glued families do not span sections(U1 u U2)";
    return rep;
  }
  rep.pass = true;
  return rep;
}

std::uint64_t key_of(const UpSet& u) {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < u.members().size(); ++i) {
    if (u.contains(i)) k |= std::uint64_t{1} << i;
  }
  return k;
}

GluingSweep sweep(const StratSheaf& f, const std::vector<UpSet>& upsets, bool parallel) {
  const auto n = static_cast<std::int64_t>(upsets.size());
  std::vector<Sections> cache(upsets.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    cache[static_cast<std::size_t>(i)] = sections(f, upsets[static_cast<std::size_t>(i)]);
  }
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < upsets.size(); ++i) index.emplace(key_of(upsets[i]), i);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < upsets.size(); ++a) {
    for (std::size_t b = a; b < upsets.size(); ++b) pairs.emplace_back(a, b);
  }
  GluingSweep out;
  out.pairs = pairs.size();
  std::size_t failures = 0;
  const auto np = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : failures) if (parallel)
  for (std::int64_t p = 0; p < np; ++p) {
    auto [a, b] = pairs[static_cast<std::size_t>(p)];
    UpSet un = upsets[a].unite(upsets[b]);
    auto it = index.find(key_of(un));
    Sections su_local;
    const Sections* su = nullptr;
    if (it != index.end()) {
      su = &cache[it->second];
    } else {
      su_local = sections(f, un);
      su = &su_local;
    }
    GluingReport rep = glue(f, upsets[a], upsets[b], cache[a], cache[b], *su);
    if (!rep.pass) {
      ++failures;
#pragma omp critical(bc_gluing_first_failure)
      if (out.first_failure.empty()) {
        out.first_failure = upsets[a].to_string(f.poset()) + " / " +
                            upsets[b].to_string(f.poset()) + ": " + rep.detail;
      }
    }
  }
  out.failures = failures;
  return out;
}

}  // namespace

Matrix restriction(const StratSheaf& f, const UpSet& u, const UpSet& v) {
  if (!v.subset_of(u)) raise(ErrorCode::kInvalidArgument, "restriction to a set that is not smaller");
  return projection(f, u, v);
}

FinVect stalk(const StratSheaf& f, const ConvexRelation& e) {
  if (!(e.base() == f.base())) {
    raise(ErrorCode::kBaseMismatch, "stratum of " + e.base().to_string() + ", sheaf on " +
                                        f.base().to_string());
  }
  return {f.dim(e), f.field()};
}

StratSheaf pullback_sheaf(const PreordMap& f, const StratSheaf& sheaf) {
  if (!(sheaf.base() == f.src())) {
    raise(ErrorCode::kBaseMismatch, "sheaf lives on " + sheaf.base().to_string() +
                                        ", map starts at " + f.src().to_string());
  }
  ConvPoset poset = enumerate_conv(f.tgt());
  StratSheafData data{f.tgt(), sheaf.field(), {}, {}};
  std::vector<ConvexRelation> pulled;
  for (const auto& e : poset.elements) {
    pulled.push_back(pullback_relation(f, e));
    data.dims.push_back(sheaf.dim(pulled.back()));
  }
  for (const auto& [lo, up] : poset.covers) {
    data.maps.emplace(std::pair{static_cast<std::uint32_t>(lo + 1), static_cast<std::uint32_t>(up + 1)},
                      sheaf.map_between(pulled[lo], pulled[up]));
  }
  return validate_sheaf(std::move(data));
}

GluingReport gluing_check(const StratSheaf& f, const UpSet& u1, const UpSet& u2) {
  return glue(f, u1, u2, sections(f, u1), sections(f, u2), sections(f, u1.unite(u2)));
}

GluingSweep gluing_sweep(const StratSheaf& f, const std::vector<UpSet>& upsets) {
  return sweep(f, upsets, true);
}

GluingSweep gluing_sweep_serial(const StratSheaf& f, const std::vector<UpSet>& upsets) {
  return sweep(f, upsets, false);
}

StratSheaf random_sheaf(const ParaPreorder& base, Field field, std::size_t max_dim,
                        std::mt19937_64& rng) {
  ConvPoset poset = enumerate_conv(base);
  const std::size_t n = poset.size();
  std::uniform_int_distribution<std::size_t> elem_dist(0, n - 1);
  // Each summand is the indicator module of an interval [lo, hi]; summands
  // are added while every stalk stays within max_dim.
  std::vector<std::vector<bool>> support;
  std::vector<std::size_t> load(n, 0);
  for (std::size_t attempt = 0; attempt < 4 * max_dim; ++attempt) {
    std::size_t lo = elem_dist(rng);
    std::vector<std::size_t> above;
    for (std::size_t j = 0; j < n; ++j) {
      if (poset.elements[lo].leq(poset.elements[j])) above.push_back(j);
    }
    // Half of the summands run up to a maximal element, so that sections
    // over large up-sets do not vanish too often.
    std::vector<std::size_t> maximal;
    for (std::size_t j : above) {
      if (poset.elements[j].gap_count() == 1) maximal.push_back(j);
    }
    const auto& pool = std::bernoulli_distribution(0.5)(rng) ? maximal : above;
    std::size_t hi = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    std::vector<bool> in(n);
    bool fits = true;
    for (std::size_t j = 0; j < n; ++j) {
      in[j] = poset.elements[lo].leq(poset.elements[j]) && poset.elements[j].leq(poset.elements[hi]);
      if (in[j] && load[j] + 1 > max_dim) fits = false;
    }
    if (!fits) continue;
    for (std::size_t j = 0; j < n; ++j) load[j] += in[j] ? 1 : 0;
    support.push_back(std::move(in));
  }
  const std::size_t summands = support.size();
  // Position of summand s inside the stalk at element j.
  std::vector<std::vector<std::size_t>> slot(n, std::vector<std::size_t>(summands, 0));
  StratSheafData data{base, field, std::vector<std::size_t>(n, 0), {}};
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t s = 0; s < summands; ++s) {
      if (support[s][j]) slot[j][s] = data.dims[j]++;
    }
  }
  std::vector<Matrix> conj;
  for (std::size_t j = 0; j < n; ++j) conj.push_back(random_invertible(field, data.dims[j], rng));
  for (const auto& [lo, up] : poset.covers) {
    Matrix m(field, data.dims[up], data.dims[lo]);
    for (std::size_t s = 0; s < summands; ++s) {
      if (support[s][lo] && support[s][up]) m(slot[up][s], slot[lo][s]) = 1;
    }
    data.maps.emplace(std::pair{static_cast<std::uint32_t>(lo + 1), static_cast<std::uint32_t>(up + 1)},
                      conj[up] * m * inverse(conj[lo]));
  }
  return validate_sheaf(std::move(data));
}

}  // namespace bc
