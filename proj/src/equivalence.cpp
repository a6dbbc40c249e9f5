#include "brokencycle/equivalence.hpp"

#include <algorithm>
#include <exception>
#include <set>

#include "brokencycle/error.hpp"

namespace bc {

std::string to_string(Variant v) { return v == Variant::kPara ? "para" : "cyc"; }

Variant parse_variant(const std::string& s) {
  if (s == "para") return Variant::kPara;
  if (s == "cyc") return Variant::kCyc;
  raise(ErrorCode::kInvalidArgument, "variant must be para or cyc, got '" + s + "'");
}

void CheckReport::record(bool ok, const std::string& what) {
  ++checks;
  if (ok) return;
  pass = false;
  ++violations;
  if (messages.size() < 10) messages.push_back(what);
}

void CheckReport::merge(const CheckReport& other) {
  pass = pass && other.pass;
  checks += other.checks;
  violations += other.violations;
  for (const auto& m : other.messages) {
    if (messages.size() < 10) messages.push_back(m);
  }
}

namespace {

Matrix power(const Matrix& t, std::int64_t k) {
  Matrix base = k < 0 ? inverse(t) : t;
  Matrix out = Matrix::identity(t.field(), t.rows());
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) out = base * out;
  return out;
}

std::vector<CycMap> surjections(int m, int n) { return enumerate_hom(m, n, HomKind::kSurj); }

}  // namespace

Matrix ParaRep::eval(const ParaMap& f) const {
  if (f.m() > N || f.n() > N) {
    raise(ErrorCode::kTruncationExceeded, f.to_string() + " lies outside the truncation N = " +
                                              std::to_string(N));
  }
  auto it = gen_maps.find(f.canonical());
  if (it == gen_maps.end()) {
    raise(ErrorCode::kInvalidArgument, "no matrix for " + f.to_string() + " (not a surjection?)");
  }
  if (f.shift() == 0) return it->second;
  return power(shifts[static_cast<std::size_t>(f.n())], f.shift()) * it->second;
}

CheckReport validate_rep(const ParaRep& g, Variant variant) {
  CheckReport rep;
  const auto size = static_cast<std::size_t>(g.N) + 1;
  if (g.dims.size() != size || g.shifts.size() != size) {
    rep.record(false, "expected " + std::to_string(size) + " spaces and shifts");
    return rep;
  }
  for (int n = 0; n <= g.N; ++n) {
    const Matrix& t = g.shifts[static_cast<std::size_t>(n)];
    std::size_t d = g.dims[static_cast<std::size_t>(n)];
    bool shaped = t.rows() == d && t.cols() == d;
    rep.record(shaped && is_invertible(t), "t_" + std::to_string(n) + " is not invertible");
    if (variant == Variant::kCyc) {
      rep.record(shaped && t.is_identity(), "t_" + std::to_string(n) + " is not the identity");
    }
  }
  std::size_t expected = 0;
  for (int m = 0; m <= g.N; ++m) {
    for (int n = 0; n <= g.N; ++n) {
      for (const auto& h : surjections(m, n)) {
        ++expected;
        auto it = g.gen_maps.find(h.rep());
        if (it == g.gen_maps.end()) {
          rep.record(false, "missing matrix for " + h.rep().to_string());
          continue;
        }
        const Matrix& mh = it->second;
        bool shaped = mh.rows() == g.dims[static_cast<std::size_t>(n)] &&
                      mh.cols() == g.dims[static_cast<std::size_t>(m)];
        rep.record(shaped, "matrix for " + h.rep().to_string() + " has the wrong shape");
        if (!shaped) continue;
        const Matrix& tm = g.shifts[static_cast<std::size_t>(m)];
        const Matrix& tn = g.shifts[static_cast<std::size_t>(n)];
        rep.record(tn * mh == mh * tm, "t does not commute with " + h.rep().to_string());
      }
    }
  }
  rep.record(g.gen_maps.size() == expected, "unexpected extra generator matrices");
  if (!rep.pass) return rep;
  for (int n = 0; n <= g.N; ++n) {
    rep.record(g.eval(ParaMap::identity(n)).is_identity(),
               "identity of Par(" + std::to_string(n) + ") is not sent to the identity");
  }
  for (int l = 0; l <= g.N; ++l) {
    for (int m = 0; m <= g.N; ++m) {
      auto fs = surjections(l, m);
      for (int n = 0; n <= g.N; ++n) {
        for (const auto& gg : surjections(m, n)) {
          for (const auto& f : fs) {
            ParaMap h = compose(gg.rep(), f.rep());
            rep.record(g.eval(gg.rep()) * g.eval(f.rep()) == g.eval(h),
                       "M(g) M(f) != M(g o f) for g = " + gg.rep().to_string() +
                           ", f = " + f.rep().to_string());
          }
        }
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Representations

namespace {

ParaRep empty_rep(int n_max, Field field) {
  ParaRep r;
  r.N = n_max;
  r.field = field;
  r.dims.assign(static_cast<std::size_t>(n_max) + 1, 0);
  for (int n = 0; n <= n_max; ++n) r.shifts.push_back(Matrix::identity(field, 0));
  return r;
}

template <typename Fn>
void for_each_surjection(int n_max, Fn&& fn) {
  for (int m = 0; m <= n_max; ++m) {
    for (int n = 0; n <= n_max; ++n) {
      for (const auto& h : surjections(m, n)) fn(h.rep());
    }
  }
}

// e_s -> lambda^{period of h(s)} e_{slot of h(s)}.
ParaRep slot_piece(int n_max, Field field, Field::Elem lambda) {
  ParaRep r = empty_rep(n_max, field);
  for (int n = 0; n <= n_max; ++n) {
    r.dims[static_cast<std::size_t>(n)] = static_cast<std::size_t>(n) + 1;
    r.shifts[static_cast<std::size_t>(n)] = Matrix::identity(field, n + 1).scaled(lambda);
  }
  for_each_surjection(n_max, [&](const ParaMap& h) {
    Matrix m(field, static_cast<std::size_t>(h.n()) + 1, static_cast<std::size_t>(h.m()) + 1);
    for (int s = 0; s <= h.m(); ++s) {
      std::int64_t y = h(s);
      std::int64_t p = floor_div(y, h.n() + 1);
      Field::Elem scale = 1;
      for (std::int64_t i = 0; i < p; ++i) scale = field.mul(scale, lambda);
      m(static_cast<std::size_t>(y - p * (h.n() + 1)), static_cast<std::size_t>(s)) = scale;
    }
    r.gen_maps.emplace(h, m);
  });
  return r;
}

// The sum-zero subrepresentation of the untwisted slot piece, in the basis
// e_0 - e_s.
ParaRep augmentation_piece(int n_max, Field field) {
  ParaRep slot = slot_piece(n_max, field, 1);
  ParaRep r = empty_rep(n_max, field);
  std::vector<Matrix> basis;
  std::vector<Matrix> coords;
  for (int n = 0; n <= n_max; ++n) {
    auto d = static_cast<std::size_t>(n);
    Matrix b(field, d + 1, d);
    Matrix c(field, d, d + 1);
    for (std::size_t s = 1; s <= d; ++s) {
      b(0, s - 1) = 1;
      b.set(s, s - 1, -1);
      c.set(s - 1, s, -1);
    }
    basis.push_back(b);
    coords.push_back(c);
    r.dims[d] = d;
    r.shifts[d] = Matrix::identity(field, d);
  }
  for (const auto& [h, m] : slot.gen_maps) {
    r.gen_maps.emplace(h, coords[static_cast<std::size_t>(h.n())] * m *
                              basis[static_cast<std::size_t>(h.m())]);
  }
  return r;
}

ParaRep rep_sum(const ParaRep& a, const ParaRep& b) {
  ParaRep r = empty_rep(a.N, a.field);
  for (std::size_t n = 0; n < a.dims.size(); ++n) {
    r.dims[n] = a.dims[n] + b.dims[n];
    r.shifts[n] = direct_sum(a.shifts[n], b.shifts[n]);
  }
  for (const auto& [h, m] : a.gen_maps) r.gen_maps.emplace(h, direct_sum(m, b.gen_maps.at(h)));
  return r;
}

ParaRep conjugate(const ParaRep& a, std::mt19937_64& rng) {
  ParaRep r = a;
  std::vector<Matrix> p;
  std::vector<Matrix> p_inv;
  for (std::size_t n = 0; n < a.dims.size(); ++n) {
    p.push_back(random_invertible(a.field, a.dims[n], rng));
    p_inv.push_back(inverse(p.back()));
    r.shifts[n] = p[n] * a.shifts[n] * p_inv[n];
  }
  for (auto& [h, m] : r.gen_maps) {
    m = p[static_cast<std::size_t>(h.n())] * m * p_inv[static_cast<std::size_t>(h.m())];
  }
  return r;
}

}  // namespace

ParaRep zero_rep(int n_max, Field field) {
  ParaRep r = empty_rep(n_max, field);
  for_each_surjection(n_max, [&](const ParaMap& h) { r.gen_maps.emplace(h, Matrix(field, 0, 0)); });
  return r;
}

ParaRep constant_rep(int n_max, Field field, std::size_t dim) {
  ParaRep r = empty_rep(n_max, field);
  for (auto& d : r.dims) d = dim;
  for (auto& t : r.shifts) t = Matrix::identity(field, dim);
  for_each_surjection(n_max, [&](const ParaMap& h) { r.gen_maps.emplace(h, Matrix::identity(field, dim)); });
  return r;
}

ParaRep random_rep(int n_max, Field field, std::size_t max_dim, Variant variant,
                   std::mt19937_64& rng) {
  const auto top = static_cast<std::size_t>(n_max);
  ParaRep acc = zero_rep(n_max, field);
  std::size_t used = 0;
  int pieces = std::uniform_int_distribution<int>(1, 3)(rng);
  for (int i = 0; i < pieces; ++i) {
    // Piece kinds with their dimension at Par(N): constant 1, slot N+1,
    // augmentation N.
    std::vector<int> fits;
    if (used + 1 <= max_dim) fits.push_back(0);
    if (used + top + 1 <= max_dim) fits.push_back(1);
    if (top > 0 && used + top <= max_dim) fits.push_back(2);
    if (fits.empty()) break;
    int kind = fits[std::uniform_int_distribution<std::size_t>(0, fits.size() - 1)(rng)];
    if (kind == 0) {
      acc = rep_sum(acc, constant_rep(n_max, field, 1));
      used += 1;
    } else if (kind == 1) {
      Field::Elem lambda = 1;
      if (variant == Variant::kPara) {
        lambda = std::uniform_int_distribution<Field::Elem>(1, field.characteristic() - 1)(rng);
      }
      acc = rep_sum(acc, slot_piece(n_max, field, lambda));
      used += top + 1;
    } else {
      acc = rep_sum(acc, augmentation_piece(n_max, field));
      used += top;
    }
  }
  return conjugate(acc, rng);
}

StratSheaf realize_sheaf(const ParaRep& g, const ParaPreorder& i) {
  ConvPoset poset = enumerate_conv(i);
  StratSheafData data{i, g.field, {}, {}};
  for (const auto& e : poset.elements) {
    if (e.n_quotient() > g.N) {
      raise(ErrorCode::kTruncationExceeded, "I/E = Par(" + std::to_string(e.n_quotient()) +
                                                ") exceeds N = " + std::to_string(g.N));
    }
    data.dims.push_back(g.dims[static_cast<std::size_t>(e.n_quotient())]);
  }
  PreordMap id = identity_map(i);
  for (const auto& [lo, up] : poset.covers) {
    ParaMap q = induced_quotient_map(id, poset.elements[lo], poset.elements[up]);
    data.maps.emplace(std::pair{static_cast<std::uint32_t>(lo + 1), static_cast<std::uint32_t>(up + 1)},
                      g.eval(q));
  }
  return validate_sheaf(std::move(data));
}

// ---------------------------------------------------------------------------
// Sheaf systems

std::size_t SystemSkeleton::preorder_index(const ParaPreorder& p) const {
  auto it = preorder_lookup_.find(p.sizes());
  if (it == preorder_lookup_.end()) {
    raise(ErrorCode::kIncompleteSystem, "no sheaf on " + p.to_string());
  }
  return it->second;
}

std::size_t SystemSkeleton::morphism_index(const PreordMap& r) const {
  auto it = morphism_lookup_.find(
      {preorder_index(r.src()), preorder_index(r.tgt()), r.values()});
  if (it == morphism_lookup_.end()) {
    raise(ErrorCode::kIncompleteSystem, "no comparison along " + r.to_string());
  }
  return it->second;
}

std::shared_ptr<const SystemSkeleton> build_skeleton(int max_period) {
  auto s = std::make_shared<SystemSkeleton>();
  s->max_period = max_period;
  for (int p = 1; p <= max_period; ++p) {
    for (auto& pre : enumerate_preorders(p)) s->preorders.push_back(std::move(pre));
  }
  for (std::size_t i = 0; i < s->preorders.size(); ++i) {
    s->preorder_lookup_.emplace(s->preorders[i].sizes(), i);
    s->conv.push_back(enumerate_conv(s->preorders[i]));
  }
  for (std::size_t a = 0; a < s->preorders.size(); ++a) {
    for (std::size_t b = 0; b < s->preorders.size(); ++b) {
      for (const auto& r : enumerate_morphisms(s->preorders[a], s->preorders[b])) {
        for (int k = 0; k <= 1; ++k) {
          PreordMap m = r.shifted(k);
          s->morphism_lookup_.emplace(std::tuple{a, b, m.values()}, s->morphisms.size());
          std::vector<std::size_t> pulled;
          for (const auto& e : s->conv[b].elements) pulled.push_back(pullback_relation(m, e).mask() - 1);
          s->pulled.push_back(std::move(pulled));
          s->morphisms.push_back(std::move(m));
          s->is_canonical.push_back(k == 0);
          s->src_index.push_back(a);
          s->tgt_index.push_back(b);
        }
      }
    }
  }
  return s;
}

SheafSystem realize_system(const ParaRep& g, std::shared_ptr<const SystemSkeleton> skeleton) {
  SheafSystem sys{skeleton, g.field, {}, {}};
  for (const auto& p : skeleton->preorders) sys.sheaves.push_back(realize_sheaf(g, p));
  const auto n = static_cast<std::int64_t>(skeleton->morphisms.size());
  sys.comparisons.resize(skeleton->morphisms.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t ri = 0; ri < n; ++ri) {
    try {
      auto r = static_cast<std::size_t>(ri);
      const PreordMap& m = skeleton->morphisms[r];
      const ConvPoset& tgt_conv = skeleton->conv[skeleton->tgt_index[r]];
      const ConvPoset& src_conv = skeleton->conv[skeleton->src_index[r]];
      std::vector<Matrix> phis;
      for (std::size_t e = 0; e < tgt_conv.size(); ++e) {
        const ConvexRelation& pulled = src_conv.elements[skeleton->pulled[r][e]];
        phis.push_back(g.eval(induced_quotient_map(m, pulled, tgt_conv.elements[e])));
      }
      sys.comparisons[r] = std::move(phis);
    } catch (...) {
#pragma omp critical(bc_realize_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return sys;
}

CheckReport validate_system(const SheafSystem& s) {
  const SystemSkeleton& sk = *s.skeleton;
  CheckReport rep;
  for (std::size_t r = 0; r < sk.morphisms.size(); ++r) {
    const StratSheaf& f_src = s.sheaves[sk.src_index[r]];
    const StratSheaf& f_tgt = s.sheaves[sk.tgt_index[r]];
    const ConvPoset& tgt_conv = sk.conv[sk.tgt_index[r]];
    const ConvPoset& src_conv = sk.conv[sk.src_index[r]];
    const std::string name = sk.morphisms[r].to_string();
    for (std::size_t e = 0; e < tgt_conv.size(); ++e) {
      const Matrix& phi = s.comparisons[r][e];
      bool shaped = phi.rows() == f_tgt.dim_at(e) && phi.cols() == f_src.dim_at(sk.pulled[r][e]);
      rep.record(shaped && is_invertible(phi),
                 "comparison along " + name + " at " + tgt_conv.elements[e].to_string() +
                     " is not an isomorphism");
    }
    for (const auto& [lo, up] : tgt_conv.covers) {
      Matrix left = f_tgt.edge(static_cast<std::uint32_t>(lo + 1), static_cast<std::uint32_t>(up + 1)) *
                    s.comparisons[r][lo];
      Matrix right = s.comparisons[r][up] *
                     f_src.map_between(src_conv.elements[sk.pulled[r][lo]],
                                       src_conv.elements[sk.pulled[r][up]]);
      rep.record(left == right, "comparison along " + name + " is not natural at " +
                                    tgt_conv.elements[lo].to_string());
    }
  }
  std::vector<std::vector<std::size_t>> canonical_into(sk.preorders.size());
  for (std::size_t r = 0; r < sk.morphisms.size(); ++r) {
    if (sk.is_canonical[r]) canonical_into[sk.tgt_index[r]].push_back(r);
  }
  const auto n = static_cast<std::int64_t>(sk.morphisms.size());
#pragma omp parallel
  {
    CheckReport local;
#pragma omp for schedule(dynamic, 8)
    for (std::int64_t r2i = 0; r2i < n; ++r2i) {
      auto r2 = static_cast<std::size_t>(r2i);
      if (!sk.is_canonical[r2]) continue;
      const PreordMap& g = sk.morphisms[r2];
      const ConvPoset& tgt_conv = sk.conv[sk.tgt_index[r2]];
      for (std::size_t r1 : canonical_into[sk.src_index[r2]]) {
        const PreordMap& f = sk.morphisms[r1];
        std::vector<std::int64_t> v;
        v.reserve(f.values().size());
        for (auto x : f.values()) v.push_back(g(x));
        std::size_t c = 0;
        try {
          c = sk.morphism_index(is_valid_morphism(f.src(), g.tgt(), v));
        } catch (const Error& err) {
          local.record(false, "composite " + g.to_string() + " o " + f.to_string() +
                                  " has no comparison: " + err.what());
          continue;
        }
        for (std::size_t e = 0; e < tgt_conv.size(); ++e) {
          local.record(s.comparisons[c][e] == s.comparisons[r2][e] *
                                                  s.comparisons[r1][sk.pulled[r2][e]],
                       "cocycle fails for " + g.to_string() + " o " + f.to_string() + " at " +
                           tgt_conv.elements[e].to_string());
        }
      }
    }
#pragma omp critical(bc_system_merge)
    rep.merge(local);
  }
  return rep;
}

ParaRep recover_rep(const SheafSystem& s, int n_max) {
  const SystemSkeleton& sk = *s.skeleton;
  ParaRep g;
  g.N = n_max;
  g.field = s.field;
  std::vector<std::size_t> simplex_index;
  for (int n = 0; n <= n_max; ++n) {
    std::size_t idx = sk.preorder_index(ParaPreorder::simplex(n));
    simplex_index.push_back(idx);
    const StratSheaf& f = s.sheaves[idx];
    g.dims.push_back(f.dim(ConvexRelation::least(f.base())));
  }
  for (int n = 0; n <= n_max; ++n) {
    std::size_t least = sk.conv[simplex_index[static_cast<std::size_t>(n)]].least_index();
    std::size_t r = sk.morphism_index(from_para_map(ParaMap::period_shift(n)));
    g.shifts.push_back(s.comparisons[r][least]);
  }
  for_each_surjection(n_max, [&](const ParaMap& q) {
    std::size_t r = sk.morphism_index(from_para_map(q));
    std::size_t least_tgt = sk.conv[simplex_index[static_cast<std::size_t>(q.n())]].least_index();
    const StratSheaf& f_src = s.sheaves[simplex_index[static_cast<std::size_t>(q.m())]];
    const ConvexRelation& e_q = sk.conv[sk.src_index[r]].elements[sk.pulled[r][least_tgt]];
    g.gen_maps.emplace(q, s.comparisons[r][least_tgt] *
                              f_src.map_between(ConvexRelation::least(f_src.base()), e_q));
  });
  return g;
}

// ---------------------------------------------------------------------------
// Conv~

ConvexRelation ConvTilde::relation(std::size_t object) const {
  return ConvexRelation::from_mask(preorders[objects[object].preorder], objects[object].mask);
}

std::size_t ConvTilde::cartesian_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [](const ConvTildeEdge& e) { return e.cartesian; }));
}

ConvTilde build_conv_tilde(int n_max, Variant variant) {
  if (n_max < 0) raise(ErrorCode::kInvalidArgument, "N must be >= 0");
  if (n_max > kMaxConvTildeN) {
    raise(ErrorCode::kResourceBound, "Conv~ is only built for N <= " + std::to_string(kMaxConvTildeN));
  }
  ConvTilde c;
  c.variant = variant;
  c.N = n_max;
  for (int p = 1; p <= n_max + 1; ++p) {
    for (auto& pre : enumerate_preorders(p)) c.preorders.push_back(std::move(pre));
  }
  for (std::size_t i = 0; i < c.preorders.size(); ++i) {
    c.object_offset.push_back(c.objects.size());
    std::uint32_t full = (1U << c.preorders[i].class_count()) - 1U;
    for (std::uint32_t mask = 1; mask <= full; ++mask) c.objects.push_back({i, mask});
  }
  for (std::size_t a = 0; a < c.preorders.size(); ++a) {
    const std::uint32_t full_a = (1U << c.preorders[a].class_count()) - 1U;
    for (std::size_t b = 0; b < c.preorders.size(); ++b) {
      const std::uint32_t full_b = (1U << c.preorders[b].class_count()) - 1U;
      for (auto& r : enumerate_morphisms(c.preorders[a], c.preorders[b])) {
        std::size_t mi = c.morphisms.size();
        for (std::uint32_t eb = 1; eb <= full_b; ++eb) {
          std::uint32_t pm = pullback_relation(r, ConvexRelation::from_mask(c.preorders[b], eb)).mask();
          // Every E_I keeping at least the gaps of r^* E_J.
          std::uint32_t free = full_a & ~pm;
          for (std::uint32_t sub = free;; sub = (sub - 1) & free) {
            std::uint32_t ea = pm | sub;
            c.edges.push_back({c.object_index(a, ea), c.object_index(b, eb), mi, ea == pm});
            if (sub == 0) break;
          }
        }
        c.morphisms.push_back(std::move(r));
      }
    }
  }
  return c;
}

bool AdjunctionReport::pass() const {
  return triangles.pass && unit_naturality.pass && hom_bijection.pass && fully_faithful.pass &&
         cartesian.pass;
}

namespace {

// L applied to an edge.
ParaMap apply_l(const ConvTilde& c, const ConvTildeEdge& e) {
  return induced_quotient_map(c.morphisms[e.morphism], c.relation(e.src), c.relation(e.tgt));
}

}  // namespace

AdjunctionReport check_localization_adjunction(const ConvTilde& c) {
  AdjunctionReport rep;
  std::vector<PreordMap> unit;
  for (std::size_t x = 0; x < c.objects.size(); ++x) {
    const ParaPreorder& i = c.preorders[c.objects[x].preorder];
    ConvexRelation e = c.relation(x);
    auto [par, p] = quotient_by_relation(i, e);
    ParaPreorder target = ParaPreorder::simplex(par.n);
    ConvexRelation least = ConvexRelation::least(target);
    const std::string name = e.to_string();
    rep.triangles.record(pullback_relation(p, least) == e,
                         "unit at " + name + " is not a Cartesian morphism");
    rep.triangles.record(induced_quotient_map(p, e, least) == ParaMap::identity(par.n),
                         "counit o L(unit) is not the identity at " + name);
    if (i.is_simplex() && e == ConvexRelation::least(i)) {
      rep.triangles.record(p == identity_map(i),
                           "R(counit) o unit is not the identity at " + i.to_string());
      rep.cartesian.record(pullback_relation(identity_map(i), e) == e,
                           "identity of " + name + " is not Cartesian");
    }
    unit.push_back(std::move(p));
  }

  // Hom(L X, J) against Conv~(X, R J) for every object X and parasimplex J.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<ParaMap>> into_simplex;
  for (const auto& edge : c.edges) {
    const ParaMap l = apply_l(c, edge);
    const PreordMap& r = c.morphisms[edge.morphism];
    const std::string name = r.to_string() + " from " + c.relation(edge.src).to_string() + " to " +
                             c.relation(edge.tgt).to_string();
    bool iso = classify(l) == MapClass::kBoth;
    rep.cartesian.record(edge.cartesian == iso,
                         edge.cartesian ? "L does not invert the Cartesian edge " + name
                                        : "L inverts the non-Cartesian edge " + name);
    PreordMap lhs = compose(from_para_map(l), unit[edge.src]);
    PreordMap rhs = compose(unit[edge.tgt], r);
    rep.unit_naturality.record(lhs == rhs, "unit is not natural along " + name);
    if (c.variant == Variant::kPara) {
      for (int k = -2; k <= 2; ++k) {
        ParaMap shifted = induced_quotient_map(r.shifted(k), c.relation(edge.src), c.relation(edge.tgt));
        rep.unit_naturality.record(shifted == shift_action(l, k),
                                   "L does not commute with the shift by " + std::to_string(k) +
                                       " along " + name);
      }
    }
    const ParaPreorder& j = c.preorders[c.objects[edge.tgt].preorder];
    if (j.is_simplex() && c.objects[edge.tgt].mask == (1U << j.class_count()) - 1U) {
      into_simplex[{edge.src, static_cast<std::size_t>(j.period() - 1)}].push_back(l);
    }
  }
  for (std::size_t x = 0; x < c.objects.size(); ++x) {
    const ConvexRelation e = c.relation(x);
    const ParaPreorder& i = c.preorders[c.objects[x].preorder];
    const bool is_r_image = i.is_simplex() && e == ConvexRelation::least(i);
    for (int n = 0; n <= c.N; ++n) {
      std::vector<ParaMap> images = into_simplex[{x, static_cast<std::size_t>(n)}];
      std::set<CycMap> image_orbits;
      std::set<ParaMap> image_set(images.begin(), images.end());
      for (const auto& l : images) image_orbits.insert(cyc_canonicalize(l));
      std::set<CycMap> expected;
      for (const auto& h : surjections(e.n_quotient(), n)) expected.insert(h);
      bool bijective = images.size() == expected.size();
      if (c.variant == Variant::kPara) {
        std::set<CycMap> as_reps;
        for (const auto& l : image_set) as_reps.insert(CycMap(l));
        bool canonical = std::all_of(images.begin(), images.end(),
                                     [](const ParaMap& l) { return l.shift() == 0; });
        bijective = bijective && canonical && image_set.size() == images.size() && as_reps == expected;
      } else {
        bijective = bijective && image_orbits.size() == images.size() && image_orbits == expected;
      }
      const std::string what = "Hom(L " + e.to_string() + ", Par(" + std::to_string(n) +
                               ")) is not in bijection with Conv~(" + e.to_string() +
                               ", R Par(" + std::to_string(n) + "))";
      rep.hom_bijection.record(bijective, what);
      if (is_r_image) rep.fully_faithful.record(bijective, what);
    }
  }
  return rep;
}

AdjunctionReport check_localization_adjunction(int n_max, Variant variant) {
  return check_localization_adjunction(build_conv_tilde(n_max, variant));
}

}  // namespace bc
