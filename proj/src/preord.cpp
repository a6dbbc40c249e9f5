#include "brokencycle/preord.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "brokencycle/error.hpp"

namespace bc {

ParaPreorder::ParaPreorder(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) raise(ErrorCode::kInvalidArgument, "a preorder needs at least one class");
  for (std::size_t c = 0; c < sizes_.size(); ++c) {
    if (sizes_[c] <= 0) raise(ErrorCode::kInvalidArgument, "class sizes must be positive");
    class_start_.push_back(period_);
    for (int s = 0; s < sizes_[c]; ++s) slot_class_.push_back(static_cast<int>(c));
    period_ += sizes_[c];
  }
}

ParaPreorder ParaPreorder::simplex(int n) {
  if (n < 0) raise(ErrorCode::kInvalidArgument, "n must be >= 0");
  return ParaPreorder(std::vector<int>(static_cast<std::size_t>(n) + 1, 1));
}

std::int64_t ParaPreorder::global_class(std::int64_t x) const {
  std::int64_t k = floor_div(x, period_);
  auto slot = static_cast<int>(x - k * period_);
  return k * class_count() + class_of_slot(slot);
}

std::string ParaPreorder::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t c = 0; c < sizes_.size(); ++c) os << (c ? "," : "") << sizes_[c];
  os << ")";
  return os.str();
}

std::vector<ParaPreorder> enumerate_preorders(int period) {
  if (period <= 0) raise(ErrorCode::kInvalidArgument, "period must be positive");
  std::vector<ParaPreorder> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int s = 1; s <= remaining; ++s) {
      parts.push_back(s);
      self(self, remaining - s);
      parts.pop_back();
    }
  };
  rec(rec, period);
  return out;
}

namespace {

struct Violation {
  ErrorCode code;
  std::string what;
};

std::optional<Violation> check_morphism(const ParaPreorder& src, const ParaPreorder& tgt,
                                        std::span<const std::int64_t> v) {
  if (v.size() != static_cast<std::size_t>(src.period())) {
    return Violation{ErrorCode::kInvalidArgument,
                     "expected " + std::to_string(src.period()) + " values"};
  }
  const std::int64_t k_tgt = tgt.class_count();
  for (std::size_t a = 0; a + 1 < v.size(); ++a) {
    std::int64_t ga = tgt.global_class(v[a]);
    std::int64_t gb = tgt.global_class(v[a + 1]);
    bool same_src = src.class_of_slot(static_cast<int>(a)) ==
                    src.class_of_slot(static_cast<int>(a + 1));
    if (same_src && ga != gb) {
      return Violation{ErrorCode::kNotMonotone, "equivalent elements e_" + std::to_string(a) +
                                                    ", e_" + std::to_string(a + 1) +
                                                    " land in different classes"};
    }
    if (gb < ga) {
      return Violation{ErrorCode::kNotMonotone,
                       "order reversed between e_" + std::to_string(a) + " and e_" +
                           std::to_string(a + 1)};
    }
  }
  std::int64_t first = tgt.global_class(v.front());
  std::int64_t last = tgt.global_class(v.back());
  if (last > first + k_tgt) {
    return Violation{ErrorCode::kNotMonotone, "image of e_m passes the image of e_0 + 1"};
  }
  std::set<std::int64_t> hit;
  for (auto x : v) hit.insert(floor_mod(tgt.global_class(x), k_tgt));
  if (static_cast<std::int64_t>(hit.size()) != k_tgt) {
    return Violation{ErrorCode::kNotEssentiallySurjective,
                     "only " + std::to_string(hit.size()) + " of " + std::to_string(k_tgt) +
                         " target classes are hit"};
  }
  return std::nullopt;
}

}  // namespace

PreordMap is_valid_morphism(const ParaPreorder& src, const ParaPreorder& tgt,
                            std::span<const std::int64_t> values) {
  if (auto bad = check_morphism(src, tgt, values)) raise(bad->code, bad->what);
  return PreordMap(src, tgt, std::vector<std::int64_t>(values.begin(), values.end()));
}

std::int64_t PreordMap::operator()(std::int64_t x) const {
  std::int64_t k = floor_div(x, src_.period());
  auto a = static_cast<std::size_t>(x - k * src_.period());
  return values_[a] + k * tgt_.period();
}

std::int64_t PreordMap::class_image(std::int64_t c) const {
  std::int64_t k = floor_div(c, src_.class_count());
  auto cls = static_cast<int>(c - k * src_.class_count());
  return tgt_.global_class((*this)(k * src_.period() + src_.first_slot_of_class(cls)));
}

PreordMap PreordMap::shifted(std::int64_t k) const {
  std::vector<std::int64_t> v = values_;
  for (auto& x : v) x += k * tgt_.period();
  return PreordMap(src_, tgt_, std::move(v));
}

PreordMap PreordMap::canonical() const { return shifted(-floor_div(values_.front(), tgt_.period())); }

std::string PreordMap::to_string() const {
  std::ostringstream os;
  os << src_.to_string() << "->" << tgt_.to_string() << " [";
  for (std::size_t a = 0; a < values_.size(); ++a) os << (a ? "," : "") << values_[a];
  os << "]";
  return os.str();
}

PreordMap identity_map(const ParaPreorder& p) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(p.period()));
  for (int a = 0; a < p.period(); ++a) v[static_cast<std::size_t>(a)] = a;
  return is_valid_morphism(p, p, v);
}

PreordMap compose(const PreordMap& g, const PreordMap& f) {
  if (!(f.tgt() == g.src())) {
    raise(ErrorCode::kTypeMismatch, "cannot compose " + g.to_string() + " after " + f.to_string());
  }
  std::vector<std::int64_t> v;
  for (int a = 0; a < f.src().period(); ++a) v.push_back(g(f(a)));
  return is_valid_morphism(f.src(), g.tgt(), v);
}

std::vector<PreordMap> enumerate_morphisms(const ParaPreorder& src, const ParaPreorder& tgt,
                                           std::size_t cap) {
  std::vector<PreordMap> out;
  std::vector<std::int64_t> v(static_cast<std::size_t>(src.period()));
  const std::int64_t k_tgt = tgt.class_count();
  // First and one-past-last global element of a global class of the target.
  auto class_begin = [&](std::int64_t c) {
    std::int64_t k = floor_div(c, k_tgt);
    return k * tgt.period() + tgt.first_slot_of_class(static_cast<int>(c - k * k_tgt));
  };
  auto rec = [&](auto&& self, std::size_t a) -> void {
    if (a == v.size()) {
      if (check_morphism(src, tgt, v)) return;
      if (out.size() >= cap) raise(ErrorCode::kResourceBound, "morphism count exceeds cap");
      out.push_back(is_valid_morphism(src, tgt, v));
      return;
    }
    std::int64_t g_prev = tgt.global_class(v[a - 1]);
    std::int64_t lo = class_begin(g_prev);
    std::int64_t hi = class_begin(tgt.global_class(v[0]) + k_tgt + 1);
    if (src.class_of_slot(static_cast<int>(a)) == src.class_of_slot(static_cast<int>(a - 1))) {
      hi = class_begin(g_prev + 1);
    }
    for (std::int64_t x = lo; x < hi; ++x) {
      v[a] = x;
      self(self, a + 1);
    }
  };
  for (std::int64_t x0 = 0; x0 < tgt.period(); ++x0) {
    v[0] = x0;
    rec(rec, 1);
  }
  return out;
}

ConvexRelation::ConvexRelation(ParaPreorder base, std::uint32_t mask)
    : base_(std::move(base)), mask_(mask) {}

ConvexRelation::ConvexRelation(ParaPreorder base, std::span<const int> gaps)
    : base_(std::move(base)) {
  if (gaps.empty()) raise(ErrorCode::kInvalidArgument, "a convex relation keeps at least one gap");
  if (base_.class_count() > 31) raise(ErrorCode::kResourceBound, "too many classes");
  for (int b : gaps) {
    if (b < 0 || b >= base_.class_count()) {
      raise(ErrorCode::kInvalidArgument, "boundary " + std::to_string(b) + " out of range");
    }
    mask_ |= 1U << b;
  }
}

ConvexRelation ConvexRelation::from_mask(ParaPreorder base, std::uint32_t mask) {
  if (base.class_count() > 31) raise(ErrorCode::kResourceBound, "too many classes");
  std::uint32_t full = (1U << base.class_count()) - 1U;
  if (mask == 0 || (mask & ~full) != 0) {
    raise(ErrorCode::kInvalidArgument, "mask " + std::to_string(mask) + " out of range");
  }
  return ConvexRelation(std::move(base), mask);
}

ConvexRelation ConvexRelation::least(const ParaPreorder& base) {
  return from_mask(base, (1U << base.class_count()) - 1U);
}

std::vector<int> ConvexRelation::gaps() const {
  std::vector<int> out;
  for (int b = 0; b < base_.class_count(); ++b) {
    if (has_gap(b)) out.push_back(b);
  }
  return out;
}

int ConvexRelation::gap_count() const { return std::popcount(mask_); }

std::int64_t ConvexRelation::quotient_class(std::int64_t x) const {
  const std::int64_t k = base_.class_count();
  std::int64_t c = base_.global_class(x);
  std::int64_t period = floor_div(c, k);
  auto cls = static_cast<int>(c - period * k);
  // Surviving boundaries strictly before this class; past the last one the
  // count reaches gap_count(), which is class 0 of the next period.
  std::uint32_t below = mask_ & ((1U << cls) - 1U);
  return period * gap_count() + std::popcount(below);
}

bool ConvexRelation::leq(const ConvexRelation& other) const {
  if (!(base_ == other.base_)) raise(ErrorCode::kBaseMismatch, "relations on different bases");
  return (other.mask_ & ~mask_) == 0;
}

std::string ConvexRelation::to_string() const {
  std::ostringstream os;
  os << base_.to_string() << "{";
  auto g = gaps();
  for (std::size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
  os << "}";
  return os.str();
}

ConvPoset enumerate_conv(const ParaPreorder& p) {
  const int k = p.class_count();
  if (k > kMaxConvClasses) {
    raise(ErrorCode::kResourceBound, "Conv(I) with " + std::to_string(k) + " classes is too large");
  }
  ConvPoset out;
  out.base = p;
  const std::uint32_t full = (1U << k) - 1U;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    out.elements.push_back(ConvexRelation::from_mask(p, mask));
  }
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (std::popcount(mask) < 2) continue;
    for (int b = 0; b < k; ++b) {
      if ((mask >> b) & 1U) out.covers.emplace_back(mask - 1, (mask & ~(1U << b)) - 1);
    }
  }
  return out;
}

std::pair<Parasimplex, PreordMap> quotient_by_relation(const ParaPreorder& p,
                                                       const ConvexRelation& e) {
  if (!(e.base() == p)) raise(ErrorCode::kBaseMismatch, "relation is not on " + p.to_string());
  const int n = e.n_quotient();
  std::vector<std::int64_t> v;
  for (int a = 0; a < p.period(); ++a) v.push_back(e.quotient_class(a));
  return {Parasimplex{n}, is_valid_morphism(p, ParaPreorder::simplex(n), v)};
}

std::pair<Parasimplex, PreordMap> quotient_by_sim(const ParaPreorder& p) {
  return quotient_by_relation(p, ConvexRelation::least(p));
}

ConvexRelation pullback_relation(const PreordMap& r, const ConvexRelation& e) {
  if (!(e.base() == r.tgt())) {
    raise(ErrorCode::kBaseMismatch, "relation base " + e.base().to_string() +
                                        " differs from map target " + r.tgt().to_string());
  }
  const ParaPreorder& src = r.src();
  std::uint32_t mask = 0;
  for (int b = 0; b < src.class_count(); ++b) {
    std::int64_t x = src.first_slot_of_class(b);
    std::int64_t y = b + 1 < src.class_count() ? src.first_slot_of_class(b + 1) : src.period();
    if (!e.related(r(x), r(y))) mask |= 1U << b;
  }
  if (mask == 0) raise(ErrorCode::kInvalidArgument, "pullback relation lost every gap");
  return ConvexRelation::from_mask(src, mask);
}

ParaMap induced_quotient_map(const PreordMap& r, const ConvexRelation& e_src,
                             const ConvexRelation& e_tgt) {
  if (!(e_src.base() == r.src()) || !(e_tgt.base() == r.tgt())) {
    raise(ErrorCode::kBaseMismatch, "relations do not match the map " + r.to_string());
  }
  if (!e_src.leq(pullback_relation(r, e_tgt))) {
    raise(ErrorCode::kInvalidArgument, r.to_string() + " does not carry " + e_src.to_string() +
                                           " into " + e_tgt.to_string());
  }
  const int g = e_src.gap_count();
  std::vector<std::int64_t> v(static_cast<std::size_t>(g));
  std::vector<bool> seen(static_cast<std::size_t>(g), false);
  for (int a = 0; a < r.src().period(); ++a) {
    std::int64_t q = e_src.quotient_class(a);
    if (q < g && !seen[static_cast<std::size_t>(q)]) {
      seen[static_cast<std::size_t>(q)] = true;
      v[static_cast<std::size_t>(q)] = e_tgt.quotient_class(r(a));
    }
  }
  return ParaMap::from_values(g - 1, e_tgt.n_quotient(), v);
}

ParaMap as_para_map(const PreordMap& r) {
  if (!r.src().is_simplex() || !r.tgt().is_simplex()) {
    raise(ErrorCode::kTypeMismatch, r.to_string() + " is not a map of parasimplices");
  }
  return ParaMap::from_values(r.src().period() - 1, r.tgt().period() - 1, r.values());
}

PreordMap from_para_map(const ParaMap& f) {
  auto v = f.full_values();
  return is_valid_morphism(ParaPreorder::simplex(f.m()), ParaPreorder::simplex(f.n()), v);
}

// ---------------------------------------------------------------------------
// Amalgams

std::int64_t amalgam_class(const Amalgam& k, const ParaPreorder& i, const ParaPreorder& j,
                           bool from_j, std::int64_t x) {
  const ParaPreorder& p = from_j ? j : i;
  const auto& table = from_j ? k.j_class : k.i_class;
  std::int64_t c = p.global_class(x);
  std::int64_t period = floor_div(c, p.class_count());
  auto cls = static_cast<std::size_t>(c - period * p.class_count());
  return table[cls] + period * k.classes_per_period;
}

namespace {

// A class of I or J in a given period; the amalgam order only sees classes.
struct Node {
  bool from_j;
  int cls;
  std::int64_t period;
};

std::int64_t node_value(const Amalgam& k, const Node& n) {
  const auto& table = n.from_j ? k.j_class : k.i_class;
  return table[static_cast<std::size_t>(n.cls)] + n.period * k.classes_per_period;
}

std::vector<Node> window_nodes(const ParaPreorder& i, const ParaPreorder& j, int w) {
  std::vector<Node> out;
  for (std::int64_t p = -w; p <= w; ++p) {
    for (int c = 0; c < i.class_count(); ++c) out.push_back({false, c, p});
    for (int c = 0; c < j.class_count(); ++c) out.push_back({true, c, p});
  }
  return out;
}

// Strictly increasing sequences of length `len` drawn from [lo, hi).
void increasing_sequences(std::int64_t lo, std::int64_t hi, int len,
                          std::vector<std::vector<std::int64_t>>& out) {
  std::vector<std::int64_t> cur;
  auto rec = [&](auto&& self, std::int64_t from) -> void {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t x = from; x < hi; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, lo);
}

}  // namespace

bool amalgam_leq(const Amalgam& a, const Amalgam& b, const ParaPreorder& i,
                 const ParaPreorder& j) {
  // Class values lie in (-P, 2P) in period 0, so three periods either side
  // decide every comparison the same way in both amalgams.
  auto nodes = window_nodes(i, j, 3);
  for (const auto& x : nodes) {
    if (x.period != 0) continue;
    for (const auto& y : nodes) {
      if (node_value(a, x) <= node_value(a, y) && node_value(b, x) > node_value(b, y)) {
        return false;
      }
    }
  }
  return true;
}

AmalgamPoset enumerate_amalgams(const ParaPreorder& i, const ParaPreorder& j) {
  if (i.period() + j.period() > kMaxAmalgamPeriod) {
    raise(ErrorCode::kResourceBound, "combined period " + std::to_string(i.period() + j.period()) +
                                         " exceeds " + std::to_string(kMaxAmalgamPeriod));
  }
  AmalgamPoset out;
  out.i = i;
  out.j = j;
  const int ki = i.class_count();
  const int kj = j.class_count();
  for (int p = std::max(ki, kj); p <= ki + kj; ++p) {
    std::vector<std::vector<std::int64_t>> i_tails;
    increasing_sequences(1, p, ki - 1, i_tails);
    for (const auto& tail : i_tails) {
      std::vector<std::int64_t> ic{0};
      ic.insert(ic.end(), tail.begin(), tail.end());
      for (std::int64_t d0 = -p + 1; d0 < p; ++d0) {
        std::vector<std::vector<std::int64_t>> j_tails;
        increasing_sequences(d0 + 1, d0 + p, kj - 1, j_tails);
        for (const auto& jt : j_tails) {
          std::vector<std::int64_t> jc{d0};
          jc.insert(jc.end(), jt.begin(), jt.end());
          std::set<std::int64_t> residues;
          for (auto c : ic) residues.insert(floor_mod(c, p));
          for (auto c : jc) residues.insert(floor_mod(c, p));
          if (static_cast<int>(residues.size()) == p) out.elements.push_back({p, ic, jc});
        }
      }
    }
  }
  std::sort(out.elements.begin(), out.elements.end());
  const std::size_t n = out.elements.size();
  out.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      out.leq[a][b] = amalgam_leq(out.elements[a], out.elements[b], i, j);
    }
  }
  return out;
}

std::optional<Amalgam> join_amalgam(const Amalgam& a, const Amalgam& b, const ParaPreorder& i,
                                    const ParaPreorder& j) {
  constexpr int kWindow = 4;
  auto nodes = window_nodes(i, j, kWindow);
  const std::size_t n = nodes.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      r[u][v] = node_value(a, nodes[u]) <= node_value(a, nodes[v]) ||
                node_value(b, nodes[u]) <= node_value(b, nodes[v]);
    }
  }
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t u = 0; u < n; ++u) {
      if (!r[u][w]) continue;
      for (std::size_t v = 0; v < n; ++v) {
        if (r[w][v]) r[u][v] = true;
      }
    }
  }
  auto central = [&](std::size_t u) { return nodes[u].period >= -1 && nodes[u].period <= 1; };
  auto find = [&](bool from_j, int cls, std::int64_t period) {
    for (std::size_t u = 0; u < n; ++u) {
      if (nodes[u].from_j == from_j && nodes[u].cls == cls && nodes[u].period == period) return u;
    }
    return n;
  };
  for (std::size_t u = 0; u < n; ++u) {
    if (!central(u)) continue;
    for (std::size_t v = 0; v < n; ++v) {
      if (!central(v)) continue;
      if (!r[u][v] && !r[v][u]) return std::nullopt;
      // The closure must restrict to the original order on each summand.
      if (nodes[u].from_j == nodes[v].from_j) {
        const ParaPreorder& p = nodes[u].from_j ? j : i;
        std::int64_t cu = nodes[u].period * p.class_count() + nodes[u].cls;
        std::int64_t cv = nodes[v].period * p.class_count() + nodes[v].cls;
        if (r[u][v] != (cu <= cv)) return std::nullopt;
      }
    }
  }
  // Rank of a node: number of closure classes strictly below it.
  auto rank = [&](std::size_t u) {
    std::set<std::size_t> reps;
    for (std::size_t v = 0; v < n; ++v) {
      if (r[v][u] && !r[u][v]) {
        std::size_t rep = v;
        for (std::size_t w = 0; w < n; ++w) {
          if (r[w][v] && r[v][w]) {
            rep = w;
            break;
          }
        }
        reps.insert(rep);
      }
    }
    return static_cast<std::int64_t>(reps.size());
  };
  std::int64_t base = rank(find(false, 0, 0));
  std::int64_t p = rank(find(false, 0, 1)) - base;
  if (p <= 0) return std::nullopt;
  Amalgam out;
  out.classes_per_period = static_cast<int>(p);
  for (int c = 0; c < i.class_count(); ++c) out.i_class.push_back(rank(find(false, c, 0)) - base);
  for (int c = 0; c < j.class_count(); ++c) out.j_class.push_back(rank(find(true, c, 0)) - base);
  if (rank(find(true, 0, 1)) - rank(find(true, 0, 0)) != p) return std::nullopt;
  if (out.j_class.front() <= -p || out.j_class.front() >= p) return std::nullopt;
  for (std::size_t u = 0; u < n; ++u) {
    if (!central(u)) continue;
    for (std::size_t v = 0; v < n; ++v) {
      if (!central(v)) continue;
      if (r[u][v] != (node_value(out, nodes[u]) <= node_value(out, nodes[v]))) return std::nullopt;
    }
  }
  return out;
}

}  // namespace bc
