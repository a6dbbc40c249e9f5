#include "brokencycle/paracat.hpp"

#include <sstream>

#include "brokencycle/error.hpp"

namespace bc {

namespace {

void check_object(int n, const char* what) {
  if (n < 0) raise(ErrorCode::kInvalidArgument, std::string(what) + " must be >= 0");
}

}  // namespace

ParaMap ParaMap::from_values(int m, int n, std::span<const std::int64_t> global_values) {
  check_object(m, "source index m");
  check_object(n, "target index n");
  if (global_values.size() != static_cast<std::size_t>(m) + 1) {
    raise(ErrorCode::kInvalidArgument, "expected " + std::to_string(m + 1) + " values, got " +
                                           std::to_string(global_values.size()));
  }
  const std::int64_t period = n + 1;
  for (std::size_t a = 1; a < global_values.size(); ++a) {
    if (global_values[a] < global_values[a - 1]) {
      raise(ErrorCode::kNotMonotone, "values decrease at slot " + std::to_string(a));
    }
  }
  if (global_values.back() > global_values.front() + period) {
    raise(ErrorCode::kNotMonotone, "last value exceeds the translate of the first");
  }
  std::int64_t shift = floor_div(global_values.front(), period);
  std::vector<std::int64_t> values(global_values.begin(), global_values.end());
  for (auto& v : values) v -= shift * period;
  return ParaMap(m, n, std::move(values), shift);
}

ParaMap ParaMap::from_codes(int m, int n, std::span<const ElementCode> codes) {
  Parasimplex tgt{n};
  std::vector<std::int64_t> values;
  values.reserve(codes.size());
  for (const auto& c : codes) {
    if (c.slot < 0 || c.slot > n) {
      raise(ErrorCode::kInvalidArgument, "slot " + std::to_string(c.slot) + " outside [0, n]");
    }
    values.push_back(tgt.to_global(c));
  }
  return from_values(m, n, values);
}

ParaMap ParaMap::identity(int n) {
  check_object(n, "n");
  std::vector<std::int64_t> values(static_cast<std::size_t>(n) + 1);
  for (int a = 0; a <= n; ++a) values[a] = a;
  return ParaMap(n, n, std::move(values), 0);
}

ParaMap ParaMap::period_shift(int n) { return shift_action(identity(n), 1); }

ParaMap ParaMap::rotation(int n, std::int64_t steps) {
  check_object(n, "n");
  std::vector<std::int64_t> values(static_cast<std::size_t>(n) + 1);
  for (int a = 0; a <= n; ++a) values[a] = a + steps;
  return from_values(n, n, values);
}

std::int64_t ParaMap::operator()(std::int64_t x) const {
  const std::int64_t src_period = m_ + 1;
  std::int64_t k = floor_div(x, src_period);
  auto a = static_cast<std::size_t>(x - k * src_period);
  return values_[a] + (k + shift_) * (n_ + 1);
}

std::vector<std::int64_t> ParaMap::full_values() const {
  std::vector<std::int64_t> out = values_;
  for (auto& v : out) v += shift_ * (n_ + 1);
  return out;
}

std::vector<ElementCode> ParaMap::codes() const {
  std::vector<ElementCode> out;
  Parasimplex tgt{n_};
  for (auto v : full_values()) out.push_back(tgt.to_code(v));
  return out;
}

ParaMap ParaMap::canonical() const { return ParaMap(m_, n_, values_, 0); }

std::string ParaMap::to_string() const {
  std::ostringstream os;
  os << "Par(" << m_ << ")->Par(" << n_ << ") [";
  auto cs = codes();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    os << (i ? ", " : "") << "(" << cs[i].period << "," << cs[i].slot << ")";
  }
  os << "] shift " << shift_;
  return os.str();
}

ParaMap compose(const ParaMap& g, const ParaMap& f) {
  if (f.n() != g.m()) {
    raise(ErrorCode::kTypeMismatch, "cannot compose " + g.to_string() + " after " + f.to_string());
  }
  std::vector<std::int64_t> values;
  values.reserve(static_cast<std::size_t>(f.m()) + 1);
  for (std::int64_t a = 0; a <= f.m(); ++a) values.push_back(g(f(a)));
  return ParaMap::from_values(f.m(), g.n(), values);
}

CycMap compose(const CycMap& g, const CycMap& f) { return CycMap(compose(g.rep(), f.rep())); }

bool is_injective(const ParaMap& f) {
  const auto& v = f.values();
  for (std::size_t a = 1; a < v.size(); ++a) {
    if (v[a] == v[a - 1]) return false;
  }
  return v.back() < v.front() + f.n() + 1;
}

bool is_surjective(const ParaMap& f) {
  const auto& v = f.values();
  for (std::size_t a = 1; a < v.size(); ++a) {
    if (v[a] - v[a - 1] > 1) return false;
  }
  return v.front() + f.n() + 1 - v.back() <= 1;
}

MapClass classify(const ParaMap& f) {
  bool inj = is_injective(f);
  bool surj = is_surjective(f);
  if (inj && surj) return MapClass::kBoth;
  if (inj) return MapClass::kInjective;
  if (surj) return MapClass::kSurjective;
  return MapClass::kNeither;
}

std::string to_string(MapClass c) {
  switch (c) {
    case MapClass::kInjective: return "injective";
    case MapClass::kSurjective: return "surjective";
    case MapClass::kBoth: return "both";
    case MapClass::kNeither: return "neither";
  }
  return "neither";
}

std::string to_string(HomKind k) {
  switch (k) {
    case HomKind::kAll: return "all";
    case HomKind::kInj: return "inj";
    case HomKind::kSurj: return "surj";
  }
  return "all";
}

HomKind parse_hom_kind(const std::string& s) {
  if (s == "all") return HomKind::kAll;
  if (s == "inj") return HomKind::kInj;
  if (s == "surj") return HomKind::kSurj;
  raise(ErrorCode::kInvalidArgument, "kind must be all, inj or surj, got '" + s + "'");
}

namespace {

struct HomEnumerator {
  int m;
  int n;
  HomKind kind;
  std::size_t cap;
  std::vector<std::int64_t> current;
  std::vector<CycMap> out;

  void run() {
    current.assign(static_cast<std::size_t>(m) + 1, 0);
    for (std::int64_t v0 = 0; v0 <= n; ++v0) {
      current[0] = v0;
      extend(1);
    }
  }

  void extend(std::size_t a) {
    if (a == current.size()) {
      ParaMap f = ParaMap::from_values(m, n, current);
      bool keep = kind == HomKind::kAll || (kind == HomKind::kInj && is_injective(f)) ||
                  (kind == HomKind::kSurj && is_surjective(f));
      if (!keep) return;
      if (out.size() >= cap) {
        raise(ErrorCode::kResourceBound, "Hom(Par(" + std::to_string(m) + "), Par(" +
                                             std::to_string(n) + ")) exceeds cap " +
                                             std::to_string(cap));
      }
      out.emplace_back(f);
      return;
    }
    const std::int64_t hi = current[0] + n + 1;
    std::int64_t lo = current[a - 1];
    // Injective maps need strictly increasing values; surjective ones can
    // step by at most one. Pruning here keeps large (m, n) tractable.
    if (kind == HomKind::kInj) ++lo;
    std::int64_t top = kind == HomKind::kSurj ? std::min(hi, current[a - 1] + 1) : hi;
    for (std::int64_t v = lo; v <= top; ++v) {
      current[a] = v;
      extend(a + 1);
    }
  }
};

}  // namespace

std::vector<CycMap> enumerate_hom(int m, int n, HomKind kind, std::size_t cap) {
  check_object(m, "m");
  check_object(n, "n");
  HomEnumerator e{m, n, kind, cap, {}, {}};
  e.run();
  return std::move(e.out);
}

ParaMap dualize_map(const ParaMap& f) {
  const std::int64_t src_period = f.m() + 1;
  const std::int64_t tgt_period = f.n() + 1;
  std::vector<std::int64_t> values;
  values.reserve(static_cast<std::size_t>(tgt_period));
  for (std::int64_t y = 0; y < tgt_period; ++y) {
    // Start at a period whose images lie below y, then walk up.
    std::int64_t x = (floor_div(y, tgt_period) - f.shift() - 2) * src_period;
    while (f(x) > y) x -= src_period;
    while (f(x + 1) <= y) ++x;
    values.push_back(x);
  }
  return ParaMap::from_values(f.n(), f.m(), values);
}

ParaMap double_dual_unit(int n) { return ParaMap::rotation(n, -1); }

ParaMap double_dual_transport(const ParaMap& f) {
  ParaMap dd = dualize_map(dualize_map(f));
  return compose(ParaMap::rotation(f.n(), 1), compose(dd, double_dual_unit(f.m())));
}

ParaMap embed_simplex(std::span<const int> g, int n) {
  check_object(n, "n");
  if (g.empty()) raise(ErrorCode::kInvalidArgument, "simplex map needs a non-empty source");
  std::vector<std::int64_t> values;
  for (std::size_t a = 0; a < g.size(); ++a) {
    if (g[a] < 0 || g[a] > n) {
      raise(ErrorCode::kInvalidArgument, "value " + std::to_string(g[a]) + " outside [0, n]");
    }
    if (a > 0 && g[a] < g[a - 1]) {
      raise(ErrorCode::kNotMonotone, "simplex map decreases at " + std::to_string(a));
    }
    values.push_back(g[a]);
  }
  return ParaMap::from_values(static_cast<int>(g.size()) - 1, n, values);
}

ParaMap shift_action(const ParaMap& f, std::int64_t k) {
  std::vector<std::int64_t> values = f.full_values();
  for (auto& v : values) v += k * (f.n() + 1);
  return ParaMap::from_values(f.m(), f.n(), values);
}

CycMap cyc_canonicalize(const ParaMap& f) { return CycMap(f); }

}  // namespace bc
