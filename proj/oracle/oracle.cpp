#include "oracle.hpp"

#include <set>

namespace bc::oracle {

namespace {

std::int64_t fdiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

std::int64_t fmod(std::int64_t a, std::int64_t b) { return a - fdiv(a, b) * b; }

// Extend one period of images equivariantly.
std::int64_t eval(const std::vector<std::int64_t>& v, std::int64_t tgt_period, std::int64_t x) {
  auto p = static_cast<std::int64_t>(v.size());
  return v[static_cast<std::size_t>(fmod(x, p))] + fdiv(x, p) * tgt_period;
}

// Odometer over vectors with entries in [lo, hi).
bool next(std::vector<std::int64_t>& v, std::int64_t lo, std::int64_t hi) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (++v[i] < hi) return true;
    v[i] = lo;
  }
  return false;
}

struct Pre {
  std::vector<int> cls;  // class of each slot
  int k = 0;             // classes per period

  explicit Pre(const std::vector<int>& sizes) : k(static_cast<int>(sizes.size())) {
    for (int c = 0; c < k; ++c) {
      for (int s = 0; s < sizes[static_cast<std::size_t>(c)]; ++s) cls.push_back(c);
    }
  }
  std::int64_t period() const { return static_cast<std::int64_t>(cls.size()); }
  std::int64_t gclass(std::int64_t x) const {
    return fdiv(x, period()) * k + cls[static_cast<std::size_t>(fmod(x, period()))];
  }
};

// x ~ y under the relation keeping boundaries in `mask`: no kept boundary
// lies between their classes.
bool related(const Pre& p, std::uint32_t mask, std::int64_t x, std::int64_t y) {
  std::int64_t a = p.gclass(x);
  std::int64_t b = p.gclass(y);
  if (a > b) std::swap(a, b);
  for (std::int64_t c = a; c < b; ++c) {
    if ((mask >> fmod(c, p.k)) & 1U) return false;
  }
  return true;
}

void compositions(int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  for (int s = 1; s <= total; ++s) {
    cur.push_back(s);
    compositions(total - s, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::int64_t>> hom(int m, int n, Kind kind) {
  const std::int64_t ps = m + 1;
  const std::int64_t pt = n + 1;
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> v(static_cast<std::size_t>(ps), 0);
  do {
    if (v[0] >= pt) continue;
    bool monotone = true;
    bool injective = true;
    for (std::int64_t x = -2 * ps; x <= 2 * ps && monotone; ++x) {
      for (std::int64_t y = x + 1; y <= 2 * ps; ++y) {
        if (eval(v, pt, x) > eval(v, pt, y)) monotone = false;
        if (eval(v, pt, x) == eval(v, pt, y)) injective = false;
      }
    }
    if (!monotone) continue;
    std::set<std::int64_t> hit;
    for (std::int64_t x = -3 * ps; x <= 3 * ps; ++x) hit.insert(eval(v, pt, x));
    bool surjective = true;
    for (std::int64_t y = 0; y < pt; ++y) surjective = surjective && hit.count(y) > 0;
    if (kind == Kind::kInj && !injective) continue;
    if (kind == Kind::kSurj && !surjective) continue;
    out.push_back(v);
  } while (next(v, 0, 2 * pt));
  return out;
}

std::size_t hom_count(int m, int n, Kind kind) { return hom(m, n, kind).size(); }

std::uint64_t hom_closed_form(int m, int n) {
  // C(m + n + 1, m + 1), built up multiplicatively.
  std::uint64_t c = 1;
  for (int i = 1; i <= m + 1; ++i) c = c * static_cast<std::uint64_t>(n + i) / static_cast<std::uint64_t>(i);
  return static_cast<std::uint64_t>(m + 1) * c;
}

std::vector<std::vector<std::int64_t>> preorder_maps(const std::vector<int>& src,
                                                     const std::vector<int>& tgt) {
  const Pre s(src);
  const Pre t(tgt);
  const std::int64_t ps = s.period();
  const std::int64_t pt = t.period();
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> v(static_cast<std::size_t>(ps), -pt);
  do {
    if (v[0] < 0 || v[0] >= pt) continue;
    bool ok = true;
    for (std::int64_t x = -2 * ps; x <= 2 * ps && ok; ++x) {
      for (std::int64_t y = -2 * ps; y <= 2 * ps && ok; ++y) {
        if (s.gclass(x) <= s.gclass(y) && t.gclass(eval(v, pt, x)) > t.gclass(eval(v, pt, y))) ok = false;
      }
    }
    if (!ok) continue;
    std::set<std::int64_t> classes;
    for (std::int64_t x = 0; x < ps; ++x) classes.insert(fmod(t.gclass(eval(v, pt, x)), t.k));
    if (static_cast<int>(classes.size()) != t.k) continue;
    out.push_back(v);
  } while (next(v, -pt, 3 * pt));
  return out;
}

std::size_t conv_count(const std::vector<int>& sizes) {
  const Pre p(sizes);
  std::size_t count = 0;
  for (std::uint32_t mask = 0; mask < (1U << p.k); ++mask) {
    // The quotient must keep i strictly below i + 1 period.
    bool separated = true;
    for (std::int64_t x = 0; x < p.period(); ++x) separated = separated && !related(p, mask, x, x + p.period());
    if (separated) ++count;
  }
  return count;
}

ConvTildeCounts conv_tilde(int n_max) {
  ConvTildeCounts c;
  std::vector<std::vector<int>> pres;
  for (int p = 1; p <= n_max + 1; ++p) {
    std::vector<int> cur;
    compositions(p, cur, pres);
  }
  c.preorders = pres.size();
  for (const auto& s : pres) c.objects += (1U << s.size()) - 1;
  for (const auto& src : pres) {
    const Pre s(src);
    const std::int64_t ps = s.period();
    for (const auto& tgt : pres) {
      const Pre t(tgt);
      const std::int64_t pt = t.period();
      for (const auto& v : preorder_maps(src, tgt)) {
        ++c.morphisms;
        for (std::uint32_t eb = 1; eb < (1U << t.k); ++eb) {
          for (std::uint32_t ea = 1; ea < (1U << s.k); ++ea) {
            bool contained = true;
            bool equal = true;
            for (std::int64_t x = -2 * ps; x <= 2 * ps; ++x) {
              for (std::int64_t y = -2 * ps; y <= 2 * ps; ++y) {
                bool a = related(s, ea, x, y);
                bool b = related(t, eb, eval(v, pt, x), eval(v, pt, y));
                if (a && !b) contained = false;
                if (a != b) equal = false;
              }
            }
            if (!contained) continue;
            ++c.edges;
            if (equal) ++c.cartesian;
          }
        }
      }
    }
  }
  return c;
}

}  // namespace bc::oracle
