#include "brokencycle/fspace.hpp"

#include <sstream>

#include "brokencycle/error.hpp"

namespace bc {

const ExtRealUpper& FPoint::gap_after(std::int64_t x) const {
  return gaps_[static_cast<std::size_t>(floor_mod(x, base_.period()))];
}

std::string FPoint::to_string() const {
  std::ostringstream os;
  os << base_.to_string() << " gaps(";
  for (std::size_t j = 0; j < gaps_.size(); ++j) os << (j ? "," : "") << gaps_[j].get().to_string();
  os << ")";
  return os.str();
}

FPoint validate_point(const ParaPreorder& base, std::vector<ExtRealUpper> gaps) {
  if (gaps.size() != static_cast<std::size_t>(base.period())) {
    raise(ErrorCode::kInvalidArgument, "expected " + std::to_string(base.period()) + " gaps, got " +
                                           std::to_string(gaps.size()));
  }
  bool any_inf = false;
  for (std::size_t j = 0; j < gaps.size(); ++j) {
    if (!gaps[j].is_inf()) continue;
    any_inf = true;
    if (j + 1 < gaps.size() &&
        base.class_of_slot(static_cast<int>(j)) == base.class_of_slot(static_cast<int>(j + 1))) {
      raise(ErrorCode::kInfiniteGapInsideClass,
            "gap " + std::to_string(j) + " lies inside class " +
                std::to_string(base.class_of_slot(static_cast<int>(j))));
    }
  }
  if (!any_inf) raise(ErrorCode::kNoInfinityGap, "alpha(i, i + 1) must be infinite");
  return FPoint(base, std::move(gaps));
}

namespace {

// Sum of the gaps between global elements lo <= hi.
ExtRealUpper gap_sum(const FPoint& p, std::int64_t lo, std::int64_t hi) {
  if (hi - lo >= p.base().period()) return ExtRealUpper::inf();
  std::vector<ExtRealUpper> terms;
  for (std::int64_t x = lo; x < hi; ++x) terms.push_back(p.gap_after(x));
  return ext_sum(terms);
}

}  // namespace

ExtRealUpper alpha_eval(const FPoint& p, std::int64_t i, std::int64_t j) {
  if (!p.base().leq(i, j)) {
    raise(ErrorCode::kNotAnArrow, "e" + std::to_string(i) + " is not below e" + std::to_string(j));
  }
  if (i <= j) return gap_sum(p, i, j);
  // Same class, listed in the opposite order: alpha(i, j) = -alpha(j, i).
  return ExtRealUpper(-gap_sum(p, j, i).get());
}

ConvexRelation stratum_of(const FPoint& p) {
  const ParaPreorder& base = p.base();
  std::vector<int> kept;
  for (int b = 0; b < base.class_count(); ++b) {
    int last_slot = base.first_slot_of_class(b) + base.sizes()[static_cast<std::size_t>(b)] - 1;
    if (p.gap_after(last_slot).is_inf()) kept.push_back(b);
  }
  return ConvexRelation(base, kept);
}

FPoint pullback_point(const PreordMap& f, const FPoint& p) {
  if (!(f.tgt() == p.base())) {
    raise(ErrorCode::kBaseMismatch, "point lives on " + p.base().to_string() + ", map targets " +
                                        f.tgt().to_string());
  }
  std::vector<ExtRealUpper> gaps;
  for (std::int64_t a = 0; a < f.src().period(); ++a) gaps.push_back(alpha_eval(p, f(a), f(a + 1)));
  return validate_point(f.src(), std::move(gaps));
}

FiberInvariants fiber_invariants(const FPoint& p) {
  int count = 0;
  for (const auto& g : p.gaps()) count += g.is_inf() ? 1 : 0;
  return {count - 1, count};
}

FPoint witness_point(const ConvexRelation& e) {
  const ParaPreorder& base = e.base();
  std::vector<ExtRealUpper> gaps(static_cast<std::size_t>(base.period()), ExtRealUpper(0));
  for (int b = 0; b < base.class_count(); ++b) {
    auto last = static_cast<std::size_t>(base.first_slot_of_class(b) +
                                         base.sizes()[static_cast<std::size_t>(b)] - 1);
    gaps[last] = e.has_gap(b) ? ExtRealUpper::inf() : ExtRealUpper(1);
  }
  return validate_point(base, std::move(gaps));
}

// ---------------------------------------------------------------------------
// Fiber points

namespace {

bool compatible(const ExtReal& bi, const ExtReal& a, const ExtReal& bj) {
  return ext_sum_equals(bi, a, bj) || ext_diff_equals(a, bi, bj) || ext_diff_equals(bj, bi, a);
}

}  // namespace

BetaPoint::BetaPoint(FPoint base, std::int64_t lo, std::vector<ExtReal> coords)
    : base_(std::move(base)), lo_(lo), coords_(std::move(coords)) {
  const std::int64_t period = base_.base().period();
  for (std::int64_t i = lo_ - period; i <= hi() + period; ++i) {
    for (std::int64_t j = lo_ - period; j <= hi() + period; ++j) {
      if (!base_.base().leq(i, j)) continue;
      if (!compatible(at(i), alpha_eval(base_, i, j), at(j))) {
        raise(ErrorCode::kInvalidArgument, "beta is incompatible with alpha at (" +
                                               std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
  }
}

ExtReal BetaPoint::at(std::int64_t i) const {
  if (i < lo_) return ExtReal::pos_inf();
  if (i > hi()) return ExtReal::neg_inf();
  return coords_[static_cast<std::size_t>(i - lo_)];
}

bool BetaPoint::is_fixed() const {
  for (const auto& c : coords_) {
    if (c.is_finite()) return false;
  }
  return true;
}

BetaPoint BetaPoint::act(std::int64_t n, const Rational& t) const {
  std::vector<ExtReal> moved;
  for (const auto& c : coords_) moved.push_back(ext_add(c, ExtReal(t)));
  return BetaPoint(base_, lo_ - n * base_.base().period(), std::move(moved));
}

bool operator==(const BetaPoint& a, const BetaPoint& b) {
  if (!(a.base_ == b.base_)) return false;
  std::int64_t lo = std::min(a.lo(), b.lo()) - 1;
  std::int64_t hi = std::max(a.hi(), b.hi()) + 1;
  for (std::int64_t i = lo; i <= hi; ++i) {
    if (!(a.at(i) == b.at(i))) return false;
  }
  return true;
}

std::string BetaPoint::to_string() const {
  std::ostringstream os;
  os << "beta[" << lo_ << ".." << hi() << "](";
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i].to_string();
  os << ")";
  return os.str();
}

BetaPoint section_point(const FPoint& p, std::int64_t i0) {
  const std::int64_t period = p.base().period();
  std::int64_t lo = i0;
  std::int64_t hi = i0;
  auto value = [&](std::int64_t j) -> ExtReal {
    if (j <= i0) return alpha_eval(p, j, i0).get();
    return -alpha_eval(p, i0, j).get();
  };
  while (lo - 1 > i0 - period && value(lo - 1).is_finite()) --lo;
  while (hi + 1 < i0 + period && value(hi + 1).is_finite()) ++hi;
  std::vector<ExtReal> coords;
  for (std::int64_t j = lo; j <= hi; ++j) coords.push_back(value(j));
  return BetaPoint(p, lo, std::move(coords));
}

BetaPoint fixed_point(const FPoint& p, std::int64_t x) {
  if (!p.gap_after(x).is_inf()) {
    raise(ErrorCode::kInvalidArgument, "the gap after e" + std::to_string(x) + " is finite");
  }
  return BetaPoint(p, x + 1, {});
}

ExtReal distance(const BetaPoint& b, const BetaPoint& b2) {
  if (!(b.base() == b2.base())) raise(ErrorCode::kBaseMismatch, "points lie over different alphas");
  std::int64_t lo = std::max(b.lo(), b2.lo());
  std::int64_t hi = std::min(b.hi(), b2.hi());
  for (std::int64_t i = lo; i <= hi; ++i) {
    if (b.at(i).is_finite() && b2.at(i).is_finite()) return ext_sub(b2.at(i), b.at(i));
  }
  if (b == b2) {
    if (b.is_fixed()) raise(ErrorCode::kUndefinedAtFixedDiagonal, "distance from a fixed point to itself");
  }
  std::int64_t wlo = std::min(b.lo(), b2.lo()) - 1;
  std::int64_t whi = std::max(b.hi(), b2.hi()) + 1;
  bool below = true;
  bool above = true;
  for (std::int64_t i = wlo; i <= whi; ++i) {
    if (b.at(i) > b2.at(i)) below = false;
    if (b.at(i) < b2.at(i)) above = false;
  }
  if (below) return ExtReal::pos_inf();
  if (above) return ExtReal::neg_inf();
  raise(ErrorCode::kInvalidArgument, "points " + b.to_string() + " and " + b2.to_string() +
                                         " are not comparable");
}

}  // namespace bc
