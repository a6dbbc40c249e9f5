#ifndef BROKENCYCLE_FSPACE_HPP
#define BROKENCYCLE_FSPACE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "brokencycle/extreal.hpp"
#include "brokencycle/preord.hpp"

namespace bc {

/// A point alpha of F^(I), stored as one period of consecutive gaps
/// g_j = alpha(e_j, e_{j+1}); g_m closes the period at e_0 + 1.
class FPoint {
 public:
  const ParaPreorder& base() const { return base_; }
  const std::vector<ExtRealUpper>& gaps() const { return gaps_; }
  /// Gap following the global element x.
  const ExtRealUpper& gap_after(std::int64_t x) const;

  friend bool operator==(const FPoint&, const FPoint&) = default;
  std::string to_string() const;

 private:
  friend FPoint validate_point(const ParaPreorder&, std::vector<ExtRealUpper>);
  FPoint(ParaPreorder base, std::vector<ExtRealUpper> gaps)
      : base_(std::move(base)), gaps_(std::move(gaps)) {}

  ParaPreorder base_;
  std::vector<ExtRealUpper> gaps_;
};

/// Throws NoInfinityGap when every gap is finite and InfiniteGapInsideClass
/// when two equivalent elements are infinitely far apart.
FPoint validate_point(const ParaPreorder& base, std::vector<ExtRealUpper> gaps);

/// alpha(i, j) for i <= j in the preorder. Throws NotAnArrow otherwise.
ExtRealUpper alpha_eval(const FPoint& p, std::int64_t i, std::int64_t j);

/// E_alpha: the boundaries whose gap is infinite.
ConvexRelation stratum_of(const FPoint& p);

/// f^* p with alpha'(a, b) = alpha(f a, f b). Throws BaseMismatch.
FPoint pullback_point(const PreordMap& f, const FPoint& p);

struct FiberInvariants {
  int n = 0;
  int fixed_points_per_period = 0;
  friend bool operator==(const FiberInvariants&, const FiberInvariants&) = default;
};
FiberInvariants fiber_invariants(const FPoint& p);

/// A point of the given stratum: 0 inside classes, 1 across merged
/// boundaries, infinity on the kept ones.
FPoint witness_point(const ConvexRelation& e);

/// A point beta of the fiber of F~^(I) over alpha.
///
/// Coordinates are stored on the window [lo, hi]; beta is +inf left of it and
/// -inf right of it. An empty window (hi = lo - 1) is an R-fixed point.
class BetaPoint {
 public:
  /// Throws InvalidArgument if the coordinates violate compatibility with
  /// alpha on the window widened by one period each side.
  BetaPoint(FPoint base, std::int64_t lo, std::vector<ExtReal> coords);

  const FPoint& base() const { return base_; }
  std::int64_t lo() const { return lo_; }
  std::int64_t hi() const { return lo_ + static_cast<std::int64_t>(coords_.size()) - 1; }
  const std::vector<ExtReal>& coords() const { return coords_; }
  ExtReal at(std::int64_t i) const;
  /// True when no coordinate is finite, i.e. beta is fixed by every (0, t).
  bool is_fixed() const;

  /// ((n, t) beta)_i = beta_{i + n P} + t.
  BetaPoint act(std::int64_t n, const Rational& t) const;

  friend bool operator==(const BetaPoint& a, const BetaPoint& b);
  std::string to_string() const;

 private:
  FPoint base_;
  std::int64_t lo_ = 0;
  std::vector<ExtReal> coords_;
};

/// The fiber point with beta_{i0} = 0.
BetaPoint section_point(const FPoint& p, std::int64_t i0);
/// The R-fixed point that jumps from +inf to -inf after element x; the gap
/// after x must be infinite.
BetaPoint fixed_point(const FPoint& p, std::int64_t x);

/// Translation distance from b to b'. Throws UndefinedAtFixedDiagonal when
/// b = b' is a fixed point and BaseMismatch across fibers.
ExtReal distance(const BetaPoint& b, const BetaPoint& b2);

}  // namespace bc

#endif  // BROKENCYCLE_FSPACE_HPP
