#ifndef BROKENCYCLE_PREORD_HPP
#define BROKENCYCLE_PREORD_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "brokencycle/paracat.hpp"

namespace bc {

/// A paracyclic preorder with finitely many elements per period.
///
/// One period holds e_0, ..., e_m grouped into consecutive equivalence
/// classes of sizes s_0, ..., s_k. Elements use the same global encoding as
/// parasimplices: x = period * (m + 1) + slot.
class ParaPreorder {
 public:
  /// Throws InvalidArgument on an empty list or a non-positive size.
  explicit ParaPreorder(std::vector<int> sizes);
  /// The parasimplex Par(n), every class a singleton.
  static ParaPreorder simplex(int n);

  const std::vector<int>& sizes() const { return sizes_; }
  /// Number of elements per period, m + 1.
  int period() const { return period_; }
  /// Number of classes per period, k + 1.
  int class_count() const { return static_cast<int>(sizes_.size()); }
  /// k, so that I / ~ is Par(k).
  int n_quotient() const { return class_count() - 1; }
  bool is_simplex() const { return period_ == class_count(); }

  int class_of_slot(int slot) const { return slot_class_[static_cast<std::size_t>(slot)]; }
  int first_slot_of_class(int c) const { return class_start_[static_cast<std::size_t>(c)]; }
  /// Global class index period * (k + 1) + class.
  std::int64_t global_class(std::int64_t x) const;
  bool leq(std::int64_t x, std::int64_t y) const { return global_class(x) <= global_class(y); }
  bool equivalent(std::int64_t x, std::int64_t y) const {
    return global_class(x) == global_class(y);
  }

  friend bool operator==(const ParaPreorder& a, const ParaPreorder& b) {
    return a.sizes_ == b.sizes_;
  }
  friend auto operator<=>(const ParaPreorder& a, const ParaPreorder& b) {
    return a.sizes_ <=> b.sizes_;
  }

  std::string to_string() const;

 private:
  std::vector<int> sizes_;
  int period_ = 0;
  std::vector<int> slot_class_;
  std::vector<int> class_start_;
};

/// All paracyclic preorders with exactly `period` elements per period
/// (compositions of `period`), in lexicographic order of sizes.
std::vector<ParaPreorder> enumerate_preorders(int period);

/// A Z-equivariant, order-preserving, essentially surjective map.
/// values()[a] is the global index in the target of the image of e_a.
class PreordMap {
 public:
  const ParaPreorder& src() const { return src_; }
  const ParaPreorder& tgt() const { return tgt_; }
  const std::vector<std::int64_t>& values() const { return values_; }

  std::int64_t operator()(std::int64_t x) const;
  /// Image of global class c of the source, as a global class of the target.
  std::int64_t class_image(std::int64_t c) const;
  /// Same map with v_0 moved into the first target period.
  PreordMap canonical() const;
  PreordMap shifted(std::int64_t k) const;

  friend bool operator==(const PreordMap&, const PreordMap&) = default;
  std::string to_string() const;

 private:
  friend PreordMap is_valid_morphism(const ParaPreorder&, const ParaPreorder&,
                                     std::span<const std::int64_t>);
  PreordMap(ParaPreorder src, ParaPreorder tgt, std::vector<std::int64_t> values)
      : src_(std::move(src)), tgt_(std::move(tgt)), values_(std::move(values)) {}

  ParaPreorder src_{std::vector<int>{1}};
  ParaPreorder tgt_{std::vector<int>{1}};
  std::vector<std::int64_t> values_;
};

/// Validates raw map data. Throws NotMonotone when the map fails to preserve
/// the preorder or Z-equivariance, NotEssentiallySurjective when some class
/// of the target is missed.
PreordMap is_valid_morphism(const ParaPreorder& src, const ParaPreorder& tgt,
                            std::span<const std::int64_t> values);

PreordMap identity_map(const ParaPreorder& p);
/// g o f. Throws TypeMismatch.
PreordMap compose(const PreordMap& g, const PreordMap& f);

/// All morphisms src -> tgt with v_0 in the first target period.
std::vector<PreordMap> enumerate_morphisms(const ParaPreorder& src, const ParaPreorder& tgt,
                                           std::size_t cap = kDefaultHomCap);

/// A convex relation E, encoded by the class boundaries it keeps. Boundary j
/// separates class j from class j + 1 (boundary k wraps to the next period).
class ConvexRelation {
 public:
  /// Throws InvalidArgument when `gaps` is empty or out of range.
  ConvexRelation(ParaPreorder base, std::span<const int> gaps);
  static ConvexRelation from_mask(ParaPreorder base, std::uint32_t mask);
  /// The least element: every boundary kept, E = ~.
  static ConvexRelation least(const ParaPreorder& base);

  const ParaPreorder& base() const { return base_; }
  std::uint32_t mask() const { return mask_; }
  std::vector<int> gaps() const;
  int gap_count() const;
  bool has_gap(int boundary) const { return ((mask_ >> boundary) & 1U) != 0; }
  /// n_{I/E}.
  int n_quotient() const { return gap_count() - 1; }

  /// Global class of x in I / E, i.e. the element of Par(n_{I/E}).
  std::int64_t quotient_class(std::int64_t x) const;
  bool related(std::int64_t x, std::int64_t y) const {
    return quotient_class(x) == quotient_class(y);
  }

  /// Relation inclusion: E <= E' iff gaps(E') is contained in gaps(E).
  bool leq(const ConvexRelation& other) const;

  friend bool operator==(const ConvexRelation&, const ConvexRelation&) = default;
  std::string to_string() const;

 private:
  ConvexRelation(ParaPreorder base, std::uint32_t mask);

  ParaPreorder base_;
  std::uint32_t mask_ = 0;
};

/// Conv(I) as an explicit poset, indexed by mask - 1.
struct ConvPoset {
  ParaPreorder base{std::vector<int>{1}};
  std::vector<ConvexRelation> elements;
  /// Covering pairs (lower, upper) by element index; upper drops one gap.
  std::vector<std::pair<std::size_t, std::size_t>> covers;

  std::size_t size() const { return elements.size(); }
  std::size_t index_of(const ConvexRelation& e) const { return e.mask() - 1; }
  std::size_t least_index() const { return elements.size() - 1; }
};

/// Class counts above this bound are refused with ResourceBound.
inline constexpr int kMaxConvClasses = 16;

ConvPoset enumerate_conv(const ParaPreorder& p);

/// Par(k) and the class projection I -> I / ~.
std::pair<Parasimplex, PreordMap> quotient_by_sim(const ParaPreorder& p);
/// Par(|gaps| - 1) and the projection I -> I / E. Throws BaseMismatch.
std::pair<Parasimplex, PreordMap> quotient_by_relation(const ParaPreorder& p,
                                                       const ConvexRelation& e);

/// r^* E on the source of r. Throws BaseMismatch.
ConvexRelation pullback_relation(const PreordMap& r, const ConvexRelation& e);

/// The map I / E_I -> J / E_J induced by r when E_I is contained in r^* E_J.
/// Throws InvalidArgument if r does not factor.
ParaMap induced_quotient_map(const PreordMap& r, const ConvexRelation& e_src,
                             const ConvexRelation& e_tgt);

/// A PreordMap between parasimplices, read as a ParaMap.
ParaMap as_para_map(const PreordMap& r);
/// A ParaMap read as a PreordMap between the corresponding preorders.
/// Throws NotEssentiallySurjective unless f is surjective.
PreordMap from_para_map(const ParaMap& f);

/// A paracyclic preorder on I u J restricting to the given orders.
///
/// Encoded by the K-class of every I-class and J-class in period 0. The
/// I-classes sit at 0 = c_0 < ... < c_k < P and the J-classes at
/// d_0 < ... < d_l < d_0 + P with -P < d_0 < P, i.e. the first element of J
/// lies strictly between e_0 - 1 and e_0 + 1 of I.
struct Amalgam {
  int classes_per_period = 0;
  std::vector<std::int64_t> i_class;
  std::vector<std::int64_t> j_class;

  friend bool operator==(const Amalgam&, const Amalgam&) = default;
  friend auto operator<=>(const Amalgam&, const Amalgam&) = default;
};

struct AmalgamPoset {
  ParaPreorder i{std::vector<int>{1}};
  ParaPreorder j{std::vector<int>{1}};
  std::vector<Amalgam> elements;
  /// leq[a][b] iff the order of element a is contained in the order of b.
  std::vector<std::vector<bool>> leq;
};

inline constexpr int kMaxAmalgamPeriod = 8;

/// Throws ResourceBound when the combined period exceeds kMaxAmalgamPeriod.
AmalgamPoset enumerate_amalgams(const ParaPreorder& i, const ParaPreorder& j);

/// K-class of an element of I u J. `from_j` selects the summand.
std::int64_t amalgam_class(const Amalgam& k, const ParaPreorder& i, const ParaPreorder& j,
                           bool from_j, std::int64_t x);
bool amalgam_leq(const Amalgam& a, const Amalgam& b, const ParaPreorder& i,
                 const ParaPreorder& j);

/// Transitive closure of the union of the two orders, when that closure is
/// again an amalgam in normal position.
std::optional<Amalgam> join_amalgam(const Amalgam& a, const Amalgam& b, const ParaPreorder& i,
                                    const ParaPreorder& j);

}  // namespace bc

#endif  // BROKENCYCLE_PREORD_HPP
