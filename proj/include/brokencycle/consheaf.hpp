#ifndef BROKENCYCLE_CONSHEAF_HPP
#define BROKENCYCLE_CONSHEAF_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "brokencycle/linalg.hpp"
#include "brokencycle/preord.hpp"

namespace bc {

struct FinVect {
  std::size_t dim = 0;
  Field field;
  friend bool operator==(const FinVect&, const FinVect&) = default;
};

/// Unchecked sheaf data: a dimension per element of Conv(base), indexed by
/// mask - 1, and a matrix per covering pair keyed by (lower mask, upper mask).
struct StratSheafData {
  ParaPreorder base{std::vector<int>{1}};
  Field field;
  std::vector<std::size_t> dims;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Matrix> maps;
};

/// A functor Conv(I) -> FinVect, covariant along E <= E'.
class StratSheaf {
 public:
  const ParaPreorder& base() const { return data_.base; }
  const Field& field() const { return data_.field; }
  const ConvPoset& poset() const { return poset_; }
  const StratSheafData& data() const { return data_; }

  std::size_t dim(const ConvexRelation& e) const { return data_.dims[e.mask() - 1]; }
  std::size_t dim_at(std::size_t index) const { return data_.dims[index]; }
  const Matrix& edge(std::uint32_t lower, std::uint32_t upper) const;
  /// F(E <= E'), composed along any chain. Throws InvalidArgument if E is
  /// not below E'.
  Matrix map_between(const ConvexRelation& e, const ConvexRelation& e2) const;

 private:
  friend StratSheaf validate_sheaf(StratSheafData data);
  explicit StratSheaf(StratSheafData data);

  StratSheafData data_;
  ConvPoset poset_;
};

/// Checks every covering matrix has the right shape (DimensionMismatch) and
/// every minimal diamond commutes (NotFunctorial).
StratSheaf validate_sheaf(StratSheafData data);

StratSheaf constant_sheaf(const ParaPreorder& base, Field field, std::size_t dim);

/// An upward-closed subset of Conv(base), as a membership vector over
/// element indices.
class UpSet {
 public:
  /// Throws NotUpwardClosed.
  UpSet(const ConvPoset& poset, std::vector<bool> members);
  static UpSet all(const ConvPoset& poset);
  static UpSet empty(const ConvPoset& poset);
  /// The smallest up-set containing the given relations.
  static UpSet generated_by(const ConvPoset& poset, const std::vector<ConvexRelation>& gens);

  const std::vector<bool>& members() const { return members_; }
  bool contains(std::size_t index) const { return members_[index]; }
  std::vector<std::size_t> indices() const;
  std::size_t size() const;

  UpSet unite(const UpSet& other) const;
  UpSet intersect(const UpSet& other) const;
  bool subset_of(const UpSet& other) const;

  friend bool operator==(const UpSet&, const UpSet&) = default;
  std::string to_string(const ConvPoset& poset) const;

 private:
  UpSet(std::vector<bool> members, bool /*trusted*/) : members_(std::move(members)) {}
  std::vector<bool> members_;
};

inline constexpr std::size_t kMaxUpSetPoset = 20;

/// Every up-set of the poset, smallest first. Throws ResourceBound for
/// posets larger than kMaxUpSetPoset.
std::vector<UpSet> enumerate_upsets(const ConvPoset& poset);

/// Compatible families over U. Coordinates of a family are the stacked
/// vectors v_E for E in U in increasing element index; `offsets[i]` is where
/// element i starts (only meaningful for members).
struct Sections {
  std::size_t dim = 0;
  /// Columns are a basis in reduced echelon form.
  Matrix basis;
  std::vector<std::size_t> offsets;
  std::size_t ambient = 0;
};

Sections sections(const StratSheaf& f, const UpSet& u);
/// The coordinate projection from the ambient space of U to that of V.
/// Throws InvalidArgument unless V is contained in U.
Matrix restriction(const StratSheaf& f, const UpSet& u, const UpSet& v);
FinVect stalk(const StratSheaf& f, const ConvexRelation& e);

/// The sheaf on Conv(I) whose value at E is F(f^* E), for f : I' -> I and F
/// on Conv(I'). Throws BaseMismatch.
StratSheaf pullback_sheaf(const PreordMap& f, const StratSheaf& sheaf);

struct GluingReport {
  bool pass = false;
  std::size_t dim_union = 0;
  std::size_t dim_fiber_product = 0;
  std::string detail;
};

/// Compares sections over U1 u U2 with the fiber product of sections over
/// U1 and U2 above U1 n U2, both in dimension and as explicit bases.
GluingReport gluing_check(const StratSheaf& f, const UpSet& u1, const UpSet& u2);

struct GluingSweep {
  std::size_t pairs = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

/// Runs gluing_check on every unordered pair of up-sets. The parallel
/// version shares one section cache and splits pairs across threads.
GluingSweep gluing_sweep(const StratSheaf& f, const std::vector<UpSet>& upsets);
GluingSweep gluing_sweep_serial(const StratSheaf& f, const std::vector<UpSet>& upsets);

/// A direct sum of indicator modules of random intervals of Conv(base),
/// conjugated stalkwise by random invertible matrices. Every stalk has
/// dimension at most `max_dim`.
StratSheaf random_sheaf(const ParaPreorder& base, Field field, std::size_t max_dim,
                        std::mt19937_64& rng);

}  // namespace bc

#endif  // BROKENCYCLE_CONSHEAF_HPP
