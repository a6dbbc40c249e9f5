#ifndef BROKENCYCLE_SDOT_HPP
#define BROKENCYCLE_SDOT_HPP

#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "brokencycle/linalg.hpp"

namespace bc {

/// A Z/2-graded complex V0 <-> V1 with d0 : V0 -> V1 and d1 : V1 -> V0.
class TwoPeriodicComplex {
 public:
  /// Throws DimensionMismatch on bad shapes and NotAComplex unless
  /// d1 d0 = 0 and d0 d1 = 0.
  TwoPeriodicComplex(Matrix d0, Matrix d1);
  static TwoPeriodicComplex zero(Field field);
  /// Zero differentials.
  static TwoPeriodicComplex trivial(Field field, std::size_t dim0, std::size_t dim1);

  const Field& field() const { return d0_.field(); }
  std::size_t dim(int degree) const { return degree % 2 == 0 ? d0_.cols() : d0_.rows(); }
  /// d_i : V_i -> V_{i+1}, degrees mod 2.
  const Matrix& d(int degree) const { return degree % 2 == 0 ? d0_ : d1_; }

  friend bool operator==(const TwoPeriodicComplex&, const TwoPeriodicComplex&) = default;
  std::string to_string() const;

 private:
  Matrix d0_;
  Matrix d1_;
};

class ComplexMap {
 public:
  /// Throws DimensionMismatch on bad shapes and InvalidArgument unless
  /// f1 d0 = d0' f0 and f0 d1 = d1' f1.
  ComplexMap(TwoPeriodicComplex src, TwoPeriodicComplex tgt, Matrix f0, Matrix f1);
  static ComplexMap identity(const TwoPeriodicComplex& x);
  static ComplexMap zero(const TwoPeriodicComplex& src, const TwoPeriodicComplex& tgt);

  const TwoPeriodicComplex& src() const { return src_; }
  const TwoPeriodicComplex& tgt() const { return tgt_; }
  const Matrix& f(int degree) const { return degree % 2 == 0 ? f0_ : f1_; }

  friend bool operator==(const ComplexMap&, const ComplexMap&) = default;

 private:
  TwoPeriodicComplex src_;
  TwoPeriodicComplex tgt_;
  Matrix f0_;
  Matrix f1_;
};

/// Throws InvalidArgument unless tgt(f) = src(g).
ComplexMap compose(const ComplexMap& g, const ComplexMap& f);

/// Cone(f)_i = src_{i+1} + tgt_i with differential [[-d_src, 0], [f, d_tgt]].
TwoPeriodicComplex cone(const ComplexMap& f);
/// (V1, V0, -d1, -d0); applying it twice gives back the input exactly.
TwoPeriodicComplex shift(const TwoPeriodicComplex& x);
ComplexMap shift(const ComplexMap& f);

struct HomologyDims {
  std::size_t h0 = 0;
  std::size_t h1 = 0;
  long euler() const { return static_cast<long>(h0) - static_cast<long>(h1); }
  friend bool operator==(const HomologyDims&, const HomologyDims&) = default;
  friend auto operator<=>(const HomologyDims&, const HomologyDims&) = default;
};

HomologyDims homology_dims(const TwoPeriodicComplex& x);
bool is_quasi_iso(const ComplexMap& f);

/// A filtration X_1 -> ... -> X_n; n = 0 is the empty filtration.
class FilteredObject {
 public:
  explicit FilteredObject(Field field) : field_(field) {}
  /// Throws InvalidArgument unless maps[i] : objects[i] -> objects[i+1].
  FilteredObject(std::vector<TwoPeriodicComplex> objects, std::vector<ComplexMap> maps);

  const Field& field() const { return field_; }
  std::size_t length() const { return objects_.size(); }
  /// 1-based, as X_1..X_n.
  const TwoPeriodicComplex& object(std::size_t i) const { return objects_.at(i - 1); }
  /// x_i : X_i -> X_{i+1}, 1-based.
  const ComplexMap& link(std::size_t i) const { return maps_.at(i - 1); }
  const std::vector<TwoPeriodicComplex>& objects() const { return objects_; }
  const std::vector<ComplexMap>& maps() const { return maps_; }
  /// X_i -> X_j for i <= j.
  ComplexMap composite(std::size_t i, std::size_t j) const;

  friend bool operator==(const FilteredObject&, const FilteredObject&) = default;

 private:
  Field field_;
  std::vector<TwoPeriodicComplex> objects_;
  std::vector<ComplexMap> maps_;
};

/// d_0 takes quotients by X_1, d_i for 0 < i < n deletes X_i, d_n drops X_n.
/// Throws IndexOutOfRange.
FilteredObject face(const FilteredObject& f, std::size_t i);
/// s_0 prepends the zero complex, s_i for i >= 1 repeats X_i along an
/// identity. Throws IndexOutOfRange for i > n.
FilteredObject degeneracy(const FilteredObject& f, std::size_t i);

enum class RotationModel {
  kCorrect,
  /// Uses X_1 with unnegated differentials in place of X_1[1]; only
  /// visible in odd characteristic.
  kWrongSign,
};

/// (X_2/X_1 -> ... -> X_n/X_1 -> X_1[1]) with X_j/X_1 = cone(X_1 -> X_j).
/// Throws IndexOutOfRange for n = 0.
FilteredObject rotate(const FilteredObject& f, RotationModel model = RotationModel::kCorrect);

/// Homology of every X_i and of every cone(X_i -> X_j), i < j.
struct Fingerprint {
  std::vector<HomologyDims> objects;
  std::map<std::pair<std::size_t, std::size_t>, HomologyDims> cones;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const FilteredObject& f);

struct PeriodicityReport {
  bool pass = false;
  std::size_t n = 0;
  bool fingerprint_match = false;
  /// Only evaluated for n = 1.
  bool explicit_equivalence = false;
  std::string detail;
};

/// Compares the fingerprints of F and rotate^{n+1}(F); for n = 1 also builds
/// the comparison map rotate^2(F) -> F and certifies it with is_quasi_iso.
/// Failures inside the rotation are reported, never thrown.
PeriodicityReport rotation_periodicity_check(const FilteredObject& f,
                                             RotationModel model = RotationModel::kCorrect);

/// A direct sum of elementary complexes of total dimension at most
/// `max_dim` in each degree, conjugated by random invertibles.
TwoPeriodicComplex random_complex(Field field, std::size_t max_dim, std::mt19937_64& rng);
/// A uniformly random element of the space of chain maps src -> tgt.
ComplexMap random_map(const TwoPeriodicComplex& src, const TwoPeriodicComplex& tgt,
                      std::mt19937_64& rng);
FilteredObject random_filtration(Field field, std::size_t length, std::size_t max_dim,
                                 std::mt19937_64& rng);

}  // namespace bc

#endif  // BROKENCYCLE_SDOT_HPP
