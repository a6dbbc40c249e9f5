#ifndef BROKENCYCLE_EQUIVALENCE_HPP
#define BROKENCYCLE_EQUIVALENCE_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "brokencycle/consheaf.hpp"
#include "brokencycle/linalg.hpp"
#include "brokencycle/paracat.hpp"
#include "brokencycle/preord.hpp"

namespace bc {

enum class Variant { kPara, kCyc };
std::string to_string(Variant v);
Variant parse_variant(const std::string& s);

/// A representation of the surjective paracyclic category truncated at N:
/// spaces V_0..V_N, a matrix for every canonical surjection, and the image
/// t_n of the period shift of Par(n). A cyclic representation is one whose
/// shifts are identities.
struct ParaRep {
  int N = 0;
  Field field;
  std::vector<std::size_t> dims;
  std::map<ParaMap, Matrix> gen_maps;
  std::vector<Matrix> shifts;

  /// M(f) = t^k M(h) for f = shift^k o h with h canonical. Throws
  /// TruncationExceeded outside the truncation.
  Matrix eval(const ParaMap& f) const;
  friend bool operator==(const ParaRep&, const ParaRep&) = default;
};
using CycRep = ParaRep;

struct CheckReport {
  bool pass = true;
  std::size_t checks = 0;
  std::size_t violations = 0;
  /// The first few violations, each naming the offending maps.
  std::vector<std::string> messages;

  void record(bool ok, const std::string& what);
  void merge(const CheckReport& other);
};

/// Identities, composition M(g) M(f) = t^k M(h), naturality of t and
/// invertibility of t over the whole truncation; the cyc variant also
/// requires every t_n to be the identity.
CheckReport validate_rep(const ParaRep& g, Variant variant = Variant::kPara);

ParaRep zero_rep(int n_max, Field field);
ParaRep constant_rep(int n_max, Field field, std::size_t dim = 1);
/// Direct sum of constant, twisted slot and augmentation pieces with every
/// V_n of dimension at most `max_dim`, conjugated by random invertible
/// matrices. The cyc variant only uses untwisted pieces.
ParaRep random_rep(int n_max, Field field, std::size_t max_dim, Variant variant,
                   std::mt19937_64& rng);

/// F_I(E) = V_{n(I/E)}, with the map for E <= E' given by the induced
/// surjection I/E -> I/E'. Throws TruncationExceeded.
StratSheaf realize_sheaf(const ParaRep& g, const ParaPreorder& i);

/// Everything about a bounded system that does not depend on the sheaves:
/// the preorders, the morphisms carrying comparisons (canonical ones and
/// their shifts by one period) and their pullbacks of every relation.
struct SystemSkeleton {
  int max_period = 0;
  std::vector<ParaPreorder> preorders;
  std::vector<PreordMap> morphisms;
  std::vector<bool> is_canonical;
  std::vector<std::size_t> src_index;
  std::vector<std::size_t> tgt_index;
  /// pulled[r][e] = index in Conv(src) of r^* E for E with index e in Conv(tgt).
  std::vector<std::vector<std::size_t>> pulled;
  std::vector<ConvPoset> conv;

  std::size_t preorder_index(const ParaPreorder& p) const;
  /// Throws IncompleteSystem when r is not part of the skeleton.
  std::size_t morphism_index(const PreordMap& r) const;

 private:
  friend std::shared_ptr<const SystemSkeleton> build_skeleton(int max_period);
  std::map<std::vector<int>, std::size_t> preorder_lookup_;
  std::map<std::tuple<std::size_t, std::size_t, std::vector<std::int64_t>>, std::size_t>
      morphism_lookup_;
};

std::shared_ptr<const SystemSkeleton> build_skeleton(int max_period);

/// A compatible system of sheaves: F_I on every preorder of the skeleton and
/// for every skeleton morphism r : I' -> I comparison isomorphisms
/// phi_r(E) : F_{I'}(r^* E) -> F_I(E).
struct SheafSystem {
  std::shared_ptr<const SystemSkeleton> skeleton;
  Field field;
  std::vector<StratSheaf> sheaves;
  /// comparisons[r][e], e indexing Conv(tgt(r)).
  std::vector<std::vector<Matrix>> comparisons;
};

SheafSystem realize_system(const ParaRep& g, std::shared_ptr<const SystemSkeleton> skeleton);

/// Shapes and invertibility of every comparison, their naturality along
/// covering relations, and the cocycle condition
/// phi_{r2 r1}(E) = phi_{r2}(E) phi_{r1}(r2^* E) for every composable pair of
/// canonical morphisms.
CheckReport validate_system(const SheafSystem& s);

/// Inverse direction: V_n from the least stratum of Par(n), G(q) from the
/// structure map to E_q followed by the comparison along q, t_n from the
/// comparison along the period shift. Throws IncompleteSystem.
ParaRep recover_rep(const SheafSystem& s, int n_max);

// ---------------------------------------------------------------------------
// Conv~ and the localization adjunction

inline constexpr int kMaxConvTildeN = 3;

struct ConvTildeObject {
  std::size_t preorder = 0;
  std::uint32_t mask = 0;
};

struct ConvTildeEdge {
  std::size_t src = 0;
  std::size_t tgt = 0;
  std::size_t morphism = 0;
  bool cartesian = false;
};

/// Objects (I, E) with period of I at most N + 1, morphisms r : I -> J with
/// E_I contained in r^* E_J (one per canonical representative; in the cyc
/// variant these are the Z-orbits), marked Cartesian when E_I = r^* E_J.
struct ConvTilde {
  Variant variant = Variant::kPara;
  int N = 0;
  std::vector<ParaPreorder> preorders;
  std::vector<std::size_t> object_offset;
  std::vector<ConvTildeObject> objects;
  std::vector<PreordMap> morphisms;
  std::vector<ConvTildeEdge> edges;

  std::size_t object_index(std::size_t preorder, std::uint32_t mask) const {
    return object_offset[preorder] + mask - 1;
  }
  ConvexRelation relation(std::size_t object) const;
  std::size_t cartesian_count() const;
};

/// Throws ResourceBound for N > kMaxConvTildeN.
ConvTilde build_conv_tilde(int n_max, Variant variant);

struct AdjunctionReport {
  CheckReport triangles;
  CheckReport unit_naturality;
  CheckReport hom_bijection;
  CheckReport fully_faithful;
  CheckReport cartesian;
  bool pass() const;
};

/// L(I, E) = I/E and R(J) = (J, least), with the projection as unit and the
/// identity as counit.
AdjunctionReport check_localization_adjunction(int n_max, Variant variant);
AdjunctionReport check_localization_adjunction(const ConvTilde& c);

}  // namespace bc

#endif  // BROKENCYCLE_EQUIVALENCE_HPP
