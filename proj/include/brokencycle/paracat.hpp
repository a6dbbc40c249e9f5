#ifndef BROKENCYCLE_PARACAT_HPP
#define BROKENCYCLE_PARACAT_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bc {

/// Integer division rounding toward negative infinity.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

/// An element (period, slot) of Z x [n]. Internally elements are encoded by
/// the global index period * (n + 1) + slot, which is order-preserving for the
/// dictionary order and turns the Z-action into adding n + 1.
struct ElementCode {
  std::int64_t period = 0;
  int slot = 0;

  friend bool operator==(const ElementCode&, const ElementCode&) = default;
};

/// The parasimplex Z x [n].
struct Parasimplex {
  int n = 0;

  int period_length() const { return n + 1; }
  std::int64_t to_global(ElementCode e) const { return e.period * (n + 1) + e.slot; }
  ElementCode to_code(std::int64_t global) const {
    return {floor_div(global, n + 1), static_cast<int>(floor_mod(global, n + 1))};
  }
  /// i^{++}; on the global encoding this is x + 1.
  std::int64_t successor(std::int64_t x) const { return x + 1; }

  friend bool operator==(const Parasimplex&, const Parasimplex&) = default;
};

/// A Z-equivariant weakly monotone map Par(m) -> Par(n).
///
/// Stored as the canonical representative (image of slot 0 in period 0)
/// plus the number of whole periods it is shifted by; the full map is
/// f(k, a) = values[a] + (k + shift) * (n + 1) in global encoding.
class ParaMap {
 public:
  /// `global_values[a]` is the image of (0, a). Throws NotMonotone unless
  /// v_0 <= ... <= v_m <= v_0 + (n + 1).
  static ParaMap from_values(int m, int n, std::span<const std::int64_t> global_values);
  static ParaMap from_codes(int m, int n, std::span<const ElementCode> codes);
  static ParaMap identity(int n);
  /// The Z-action generator x -> x + 1 period, as an automorphism of Par(n).
  static ParaMap period_shift(int n);
  /// Rotation by one slot, x -> x + 1 in global encoding.
  static ParaMap rotation(int n, std::int64_t steps);

  int m() const { return m_; }
  int n() const { return n_; }
  Parasimplex src() const { return {m_}; }
  Parasimplex tgt() const { return {n_}; }
  const std::vector<std::int64_t>& values() const { return values_; }
  std::int64_t shift() const { return shift_; }

  /// Evaluate on a global index of the source.
  std::int64_t operator()(std::int64_t x) const;
  /// Images of (0, 0), ..., (0, m) including the shift.
  std::vector<std::int64_t> full_values() const;
  std::vector<ElementCode> codes() const;

  /// Same map with the shift erased.
  ParaMap canonical() const;

  friend bool operator==(const ParaMap&, const ParaMap&) = default;
  friend auto operator<=>(const ParaMap&, const ParaMap&) = default;

  std::string to_string() const;

 private:
  ParaMap(int m, int n, std::vector<std::int64_t> values, std::int64_t shift)
      : m_(m), n_(n), values_(std::move(values)), shift_(shift) {}

  int m_ = 0;
  int n_ = 0;
  std::vector<std::int64_t> values_;
  std::int64_t shift_ = 0;
};

/// A morphism of the cyclic category: the Z-orbit of a ParaMap.
class CycMap {
 public:
  explicit CycMap(const ParaMap& any_rep) : rep_(any_rep.canonical()) {}
  const ParaMap& rep() const { return rep_; }
  int m() const { return rep_.m(); }
  int n() const { return rep_.n(); }

  friend bool operator==(const CycMap&, const CycMap&) = default;
  friend auto operator<=>(const CycMap&, const CycMap&) = default;

 private:
  ParaMap rep_;
};

/// g o f. Throws TypeMismatch when f.tgt != g.src.
ParaMap compose(const ParaMap& g, const ParaMap& f);
CycMap compose(const CycMap& g, const CycMap& f);

enum class MapClass { kInjective, kSurjective, kBoth, kNeither };
std::string to_string(MapClass c);
MapClass classify(const ParaMap& f);
bool is_injective(const ParaMap& f);
bool is_surjective(const ParaMap& f);

enum class HomKind { kAll, kInj, kSurj };
std::string to_string(HomKind k);
HomKind parse_hom_kind(const std::string& s);

inline constexpr std::size_t kDefaultHomCap = 1'000'000;

/// Canonical representatives of Hom_cyc(Par(m), Par(n)) of the requested
/// kind, in lexicographic order. Throws ResourceBound above `cap`.
std::vector<CycMap> enumerate_hom(int m, int n, HomKind kind, std::size_t cap = kDefaultHomCap);

/// f^v(y) = max{x | f(x) <= y}, with D(Par(n)) identified with Par(n) by
/// the cut position of each surjection to [1].
ParaMap dualize_map(const ParaMap& f);

/// Component at Par(n) of the unit Id => D o D, which on the cut encoding is
/// x -> x - 1. dualize(dualize(f)) o unit(m) == unit(n) o f for every f.
ParaMap double_dual_unit(int n);

/// unit(n)^{-1} o D(D(f)) o unit(m); equals f for every f.
ParaMap double_dual_transport(const ParaMap& f);

/// The map Z x g : Par(m) -> Par(n) for a monotone g : [m] -> [n].
/// Throws NotMonotone.
ParaMap embed_simplex(std::span<const int> g, int n);

ParaMap shift_action(const ParaMap& f, std::int64_t k);
CycMap cyc_canonicalize(const ParaMap& f);

}  // namespace bc

#endif  // BROKENCYCLE_PARACAT_HPP
