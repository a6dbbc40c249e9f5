#ifndef BROKENCYCLE_ORACLE_HPP
#define BROKENCYCLE_ORACLE_HPP

// Brute-force enumerators written against the raw definitions, evaluated on
// explicit finite windows of Z. They share no code with the library so that
// agreement between the two is evidence rather than tautology.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bc::oracle {

enum class Kind { kAll, kInj, kSurj };

/// Images of slots 0..m in period 0 for every equivariant weakly monotone
/// map Z x [m] -> Z x [n] with f(0, 0) in period 0.
std::vector<std::vector<std::int64_t>> hom(int m, int n, Kind kind);
std::size_t hom_count(int m, int n, Kind kind);
/// (m + 1) * C(m + n + 1, m + 1).
std::uint64_t hom_closed_form(int m, int n);

/// Maps between paracyclic preorders given by class sizes, with the image of
/// slot 0 in the first target period.
std::vector<std::vector<std::int64_t>> preorder_maps(const std::vector<int>& src,
                                                     const std::vector<int>& tgt);

/// Convex equivariant relations on the preorder whose quotient is a
/// parasimplex, as boundary subsets.
std::size_t conv_count(const std::vector<int>& sizes);

struct ConvTildeCounts {
  std::size_t preorders = 0;
  std::size_t objects = 0;
  std::size_t morphisms = 0;
  std::size_t edges = 0;
  std::size_t cartesian = 0;
};

/// Objects, canonical morphisms and edges of Conv~ over preorders of period
/// at most N + 1.
ConvTildeCounts conv_tilde(int n_max);

/// Frozen values produced by the functions above; tests compare the library
/// against these and against fresh oracle runs.
inline constexpr std::uint64_t kHomTable[4][4] = {
    {1, 2, 3, 4},
    {2, 6, 12, 20},
    {3, 12, 30, 60},
    {4, 20, 60, 140},
};
inline constexpr std::uint64_t kInjTable[4][4] = {
    {1, 2, 3, 4},
    {0, 2, 6, 12},
    {0, 0, 3, 12},
    {0, 0, 0, 4},
};
inline constexpr std::uint64_t kSurjTable[4][4] = {
    {1, 0, 0, 0},
    {2, 2, 0, 0},
    {3, 6, 3, 0},
    {4, 12, 12, 4},
};
/// conv_tilde(N) for N = 0..3.
inline constexpr ConvTildeCounts kConvTilde[4] = {
    {1, 1, 1, 1, 1},
    {3, 5, 20, 38, 24},
    {7, 19, 419, 1499, 597},
    {15, 65, 10378, 63096, 16062},
};

}  // namespace bc::oracle

#endif  // BROKENCYCLE_ORACLE_HPP
