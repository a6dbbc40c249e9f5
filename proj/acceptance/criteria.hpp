#ifndef BROKENCYCLE_CRITERIA_HPP
#define BROKENCYCLE_CRITERIA_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace bc::acceptance {

inline constexpr std::uint64_t kDefaultSeed = 20240229;

// Runtime ceilings in seconds. A criterion without its own ceiling only
// counts toward the suite total.
inline constexpr double kLimitHomTable = 10.0;
inline constexpr double kLimitCategoryAxioms = 60.0;
inline constexpr double kLimitRoundTrip = 120.0;
inline constexpr double kLimitSdot = 60.0;
inline constexpr double kLimitSuite = 300.0;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool checks_pass = false;
  double seconds = 0.0;
  /// 0 when the criterion has no ceiling of its own.
  double limit = 0.0;
  std::size_t checks = 0;
  std::string detail;

  bool pass() const { return checks_pass && (limit <= 0.0 || seconds < limit); }
};

CriterionResult hom_table();
CriterionResult category_axioms();
CriterionResult duality();
CriterionResult conv_sizes();
CriterionResult fspace_functoriality();
CriterionResult localization_adjunction();
CriterionResult round_trip(std::uint64_t seed);
CriterionResult sheaf_gluing(std::uint64_t seed);
CriterionResult sdot_periodicity(std::uint64_t seed);

/// Runs criteria 1-9, then criterion 10: every one passed, the total stays
/// under kLimitSuite, and the seeded instances regenerate identically.
/// `progress` is called after each criterion.
std::vector<CriterionResult> run_suite(
    std::uint64_t seed, const std::function<void(const CriterionResult&)>& progress = {});

/// "[PASS]  3 duality (0.41 s, 1234 checks)" style line.
std::string format_line(const CriterionResult& r);
nlohmann::json to_json(const std::vector<CriterionResult>& results);

}  // namespace bc::acceptance

#endif  // BROKENCYCLE_CRITERIA_HPP
