// Runs acceptance criteria 1-10 and prints one line per criterion.
// Usage: acceptance [seed]

#include <cstdio>
#include <cstdlib>
#include <string>

#include "criteria.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = bc::acceptance::kDefaultSeed;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  std::printf("acceptance suite, seed %llu\n", static_cast<unsigned long long>(seed));
  std::fflush(stdout);
  auto results = bc::acceptance::run_suite(seed, [](const bc::acceptance::CriterionResult& r) {
    std::printf("%s\n", bc::acceptance::format_line(r).c_str());
    std::fflush(stdout);
  });
  bool all = true;
  for (const auto& r : results) all = all && r.pass();
  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return all ? 0 : 1;
}
