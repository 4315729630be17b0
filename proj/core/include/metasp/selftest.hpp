#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace metasp {

struct SelftestOptions {
  bool sp4 = false;  // also run the Sp4 coset oracle
  std::vector<int> sp4_primes{3};
  std::uint64_t seed = 1;
  int threads = 0;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

constexpr int kSelftestCriteria = 8;

CriterionResult run_criterion(int id, const SelftestOptions& opts);
std::vector<CriterionResult> run_selftest(const SelftestOptions& opts);

}  // namespace metasp
