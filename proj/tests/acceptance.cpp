// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "metasp/oracle.hpp"
#include "metasp/selftest.hpp"
#include "oracles.hpp"

using namespace metasp;

namespace {

// Extra checks against the brute-force oracles of the test tree.  Each
// returns an empty string on success, else a description of the failure.
using Extra = std::function<std::string()>;

long long box_total(GroupTag tag, const Cocharacter& lambda, int B, int depth, int p) {
  const int r = lambda.rank();
  IntVec v(r, -B);
  OracleOptions opts;
  opts.check_stability = false;
  long long total = 0;
  while (true) {
    total += count_cosets_at_depth(Cocharacter(v), lambda, depth, tag, p, opts);
    int k = 0;
    while (k < r && v[k] == B) v[k++] = -B;
    if (k == r) break;
    ++v[k];
  }
  return total;
}

std::string sp4_totals() {
  for (const IntVec& l : {IntVec{-2, -2}, IntVec{-2, 0}, IntVec{-1, -1}}) {
    const long long got = box_total(GroupTag::Sp4, Cocharacter(l), 2, 4, 3);
    const long long want = oracle::double_coset_size(l, 3);
    if (got != want) {
      std::ostringstream os;
      os << "coset total for " << to_string(Cocharacter(l)) << " is " << got << ", expected " << want;
      return os.str();
    }
  }
  return "";
}

std::string sl2_totals() {
  for (int p : {3, 5, 7}) {
    const long long got = box_total(GroupTag::SL2, Cocharacter({-2}), 2, 4, p);
    if (got != oracle::double_coset_size({-2}, p)) return "SL2 coset total mismatch at p=" + std::to_string(p);
  }
  return "";
}

std::string hilbert_triples() {
  for (int p : {3, 5, 7}) {
    const auto F = LocalField::make(p);
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) {
        const auto a = SquareClass::from_index(x), b = SquareClass::from_index(y);
        const int want = oracle::hilbert_by_triples(oracle::class_rep(a.val, a.unit, p),
                                                    oracle::class_rep(b.val, b.unit, p), p);
        if (hilbert(a, b, F) != want) return "tame symbol disagrees with the triple search at p=" + std::to_string(p);
      }
  }
  return "";
}

int run_cli_selftest(std::string& detail) {
  const std::string cmd = std::string(METASP_CLI) + " selftest 2>&1";
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) {
    detail = "could not start the CLI";
    return -1;
  }
  char buf[512];
  int lines = 0;
  while (fgets(buf, sizeof buf, f)) ++lines;
  const int status = pclose(f);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  detail = "exit " + std::to_string(code) + ", " + std::to_string(lines) + " lines";
  return code;
}

}  // namespace

int main() {
  SelftestOptions opts;
  opts.sp4 = true;
  opts.sp4_primes = {3, 5};

  const Extra none = [] { return std::string(); };
  const Extra extras[kSelftestCriteria + 1] = {none, sp4_totals, sl2_totals, hilbert_triples, none,
                                               none, none,       none,       none};
  int failures = 0;
  for (int id = 1; id <= kSelftestCriteria; ++id) {
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r = run_criterion(id, opts);
    std::string extra;
    try {
      extra = extras[id]();
    } catch (const std::exception& e) {
      extra = e.what();
    }
    if (!extra.empty()) {
      r.pass = false;
      r.detail += "; " + extra;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %d: %s  %s (%s) [%.2fs]\n", id, r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.c_str(), secs);
    failures += !r.pass;
  }

  const auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  const bool ok9 = run_cli_selftest(detail) == 0;
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("criterion 9: %s  selftest command exits 0 (%s) [%.2fs]\n", ok9 ? "PASS" : "FAIL", detail.c_str(), secs);
  failures += !ok9;

  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
