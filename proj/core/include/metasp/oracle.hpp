#pragma once

#include <vector>

#include "metasp/cover.hpp"
#include "metasp/hecke.hpp"
#include "metasp/padic.hpp"

namespace metasp {

struct CosetCountResult {
  Cocharacter mu;
  Cocharacter lambda;
  long long raw_count = 0;
  long long count_mod_p = 0;  // symmetric representative
  int depth_used = 0;
  bool stabilized = false;
};

struct OracleOptions {
  int threads = 0;             // 0: hardware concurrency
  bool check_stability = true;  // rerun at depth + 1
  int precision = 0;           // 0: depth + max|lambda| + 2
};

// Lower-triangular unipotent u with u * mu(pi) in K lambda(pi) K, counted
// over representatives with negative-root coordinates in p^{-depth}Z_p/Z_p.
long long count_cosets_at_depth(const Cocharacter& mu, const Cocharacter& lambda, int depth, GroupTag tag, int p,
                                const OracleOptions& opts = {});
CosetCountResult count_cosets(const Cocharacter& mu, const Cocharacter& lambda, int depth, GroupTag tag, int p,
                              const OracleOptions& opts = {});

std::vector<CosetCountResult> reductive_satake_table(const Cocharacter& lambda, int depth, GroupTag tag, int p,
                                                     const OracleOptions& opts = {});
TorusHeckeElement reductive_satake_row(const Cocharacter& lambda, int depth, GroupTag tag, int p,
                                       const OracleOptions& opts = {});

struct PipelineReport {
  int i = 0, n = 0, p = 0, depth = 0;
  TorusHeckeElement target;
  TorusHeckeElement reductive_row;
  TorusHeckeElement filtered;
  std::vector<CosetCountResult> table;
  bool all_stabilized = false;
  bool agree = false;
};

int default_pipeline_depth(int i, int n);
PipelineReport verify_metaplectic_pipeline(int i, int n, int p, int depth = 0, const OracleOptions& opts = {});

// Checks that distinct representatives at the given depth lie in distinct
// cosets of the integral unipotent subgroup.
bool representatives_distinct(GroupTag tag, int p, int depth);

// Negative-root coordinates -> lower unipotent matrix, exact over Q.
std::vector<std::vector<Rational>> unipotent_matrix(GroupTag tag, const std::vector<Rational>& x);
int unipotent_dimension(GroupTag tag);

// Hilbert symbol over Q_p by testing primitive solvability of
// z^2 = x X^2 + y Y^2 modulo p^k.
int hilbert_by_solvability(const SquareClass& x, const SquareClass& y, const LocalField& F, int k = 4);

}  // namespace metasp
