#pragma once

#include "metasp/rootdata.hpp"

namespace metasp {

// Highest weight nu with 0 <= <nu, alpha^vee> < q for every simple alpha.
class QRestrictedWeight {
 public:
  QRestrictedWeight(Character nu, long long q);

  const Character& nu() const { return nu_; }
  long long q() const { return q_; }
  int rank() const { return nu_.rank(); }
  IntVec pairings() const;
  bool operator==(const QRestrictedWeight&) const = default;

 private:
  Character nu_;
  long long q_;
};

bool is_q_restricted(const Character& nu, long long q);

ParabolicSubset pi_nu(const QRestrictedWeight& w);
bool is_M_regular(const QRestrictedWeight& w, const ParabolicSubset& J);
QRestrictedWeight change_of_weight_pair(const QRestrictedWeight& w, int i);

// Rank of X^0(T) = {chi : <chi, alpha^vee> = 0 for all simple alpha},
// computed from the coroot matrix.
int x0_rank(int n);
bool same_weight_class(const QRestrictedWeight& a, const QRestrictedWeight& b);

// Weight of the Levi M_J with the same highest weight.
struct LeviWeight {
  Character nu;
  long long q;
  ParabolicSubset levi;

  bool is_one_dimensional() const;
  bool operator==(const LeviWeight&) const = default;
};

LeviWeight restrict_weight_to_levi(const QRestrictedWeight& w, const ParabolicSubset& J);
LeviWeight restrict_weight_to_levi(const LeviWeight& w, const ParabolicSubset& J);

}  // namespace metasp
