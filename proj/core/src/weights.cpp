#include "metasp/weights.hpp"

#include <stdexcept>

namespace metasp {

bool is_q_restricted(const Character& nu, long long q) {
  const int n = nu.rank();
  for (int i = 1; i <= n; ++i) {
    const int a = pairing(nu, coroot(i, n));
    if (a < 0 || a >= q) return false;
  }
  return true;
}

QRestrictedWeight::QRestrictedWeight(Character nu, long long q) : nu_(std::move(nu)), q_(q) {
  if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
  if (!is_q_restricted(nu_, q_)) throw std::invalid_argument("weight " + to_string(nu_) + " is not q-restricted");
}

IntVec QRestrictedWeight::pairings() const {
  const int n = rank();
  IntVec r(n);
  for (int i = 1; i <= n; ++i) r[i - 1] = pairing(nu_, coroot(i, n));
  return r;
}

ParabolicSubset pi_nu(const QRestrictedWeight& w) {
  const int n = w.rank();
  ParabolicSubset J(n);
  const IntVec a = w.pairings();
  for (int i = 1; i <= n; ++i)
    if (a[i - 1] == 0) J.insert(i);
  return J;
}

bool is_M_regular(const QRestrictedWeight& w, const ParabolicSubset& J) { return pi_nu(w).is_subset_of(J); }

QRestrictedWeight change_of_weight_pair(const QRestrictedWeight& w, int i) {
  const int n = w.rank();
  if (pairing(w.nu(), coroot(i, n)) != 0)
    throw std::invalid_argument("change of weight needs <nu, alpha_i^vee> = 0");
  const Character shifted = w.nu() + fundamental_weight(i, n) * static_cast<int>(w.q() - 1);
  return QRestrictedWeight(shifted, w.q());
}

int x0_rank(int n) {
  // Row-reduce the matrix whose rows are the simple coroots; the kernel of
  // chi -> (<chi, alpha_i^vee>)_i has dimension n - rank.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (int i = 1; i <= n; ++i) {
    const Cocharacter c = coroot(i, n);
    for (int k = 0; k < n; ++k) m[i - 1][k] = c.coords[k];
  }
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = rank;
    while (piv < n && m[piv][col].numerator() == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[rank]);
    for (int r = 0; r < n; ++r) {
      if (r == rank || m[r][col].numerator() == 0) continue;
      const Rational f = m[r][col] / m[rank][col];
      for (int c = 0; c < n; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return n - rank;
}

bool same_weight_class(const QRestrictedWeight& a, const QRestrictedWeight& b) {
  if (a.q() != b.q() || a.rank() != b.rank()) throw std::invalid_argument("weights over different data");
  const int n = a.rank();
  const long long step = a.q() - 1;
  Character d = a.nu() - b.nu();
  IntVec scaled(n);
  for (int k = 0; k < n; ++k) {
    if (d.coords[k] % step != 0) return false;
    scaled[k] = static_cast<int>(d.coords[k] / step);
  }
  // (nu - nu') / (q - 1) must lie in X^0(T).
  const Character x(scaled);
  for (int i = 1; i <= n; ++i)
    if (pairing(x, coroot(i, n)) != 0) return false;
  return true;
}

bool LeviWeight::is_one_dimensional() const {
  const int n = nu.rank();
  for (int j : levi.indices())
    if (pairing(nu, coroot(j, n)) != 0) return false;
  return true;
}

LeviWeight restrict_weight_to_levi(const QRestrictedWeight& w, const ParabolicSubset& J) {
  if (J.rank() != w.rank()) throw std::invalid_argument("rank mismatch");
  return LeviWeight{w.nu(), w.q(), J};
}

LeviWeight restrict_weight_to_levi(const LeviWeight& w, const ParabolicSubset& J) {
  if (!J.is_subset_of(w.levi)) throw std::invalid_argument("can only restrict to a smaller Levi");
  return LeviWeight{w.nu, w.q, J};
}

}  // namespace metasp
