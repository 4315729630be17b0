#include <gtest/gtest.h>

#include "metasp/weights.hpp"
#include "oracles.hpp"

using namespace metasp;

namespace {

// nu from its pairings with the simple coroots: nu_k = p_k + ... + p_n.
Character from_pairings(const IntVec& p) {
  const int n = static_cast<int>(p.size());
  IntVec nu(n, 0);
  int run = 0;
  for (int k = n - 1; k >= 0; --k) nu[k] = run += p[k];
  return Character(nu);
}

// Every pairing vector in [0, q)^n.
std::vector<IntVec> restricted_pairings(int n, int q) {
  std::vector<IntVec> out;
  IntVec p(n, 0);
  while (true) {
    out.push_back(p);
    int k = 0;
    while (k < n && p[k] == q - 1) p[k++] = 0;
    if (k == n) break;
    ++p[k];
  }
  return out;
}

}  // namespace

TEST(Weights, PiNuExamples) {
  EXPECT_EQ(pi_nu(QRestrictedWeight(Character({0, 0}), 3)), ParabolicSubset::full(2));
  EXPECT_EQ(pi_nu(QRestrictedWeight(fundamental_weight(1, 2), 3)), ParabolicSubset::of(2, {2}));
  EXPECT_EQ(pi_nu(QRestrictedWeight(from_pairings({1, 2, 1}), 3)), ParabolicSubset::empty(3));
  EXPECT_THROW(QRestrictedWeight(from_pairings({3, 0}), 3), std::invalid_argument);
  EXPECT_THROW(QRestrictedWeight(Character({0, 1}), 3), std::invalid_argument);
}

TEST(Weights, MRegularity) {
  const QRestrictedWeight zero(Character({0, 0}), 3), w1(fundamental_weight(1, 2), 3);
  EXPECT_TRUE(is_M_regular(w1, ParabolicSubset::full(2)));
  EXPECT_TRUE(is_M_regular(zero, ParabolicSubset::full(2)));
  EXPECT_FALSE(is_M_regular(zero, ParabolicSubset::of(2, {1})));
  EXPECT_FALSE(is_M_regular(zero, ParabolicSubset::empty(2)));
  EXPECT_TRUE(is_M_regular(w1, ParabolicSubset::of(2, {2})));
}

TEST(Weights, ChangeOfWeightExamples) {
  const QRestrictedWeight zero(Character({0, 0}), 3);
  const auto a = change_of_weight_pair(zero, 1);
  EXPECT_EQ(a.pairings(), (IntVec{2, 0}));
  EXPECT_EQ(a.nu(), fundamental_weight(1, 2) * 2);
  EXPECT_EQ(change_of_weight_pair(zero, 2).pairings(), (IntVec{0, 2}));
  const QRestrictedWeight big(Character(IntVec(4, 0)), 9);
  EXPECT_EQ(change_of_weight_pair(big, 4).pairings(), (IntVec{0, 0, 0, 8}));
  EXPECT_THROW(change_of_weight_pair(QRestrictedWeight(fundamental_weight(1, 2), 3), 1), std::invalid_argument);
}

TEST(Weights, ChangeOfWeightExhaustive) {
  for (int q : {3, 5, 9})
    for (int n = 1; n <= 3; ++n)
      for (const auto& p : restricted_pairings(n, q)) {
        const QRestrictedWeight w(from_pairings(p), q);
        EXPECT_EQ(w.pairings(), p);
        for (int i = 1; i <= n; ++i) {
          if (p[i - 1] != 0) {
            EXPECT_THROW(change_of_weight_pair(w, i), std::invalid_argument);
            continue;
          }
          const auto v = change_of_weight_pair(w, i);
          EXPECT_TRUE(is_q_restricted(v.nu(), q));
          EXPECT_EQ(v.pairings()[i - 1], q - 1);
          auto expect = pi_nu(w);
          expect.erase(i);
          EXPECT_EQ(pi_nu(v), expect);
          EXPECT_FALSE(same_weight_class(w, v));
        }
      }
}

TEST(Weights, X0IsZero) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(x0_rank(n), 0);
  // Independent check for small n: no nonzero integer character in a box
  // pairs to zero with every simple coroot.
  for (int n = 1; n <= 3; ++n) {
    IntVec v(n, -3);
    int found = 0;
    while (true) {
      bool zero_vec = true, orthogonal = true;
      for (int x : v) zero_vec = zero_vec && x == 0;
      for (int j = 1; j <= n; ++j) {
        const auto c = oracle::coroot_e(j, n);
        int s = 0;
        for (int k = 0; k < n; ++k) s += v[k] * c[k];
        orthogonal = orthogonal && s == 0;
      }
      if (orthogonal && !zero_vec) ++found;
      int k = 0;
      while (k < n && v[k] == 3) v[k++] = -3;
      if (k == n) break;
      ++v[k];
    }
    EXPECT_EQ(found, 0);
  }
}

TEST(Weights, SameWeightClass) {
  const QRestrictedWeight a(from_pairings({1, 0}), 3), b(from_pairings({0, 1}), 3);
  EXPECT_TRUE(same_weight_class(a, a));
  EXPECT_FALSE(same_weight_class(a, b));
  EXPECT_THROW(same_weight_class(a, QRestrictedWeight(from_pairings({1, 0}), 5)), std::invalid_argument);
}

TEST(Weights, RestrictToLevi) {
  const QRestrictedWeight w(from_pairings({1, 0, 2}), 3);
  const auto full = restrict_weight_to_levi(w, ParabolicSubset::full(3));
  EXPECT_EQ(full.nu, w.nu());
  EXPECT_EQ(full.levi, ParabolicSubset::full(3));
  EXPECT_FALSE(full.is_one_dimensional());
  const auto torus = restrict_weight_to_levi(w, ParabolicSubset::empty(3));
  EXPECT_TRUE(torus.is_one_dimensional());
  EXPECT_EQ(torus.nu, w.nu());
  EXPECT_TRUE(restrict_weight_to_levi(w, ParabolicSubset::of(3, {2})).is_one_dimensional());

  for (std::uint32_t m = 0; m < 8; ++m) {
    const ParabolicSubset J(3, m);
    for (std::uint32_t m2 = 0; m2 < 8; ++m2) {
      const ParabolicSubset J2(3, m2);
      if (!J2.is_subset_of(J)) {
        EXPECT_THROW(restrict_weight_to_levi(restrict_weight_to_levi(w, J), J2), std::invalid_argument);
        continue;
      }
      EXPECT_EQ(restrict_weight_to_levi(restrict_weight_to_levi(w, J), J2), restrict_weight_to_levi(w, J2));
    }
  }
}
