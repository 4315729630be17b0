#include <gtest/gtest.h>

#include <random>

#include "metasp/oracle.hpp"
#include "metasp/padic.hpp"
#include "oracles.hpp"

using namespace metasp;

namespace {

// p-adic valuation and unit part of a nonzero integer.
std::pair<int, long long> split(long long a, long long p) {
  int v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return {v, a};
}

void expect_represents(const PadicApprox& x, long long exact, long long p) {
  if (exact == 0) {
    EXPECT_TRUE(x.is_zero());
    return;
  }
  const auto [v, u] = split(exact, p);
  if (x.is_zero()) {
    // Only allowed if the true value is below the tracked precision.
    EXPECT_GE(v, x.valuation());
    return;
  }
  ASSERT_EQ(x.valuation(), v) << exact;
  const long long M = oracle::ipow(p, x.relative_precision());
  EXPECT_EQ(static_cast<long long>(x.unit()) % M, oracle::pmod(u, M)) << exact;
}

PadicMatrix from_ints(GroupTag tag, const std::vector<std::vector<long long>>& a, int p, int m) {
  const int n = static_cast<int>(a.size());
  PadicMatrix g(tag, n, p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.at(i, j) = a[i][j] ? PadicApprox::from_int(p, a[i][j], m) : PadicApprox::exact_zero(p);
  return g;
}

PadicMatrix from_rationals(GroupTag tag, const std::vector<std::vector<Rational>>& a, int p, int m) {
  const int n = static_cast<int>(a.size());
  PadicMatrix g(tag, n, p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational& r = a[i][j];
      if (r.numerator() == 0) continue;
      auto [v, u] = split(r.denominator(), p);
      if (u != 1) throw std::logic_error("test matrices have p-power denominators");
      g.at(i, j) = PadicApprox::from_scaled(p, r.numerator(), -v, m);
    }
  return g;
}

std::vector<std::vector<long long>> symplectic_J() {
  return {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}};
}

bool is_symplectic(const std::vector<std::vector<Rational>>& g) {
  const auto J = symplectic_J();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Rational s(0);
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) s += g[k][i] * Rational(J[k][l]) * g[l][j];
      if (s != Rational(J[i][j])) return false;
    }
  return true;
}

}  // namespace

TEST(Padic, ArithmeticAgainstExactIntegers) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long long> d(-5000, 5000);
  for (int p : {3, 5, 7}) {
    const int m = 8;
    for (int t = 0; t < 2000; ++t) {
      const long long a = d(rng), b = d(rng);
      const auto A = PadicApprox::from_int(p, a, m), B = PadicApprox::from_int(p, b, m);
      expect_represents(A + B, a + b, p);
      expect_represents(A - B, a - b, p);
      expect_represents(A * B, a * b, p);
      expect_represents(-A, -a, p);
      if (a != 0 && b != 0 && a % b == 0) expect_represents(A / B, a / b, p);
    }
  }
}

TEST(Padic, PrecisionTracking) {
  const auto x = PadicApprox::from_int(3, 1, 4);
  const auto y = PadicApprox::from_int(3, 82, 4);  // 1 + 81: equal to x mod 3^4
  const auto diff = x - y;
  EXPECT_TRUE(diff.is_zero());
  EXPECT_FALSE(diff.is_exact_zero());
  EXPECT_EQ(diff.absolute_precision(), 4);
  EXPECT_THROW(x / diff, PrecisionError);
  EXPECT_THROW(x / PadicApprox::exact_zero(3), std::domain_error);
  const auto z = PadicApprox::from_scaled(3, 2, -2, 5);
  EXPECT_EQ(z.valuation(), -2);
  EXPECT_EQ(z.absolute_precision(), 3);
  EXPECT_THROW(PadicApprox::from_int(3, 1, 0), std::invalid_argument);
  EXPECT_THROW(x + PadicApprox::from_int(5, 1, 4), std::invalid_argument);
}

TEST(Padic, ElementaryDivisorsMatchMinors) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<long long> d(-30, 30);
  for (int p : {3, 5})
    for (int n : {2, 3, 4})
      for (int t = 0; t < 60; ++t) {
        std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
        for (auto& row : a)
          for (auto& x : row) x = d(rng) * (t % 3 == 0 ? p : 1) + (t % 5 == 0 ? 0 : d(rng) % 3);
        std::vector<std::vector<__int128>> wide(n);
        for (int i = 0; i < n; ++i) wide[i].assign(a[i].begin(), a[i].end());
        if (oracle::det(wide) == 0) continue;
        const auto g = from_ints(GroupTag::GL, a, p, 16);
        EXPECT_EQ(elementary_divisor_valuations(g), oracle::divisors_by_minors(a, p));
      }
}

TEST(Padic, CartanInvariantExamples) {
  const int p = 3, m = 10;
  EXPECT_EQ(cartan_invariant(PadicMatrix::identity(GroupTag::SL2, 2, p, m)), Cocharacter({0}));
  EXPECT_EQ(cartan_invariant(PadicMatrix::identity(GroupTag::Sp4, 4, p, m)), Cocharacter({0, 0}));
  for (const auto& l : {IntVec{-2, -1}, IntVec{-1, -1}, IntVec{-3, 0}})
    EXPECT_EQ(cartan_invariant(PadicMatrix::torus(GroupTag::Sp4, Cocharacter(l), p, m)), Cocharacter(l));
  // [[1,0],[1/p,1]] * diag(1/p, p) has an entry of valuation -2.
  PadicMatrix u = PadicMatrix::identity(GroupTag::SL2, 2, p, m);
  u.at(1, 0) = PadicApprox::from_scaled(p, 1, -1, m);
  EXPECT_EQ(cartan_invariant(u * PadicMatrix::torus(GroupTag::SL2, Cocharacter({-1}), p, m)), Cocharacter({-2}));
  PadicMatrix bad = PadicMatrix::identity(GroupTag::SL2, 2, p, m);
  bad.at(0, 0) = PadicApprox::from_int(p, 2, m);
  EXPECT_THROW(cartan_invariant(bad), std::invalid_argument);
  EXPECT_EQ(cartan_invariant(bad, false), Cocharacter({0}));
}

TEST(Padic, CartanInvariantOfInverseOnDiagonals) {
  const int p = 5, m = 10;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      const Cocharacter l({a, b});
      const auto g = PadicMatrix::torus(GroupTag::Sp4, l, p, m);
      const auto ginv = PadicMatrix::torus(GroupTag::Sp4, -l, p, m);
      const auto c = cartan_invariant(g);
      EXPECT_EQ(c, antidominant_rep(l));
      EXPECT_EQ(cartan_invariant(ginv), c);
    }
}

TEST(Padic, CartanInvariantIsBiInvariant) {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> d(-4, 4);
  const int p = 3, m = 14;
  for (int t = 0; t < 100; ++t) {
    std::vector<Rational> x(4), y(4);
    for (auto& v : x) v = Rational(d(rng));
    for (auto& v : y) v = Rational(d(rng));
    const auto k_low = unipotent_matrix(GroupTag::Sp4, x);
    auto k_up = unipotent_matrix(GroupTag::Sp4, y);
    ASSERT_TRUE(is_symplectic(k_low));
    ASSERT_TRUE(is_symplectic(k_up));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < i; ++j) std::swap(k_up[i][j], k_up[j][i]);
    ASSERT_TRUE(is_symplectic(k_up));
    IntVec l{d(rng) % 3, d(rng) % 3};
    const auto g = PadicMatrix::torus(GroupTag::Sp4, Cocharacter(l), p, m);
    const auto kgk = from_rationals(GroupTag::Sp4, k_low, p, m) * g * from_rationals(GroupTag::Sp4, k_up, p, m);
    const auto w = from_ints(GroupTag::Sp4, symplectic_J(), p, m);
    EXPECT_EQ(cartan_invariant(kgk), antidominant_rep(Cocharacter(l)));
    EXPECT_EQ(cartan_invariant(w * kgk), antidominant_rep(Cocharacter(l)));
  }
}

TEST(Padic, GroupTags) {
  for (auto tag : {GroupTag::SL2, GroupTag::GL, GroupTag::Sp4}) EXPECT_EQ(parse_group_tag(to_string(tag)), tag);
  EXPECT_THROW(parse_group_tag("so5"), std::invalid_argument);
  EXPECT_EQ(torus_exponents(GroupTag::Sp4, Cocharacter({-2, -1})), (IntVec{-2, -1, 1, 2}));
  EXPECT_THROW(torus_exponents(GroupTag::SL2, Cocharacter({1, 2})), std::invalid_argument);
}
