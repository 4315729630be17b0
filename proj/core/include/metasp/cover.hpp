#pragma once

#include <string>
#include <utility>

#include "metasp/rootdata.hpp"

namespace metasp {

// Nonarchimedean local field with odd residue characteristic, described by
// the data the tame Hilbert symbol needs.
struct LocalField {
  int p = 3;
  int f = 1;
  long long q = 3;
  // Integer representative of the chosen nonsquare unit class (meaningful
  // for f = 1; for f > 1 the class is abstract).
  long long nonsquare_unit = 2;

  static LocalField make(int p, int f = 1);
  static LocalField make(int p, int f, long long nonsquare_unit);
  bool minus_one_is_square() const { return q % 4 == 1; }
};

bool is_odd_prime(long long p);
long long smallest_nonresidue(long long p);

// F^x / (F^x)^2 = {1, u, pi, u*pi}, stored as (valuation mod 2, unit bit).
struct SquareClass {
  int val = 0;
  int unit = 0;

  static SquareClass one() { return {0, 0}; }
  static SquareClass u() { return {0, 1}; }
  static SquareClass pi() { return {1, 0}; }
  static SquareClass upi() { return {1, 1}; }
  static SquareClass minus_one(const LocalField& F) { return {0, F.minus_one_is_square() ? 0 : 1}; }
  static SquareClass parse(const std::string& s);
  static SquareClass from_index(int k) { return {k >> 1, k & 1}; }

  int index() const { return (val << 1) | unit; }
  bool is_square() const { return val == 0 && unit == 0; }
  SquareClass operator*(const SquareClass& o) const { return {val ^ o.val, unit ^ o.unit}; }
  SquareClass inverse() const { return *this; }
  auto operator<=>(const SquareClass&) const = default;
};

std::string to_string(const SquareClass& c);

int eval_Q(const Cocharacter& lambda);
int eval_B(const Cocharacter& lambda, const Cocharacter& lambda_prime);

int hilbert(const SquareClass& x, const SquareClass& y, const LocalField& F);

int commutator_sign(const Cocharacter& lambda, const SquareClass& x,
                    const Cocharacter& lambda_prime, const SquareClass& y, const LocalField& F);

bool splits_over_Mprime(int i, int n);

// Element of the metaplectic Siegel-Levi torus quotient: the determinant
// square class together with the central sign.
struct SiegelElement {
  SquareClass det;
  int zeta = 1;
  auto operator<=>(const SiegelElement&) const = default;
};

SiegelElement rao_siegel_product(const SiegelElement& a, const SiegelElement& b, const LocalField& F);

// x -> (x, a)_F.
class HilbertCharacter {
 public:
  HilbertCharacter(SquareClass a, LocalField F) : a_(a), F_(F) {}
  int operator()(const SquareClass& x) const { return hilbert(x, a_, F_); }
  bool is_trivial() const;
  const SquareClass& parameter() const { return a_; }

 private:
  SquareClass a_;
  LocalField F_;
};

HilbertCharacter psi_ratio_character(const SquareClass& a, const LocalField& F);

}  // namespace metasp
