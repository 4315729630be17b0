#include "metasp/cover.hpp"

#include <stdexcept>

namespace metasp {

bool is_odd_prime(long long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

long long smallest_nonresidue(long long p) {
  for (long long a = 2; a < p; ++a) {
    bool square = false;
    for (long long x = 1; x < p && !square; ++x) square = (x * x) % p == a;
    if (!square) return a;
  }
  throw std::invalid_argument("no quadratic nonresidue");
}

LocalField LocalField::make(int p, int f) {
  if (!is_odd_prime(p)) throw std::invalid_argument("residue characteristic must be an odd prime");
  return make(p, f, smallest_nonresidue(p));
}

LocalField LocalField::make(int p, int f, long long nonsquare_unit) {
  if (!is_odd_prime(p)) throw std::invalid_argument("residue characteristic must be an odd prime");
  if (f < 1) throw std::invalid_argument("residue degree must be positive");
  LocalField F;
  F.p = p;
  F.f = f;
  F.q = 1;
  for (int k = 0; k < f; ++k) F.q *= p;
  F.nonsquare_unit = nonsquare_unit;
  if (f == 1) {
    long long r = ((nonsquare_unit % p) + p) % p;
    for (long long x = 0; x < p; ++x)
      if ((x * x) % p == r) throw std::invalid_argument("chosen unit is a square mod p");
  }
  return F;
}

SquareClass SquareClass::parse(const std::string& s) {
  if (s == "1") return one();
  if (s == "u") return u();
  if (s == "pi") return pi();
  if (s == "upi") return upi();
  throw std::invalid_argument("unknown square class '" + s + "' (expected 1|u|pi|upi)");
}

std::string to_string(const SquareClass& c) {
  static const char* names[] = {"1", "u", "pi", "upi"};
  return names[c.index()];
}

int eval_Q(const Cocharacter& lambda) {
  const int s = lambda.similitude.value_or(0);
  int q = 0;
  for (int a : lambda.coords) q += a * a + a * s;
  return q;
}

int eval_B(const Cocharacter& lambda, const Cocharacter& lambda_prime) {
  return eval_Q(lambda + lambda_prime) - eval_Q(lambda) - eval_Q(lambda_prime);
}

int hilbert(const SquareClass& x, const SquareClass& y, const LocalField& F) {
  // Tame symbol: reduce (-1)^{ab} u_x^b / u_y^a mod pi and take the quadratic
  // residue character of the residue field.
  const int a = x.val, b = y.val;
  const int minus_one_bit = F.minus_one_is_square() ? 0 : 1;
  const int parity = (a * b * minus_one_bit + x.unit * b + y.unit * a) & 1;
  return parity ? -1 : 1;
}

int commutator_sign(const Cocharacter& lambda, const SquareClass& x,
                    const Cocharacter& lambda_prime, const SquareClass& y, const LocalField& F) {
  const int B = eval_B(lambda, lambda_prime);
  return (B % 2 == 0) ? 1 : hilbert(x, y, F);
}

bool splits_over_Mprime(int i, int n) {
  if (i < 1 || i > n) throw std::out_of_range("simple root index out of range");
  return eval_Q(coroot(i, n)) % 2 == 0;
}

SiegelElement rao_siegel_product(const SiegelElement& a, const SiegelElement& b, const LocalField& F) {
  return {a.det * b.det, hilbert(a.det, b.det, F) * a.zeta * b.zeta};
}

bool HilbertCharacter::is_trivial() const {
  for (int k = 0; k < 4; ++k)
    if ((*this)(SquareClass::from_index(k)) != 1) return false;
  return true;
}

HilbertCharacter psi_ratio_character(const SquareClass& a, const LocalField& F) {
  return HilbertCharacter(a, F);
}

}  // namespace metasp
