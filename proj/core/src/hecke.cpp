#include "metasp/hecke.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace metasp {

long long TorusHeckeElement::normalize(long long c) const {
  if (p_ == 0) return c;
  long long r = c % p_;
  if (r < 0) r += p_;
  if (r > p_ / 2) r -= p_;
  return r;
}

TorusHeckeElement TorusHeckeElement::tau(const Cocharacter& mu, long long p) {
  TorusHeckeElement h(p);
  h.add_term(mu, 1);
  return h;
}

long long TorusHeckeElement::coefficient(const Cocharacter& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? 0 : it->second;
}

void TorusHeckeElement::add_term(const Cocharacter& mu, long long c) {
  long long v = normalize(coefficient(mu) + c);
  if (v == 0)
    terms_.erase(mu);
  else
    terms_[mu] = v;
}

TorusHeckeElement TorusHeckeElement::reduce(long long p) const {
  TorusHeckeElement r(p);
  for (const auto& [mu, c] : terms_) r.add_term(mu, c);
  return r;
}

namespace {
long long common_modulus(long long a, long long b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw std::invalid_argument("Hecke elements over different coefficient rings");
}
}  // namespace

TorusHeckeElement TorusHeckeElement::operator+(const TorusHeckeElement& o) const {
  TorusHeckeElement r = reduce(common_modulus(p_, o.p_));
  for (const auto& [mu, c] : o.terms_) r.add_term(mu, c);
  return r;
}

TorusHeckeElement TorusHeckeElement::operator-(const TorusHeckeElement& o) const { return *this + o * -1; }

TorusHeckeElement TorusHeckeElement::operator*(long long k) const {
  TorusHeckeElement r(p_);
  for (const auto& [mu, c] : terms_) r.add_term(mu, c * k);
  return r;
}

bool TorusHeckeElement::operator==(const TorusHeckeElement& o) const {
  const long long p = common_modulus(p_, o.p_);
  return reduce(p).terms_ == o.reduce(p).terms_;
}

TorusHeckeElement tau_convolve(const TorusHeckeElement& a, const TorusHeckeElement& b) {
  TorusHeckeElement r(common_modulus(a.modulus(), b.modulus()));
  for (const auto& [mu, c] : a.terms())
    for (const auto& [nu, d] : b.terms()) r.add_term(mu + nu, c * d);
  return r;
}

Cocharacter lambda_alpha(int i, int n) {
  if (i < 1 || i > n) throw std::out_of_range("simple root index out of range");
  IntVec c(n, 0);
  for (int k = 0; k < i; ++k) c[k] = -1;
  return Cocharacter(c);
}

TorusHeckeElement metaplectic_satake_T2lambda(int i, int n, long long p) {
  const Cocharacter two_lambda = lambda_alpha(i, n) * 2;
  TorusHeckeElement h = TorusHeckeElement::tau(two_lambda, p);
  if (i < n) h.add_term(two_lambda + coroot(i, n), -1);
  return h;
}

TorusHeckeElement parity_filter(const TorusHeckeElement& h, const Cocharacter& lambda) {
  TorusHeckeElement r(h.modulus());
  for (const auto& [mu, c] : h.terms())
    if ((mu + lambda).coord_sum() % 2 == 0) r.add_term(mu, c);
  return r;
}

bool ASet::contains(const IntVec& a) const { return std::binary_search(elements.begin(), elements.end(), a); }

ASet enumerate_A(const Cocharacter& lambda) {
  // {a >= 0 : C a <= 2 <alpha_j, -lambda>} is exactly the coefficient set of
  // the cocharacters antidominant and above 2 lambda.
  ASet A;
  A.base = lambda;
  A.elements = antidominant_above_coefficients(lambda * 2, ParabolicSubset::full(lambda.rank()));
  return A;
}

FiberResult A_fiber(const ASet& A, const IntVec& a, int i) {
  const int n = A.base.rank();
  if (i < 1 || i > n) throw std::out_of_range("simple root index out of range");
  if (!A.contains(a)) throw std::invalid_argument("vector " + to_string(a) + " is not in the A-set");
  FiberResult r;
  for (const IntVec& b : A.elements) {
    bool same = true;
    for (int j = 0; j < n && same; ++j)
      if (j != i - 1) same = b[j] == a[j];
    if (same) r.fiber.push_back(b);
  }
  r.lemma_applies = i < n;
  if (r.lemma_applies) {
    bool off_zero = true;
    for (int j = 0; j < n; ++j)
      if (j != i - 1 && a[j] != 0) off_zero = false;
    if (off_zero) {
      IntVec zero(n, 0), unit(n, 0);
      unit[i - 1] = 1;
      r.conforms = r.fiber == std::vector<IntVec>{zero, unit};
    } else {
      r.conforms = r.fiber == std::vector<IntVec>{a};
    }
  }
  return r;
}

std::vector<std::vector<IntVec>> A_fibers(const ASet& A, int i) {
  std::set<std::vector<IntVec>> seen;
  std::vector<std::vector<IntVec>> out;
  for (const IntVec& a : A.elements) {
    auto f = A_fiber(A, a, i).fiber;
    if (seen.insert(f).second) out.push_back(f);
  }
  return out;
}

bool vanishing_sum_check(const std::map<IntVec, long long>& coeffs, const ASet& A, int i, long long p) {
  const int n = A.base.rank();
  if (i < 1 || i >= n) throw std::invalid_argument("vanishing sum check needs a short simple root");
  for (const IntVec& a : A.elements)
    if (!coeffs.count(a)) throw std::invalid_argument("missing coefficient at " + to_string(a));
  auto reduce = [p](long long c) {
    if (p == 0) return c;
    long long r = c % p;
    return r < 0 ? r + p : r;
  };
  if (reduce(coeffs.at(IntVec(n, 0))) != reduce(1)) return false;
  for (const auto& fiber : A_fibers(A, i)) {
    long long s = 0;
    for (const IntVec& b : fiber) s += coeffs.at(b);
    if (reduce(s) != 0) return false;
  }
  return true;
}

bool vanishing_sum_check(const TorusHeckeElement& h, const ASet& A, int i) {
  const Cocharacter two_lambda = A.base * 2;
  std::map<IntVec, long long> coeffs;
  std::set<Cocharacter> covered;
  for (const IntVec& a : A.elements) {
    const Cocharacter mu = two_lambda + from_coroot_coordinates(a);
    coeffs[a] = h.coefficient(mu);
    covered.insert(mu);
  }
  for (const auto& [mu, c] : h.terms())
    if (!covered.count(mu)) return false;
  return vanishing_sum_check(coeffs, A, i, h.modulus());
}

HeckeCharacter::HeckeCharacter(int n, ParabolicSubset levi, long long N) : n_(n), levi_(levi), N_(N) {
  if (levi_.rank() != n) throw std::invalid_argument("rank mismatch");
  if (N_ < 1) throw std::invalid_argument("value group order must be positive");
  values_[Cocharacter(IntVec(n, 0))] = CharValue::unit(0);
}

void HeckeCharacter::set(const Cocharacter& mu, CharValue v) {
  if (mu.rank() != n_) throw std::invalid_argument("rank mismatch");
  if (!is_antidominant(mu, levi_)) throw std::invalid_argument("Hecke character point must be antidominant for its Levi");
  if (!v.zero) v.exp = ((v.exp % N_) + N_) % N_;
  if (mu == Cocharacter(IntVec(n_, 0)) && !(v == CharValue::unit(0)))
    throw std::invalid_argument("Hecke character must take the value 1 at 0");
  values_[mu] = v;
}

CharValue HeckeCharacter::multiply(CharValue a, CharValue b) const {
  if (a.zero || b.zero) return CharValue::zero_value();
  return CharValue::unit((a.exp + b.exp) % N_);
}

std::optional<CharValue> HeckeCharacter::lookup_depth(const Cocharacter& mu, int depth) const {
  auto it = values_.find(mu);
  if (it != values_.end()) return it->second;
  if (depth == 0 || !is_antidominant(mu, levi_)) return std::nullopt;
  for (const auto& [a, va] : values_) {
    if (a == Cocharacter(IntVec(n_, 0))) continue;
    const Cocharacter b = mu - a;
    if (!is_antidominant(b, levi_)) continue;
    if (auto vb = lookup_depth(b, depth - 1)) return multiply(va, *vb);
  }
  return std::nullopt;
}

std::optional<CharValue> HeckeCharacter::lookup(const Cocharacter& mu) const { return lookup_depth(mu, 3); }

CharValue HeckeCharacter::value(const Cocharacter& mu) const {
  auto v = lookup(mu);
  if (!v) throw std::invalid_argument("Hecke character undefined at " + to_string(mu));
  return *v;
}

bool HeckeCharacter::check_multiplicative() const {
  for (const auto& [a, va] : values_)
    for (const auto& [b, vb] : values_) {
      auto it = values_.find(a + b);
      if (it != values_.end() && !(it->second == multiply(va, vb))) return false;
    }
  return true;
}

HeckeCharacter HeckeCharacter::from_torus_data(const ParabolicSubset& J, const IntVec& theta, long long N,
                                               const std::vector<Cocharacter>& points) {
  const int n = J.rank();
  if (static_cast<int>(theta.size()) != n) throw std::invalid_argument("rank mismatch");
  HeckeCharacter chi(n, J, N);
  for (const Cocharacter& mu : points) {
    if (!is_antidominant(mu, J)) continue;  // outside the algebra of M_J
    bool central = true;
    for (int j : J.indices())
      if (pairing(simple_root(j, n), mu) != 0) central = false;
    long long e = 0;
    for (int k = 0; k < n; ++k) e += static_cast<long long>(theta[k]) * mu.coords[k];
    chi.set(mu, central ? CharValue::unit(e) : CharValue::zero_value());
  }
  return chi;
}

std::vector<Cocharacter> HeckeCharacter::standard_points(int n) {
  std::vector<Cocharacter> pts;
  for (int i = 1; i <= n; ++i) {
    pts.push_back(lambda_alpha(i, n));
    pts.push_back(coroot(i, n));
  }
  return pts;
}

ParabolicSubset pi_chi(const HeckeCharacter& chi, int scale) {
  const int n = chi.rank();
  ParabolicSubset J(n);
  for (int i = 1; i <= n; ++i)
    if (chi.value(lambda_alpha(i, n) * scale).zero) J.insert(i);
  return J;
}

bool HeckeConstant::is_zero() const {
  std::map<long long, int> count;
  for (const auto& [sign, v] : terms)
    if (!v.zero) count[v.exp] += sign;
  for (const auto& [e, c] : count)
    if (c != 0) return false;
  return true;
}

ChangeOfWeightDecision change_of_weight_decision(int i, const HeckeCharacter& chi) {
  const int n = chi.rank();
  if (i < 1 || i > n) throw std::out_of_range("simple root index out of range");
  if (pi_chi(chi).contains(i)) throw std::invalid_argument("change of weight needs alpha_i outside Pi(chi)");
  const Cocharacter two_lambda = lambda_alpha(i, n) * 2;
  ChangeOfWeightDecision d;
  d.constant.terms.emplace_back(1, chi.value(two_lambda));
  if (i < n) d.constant.terms.emplace_back(-1, chi.value(two_lambda + coroot(i, n)));
  d.applicable = !d.constant.is_zero();
  return d;
}

}  // namespace metasp
