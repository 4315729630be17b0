#pragma once

#include <map>
#include <optional>
#include <vector>

#include "metasp/rootdata.hpp"

namespace metasp {

// Finite sum of c_mu tau_mu.  Coefficients are reduced mod p into the
// symmetric range (-p/2, p/2]; p = 0 keeps integer coefficients.
class TorusHeckeElement {
 public:
  explicit TorusHeckeElement(long long p = 0) : p_(p) {}
  static TorusHeckeElement tau(const Cocharacter& mu, long long p = 0);

  long long modulus() const { return p_; }
  long long coefficient(const Cocharacter& mu) const;
  const std::map<Cocharacter, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Cocharacter& mu, long long c);
  TorusHeckeElement reduce(long long p) const;

  TorusHeckeElement operator+(const TorusHeckeElement& o) const;
  TorusHeckeElement operator-(const TorusHeckeElement& o) const;
  TorusHeckeElement operator*(long long k) const;
  bool operator==(const TorusHeckeElement& o) const;

 private:
  long long normalize(long long c) const;
  long long p_;
  std::map<Cocharacter, long long> terms_;
};

TorusHeckeElement tau_convolve(const TorusHeckeElement& a, const TorusHeckeElement& b);

// lambda = -(e_1 + ... + e_i), the cocharacter attached to alpha_i.
Cocharacter lambda_alpha(int i, int n);

TorusHeckeElement metaplectic_satake_T2lambda(int i, int n, long long p = 0);

// h is the transform of T_lambda; drops every tau_mu with mu + lambda of odd
// coordinate sum.
TorusHeckeElement parity_filter(const TorusHeckeElement& h, const Cocharacter& lambda);

struct ASet {
  Cocharacter base;
  std::vector<IntVec> elements;  // sorted
  bool contains(const IntVec& a) const;
};

ASet enumerate_A(const Cocharacter& lambda);

struct FiberResult {
  std::vector<IntVec> fiber;
  bool lemma_applies = false;  // i < n
  bool conforms = false;       // meaningful only when lemma_applies
};

FiberResult A_fiber(const ASet& A, const IntVec& a, int i);
// All distinct fibers for direction i.
std::vector<std::vector<IntVec>> A_fibers(const ASet& A, int i);

// coeffs[a] = c_{2 lambda}(2 lambda + a . alpha^vee), lambda = A.base.
bool vanishing_sum_check(const std::map<IntVec, long long>& coeffs, const ASet& A, int i, long long p = 0);
bool vanishing_sum_check(const TorusHeckeElement& h, const ASet& A, int i);

// A value of a Hecke character: zero, or zeta^exp with zeta of order N.
struct CharValue {
  bool zero = false;
  long long exp = 0;

  static CharValue zero_value() { return {true, 0}; }
  static CharValue unit(long long e) { return {false, e}; }
  bool operator==(const CharValue&) const = default;
};

class HeckeCharacter {
 public:
  HeckeCharacter(int n, ParabolicSubset levi, long long N);

  int rank() const { return n_; }
  const ParabolicSubset& levi() const { return levi_; }
  long long order() const { return N_; }
  const std::map<Cocharacter, CharValue>& values() const { return values_; }

  void set(const Cocharacter& mu, CharValue v);
  // Stored value, or one derived from stored values by multiplicativity.
  std::optional<CharValue> lookup(const Cocharacter& mu) const;
  CharValue value(const Cocharacter& mu) const;
  bool check_multiplicative() const;

  // Character of the torus algebra of M_J which is supersingular on M_J:
  // tau_mu -> zeta^{theta . mu} if <alpha, mu> = 0 for all alpha in J, else 0.
  // Values are recorded on the given points that are J-antidominant.
  static HeckeCharacter from_torus_data(const ParabolicSubset& J, const IntVec& theta, long long N,
                                        const std::vector<Cocharacter>& points);
  // The points a change-of-weight decision touches: every lambda_alpha and
  // every simple coroot.
  static std::vector<Cocharacter> standard_points(int n);

 private:
  std::optional<CharValue> lookup_depth(const Cocharacter& mu, int depth) const;
  CharValue multiply(CharValue a, CharValue b) const;

  int n_;
  ParabolicSubset levi_;
  long long N_;
  std::map<Cocharacter, CharValue> values_;
};

ParabolicSubset pi_chi(const HeckeCharacter& chi, int scale = 1);

// Formal combination sum sign * value of roots of unity in the residue field.
struct HeckeConstant {
  std::vector<std::pair<int, CharValue>> terms;
  bool is_zero() const;
};

struct ChangeOfWeightDecision {
  bool applicable = false;
  HeckeConstant constant;
};

ChangeOfWeightDecision change_of_weight_decision(int i, const HeckeCharacter& chi);

}  // namespace metasp
