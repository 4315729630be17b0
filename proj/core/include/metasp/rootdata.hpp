#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace metasp {

using IntVec = std::vector<int>;
using Rational = boost::rational<long long>;

// Element of X^*(T) in the eps basis (eps_i = chi_i).
struct Character {
  IntVec coords;

  Character() = default;
  explicit Character(IntVec c) : coords(std::move(c)) {}
  int rank() const { return static_cast<int>(coords.size()); }

  Character operator+(const Character& o) const;
  Character operator-(const Character& o) const;
  Character operator-() const;
  Character operator*(int k) const;
  auto operator<=>(const Character&) const = default;
};

// Element of X_*(T) in the e basis (e_i = lambda_i).  The optional extra
// coordinate carries the similitude cocharacter lambda_{n+1} of GSp.
struct Cocharacter {
  IntVec coords;
  std::optional<int> similitude;

  Cocharacter() = default;
  explicit Cocharacter(IntVec c, std::optional<int> sim = std::nullopt)
      : coords(std::move(c)), similitude(sim) {}
  int rank() const { return static_cast<int>(coords.size()); }
  int coord_sum() const;

  Cocharacter operator+(const Cocharacter& o) const;
  Cocharacter operator-(const Cocharacter& o) const;
  Cocharacter operator-() const;
  Cocharacter operator*(int k) const;
  auto operator<=>(const Cocharacter&) const = default;
};

std::string to_string(const IntVec& v);
std::string to_string(const Character& c);
std::string to_string(const Cocharacter& c);

// Subset of the simple roots, indexed 1..n.
class ParabolicSubset {
 public:
  static constexpr int kMaxRank = 30;

  ParabolicSubset() = default;
  explicit ParabolicSubset(int n, std::uint32_t mask = 0);
  static ParabolicSubset full(int n);
  static ParabolicSubset empty(int n) { return ParabolicSubset(n); }
  static ParabolicSubset of(int n, const std::vector<int>& indices);
  static ParabolicSubset siegel(int n);

  int rank() const { return n_; }
  std::uint32_t mask() const { return mask_; }
  bool contains(int i) const;
  void insert(int i);
  void erase(int i);
  int size() const;
  bool is_empty() const { return mask_ == 0; }
  bool is_full() const { return mask_ == full(n_).mask_; }
  std::vector<int> indices() const;
  bool is_subset_of(const ParabolicSubset& o) const;

  ParabolicSubset operator|(const ParabolicSubset& o) const;
  ParabolicSubset operator&(const ParabolicSubset& o) const;
  ParabolicSubset minus(const ParabolicSubset& o) const;
  auto operator<=>(const ParabolicSubset&) const = default;

 private:
  void check_index(int i) const;
  int n_ = 0;
  std::uint32_t mask_ = 0;
};

std::string to_string(const ParabolicSubset& J);

class RootDatumCn {
 public:
  explicit RootDatumCn(int n);

  int rank() const { return n_; }
  // C[j][k] = <alpha_j, alpha_k^vee>, 0-indexed storage.
  const std::vector<IntVec>& cartan() const { return cartan_; }
  std::vector<std::vector<Rational>> cartan_inverse() const;
  const std::vector<Character>& positive_roots() const { return positive_; }
  std::vector<Character> roots() const;
  bool is_root(const Character& c) const;

 private:
  int n_;
  std::vector<IntVec> cartan_;
  std::vector<Character> positive_;
};

Character simple_root(int i, int n);
Cocharacter coroot(int i, int n);
Character fundamental_weight(int i, int n);
// Coroot attached to an arbitrary root of C_n.
Cocharacter coroot_of(const Character& root);

int pairing(const Character& chi, const Cocharacter& lambda);

// The paper-style bases, computed from their defining recursions
// 2 chi_n = alpha_n, chi_i = alpha_i + chi_{i+1};
// lambda_n = alpha_n^vee, lambda_i = alpha_i^vee + lambda_{i+1}.
std::vector<Character> chi_basis(int n);
std::vector<Cocharacter> lambda_basis(int n);

// Coordinates of lambda in the coroot basis; unique because X_*(T) is
// spanned freely by the simple coroots.
IntVec coroot_coordinates(const Cocharacter& lambda);
Cocharacter from_coroot_coordinates(const IntVec& a);
// Coordinates of a character in the simple-root basis (rational).
std::vector<Rational> root_coordinates(const Character& chi);

bool leq(const Cocharacter& lambda, const Cocharacter& mu, const ParabolicSubset& J);
bool is_antidominant(const Cocharacter& lambda, const ParabolicSubset& J);
bool is_antidominant(const Cocharacter& lambda);

// Coefficient vectors a (indexed 1..n, zero outside J) with
// lambda + sum a_j alpha_j^vee antidominant for J.
std::vector<IntVec> antidominant_above_coefficients(const Cocharacter& lambda,
                                                    const ParabolicSubset& J);
std::vector<Cocharacter> antidominant_above(const Cocharacter& lambda,
                                            const ParabolicSubset& J);

ParabolicSubset parabolic_from_cochar(const Cocharacter& lambda);
Cocharacter antidominant_rep(const Cocharacter& lambda);
// Signed permutation action: perm[k] is the image slot of coordinate k.
Cocharacter weyl_act(const IntVec& perm, const IntVec& signs, const Cocharacter& lambda);

struct RootStringData {
  bool exists = false;
  int length = 0;
  IntVec magnitudes;
};

RootStringData root_string_data(const Character& beta, const Character& gamma);

}  // namespace metasp
