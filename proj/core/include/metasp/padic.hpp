#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "metasp/rootdata.hpp"

namespace metasp {

struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element of Q_p known as p^val * unit with unit determined mod p^rel, or
// a zero known to absolute precision, or an exact zero.
class PadicApprox {
 public:
  static PadicApprox exact_zero(int p);
  static PadicApprox inexact_zero(int p, int abs_precision);
  // num * p^exp, recorded with relative precision m.
  static PadicApprox from_scaled(int p, __int128 num, int exp, int m);
  static PadicApprox from_int(int p, long long a, int m) { return from_scaled(p, a, 0, m); }

  int prime() const { return p_; }
  bool is_exact_zero() const { return kind_ == Kind::ExactZero; }
  bool is_zero() const { return kind_ != Kind::Nonzero; }
  // Valuation of a nonzero element; for an inexact zero, the known lower bound.
  int valuation() const;
  int relative_precision() const { return rel_; }
  // Absolute precision (val + rel); large for exact zero.
  int absolute_precision() const;
  std::uint64_t unit() const { return unit_; }

  PadicApprox operator+(const PadicApprox& o) const;
  PadicApprox operator-(const PadicApprox& o) const;
  PadicApprox operator-() const;
  PadicApprox operator*(const PadicApprox& o) const;
  PadicApprox operator/(const PadicApprox& o) const;

  std::string to_string() const;

 private:
  enum class Kind { ExactZero, InexactZero, Nonzero };
  static PadicApprox nonzero(int p, int val, int rel, std::uint64_t unit);

  int p_ = 3;
  Kind kind_ = Kind::ExactZero;
  int val_ = 0;
  int rel_ = 0;
  std::uint64_t unit_ = 0;
};

std::uint64_t padic_pow(int p, int k);

enum class GroupTag { SL2, GL, Sp4 };

std::string to_string(GroupTag tag);
GroupTag parse_group_tag(const std::string& s);

class PadicMatrix {
 public:
  PadicMatrix(GroupTag tag, int size, int p);

  static PadicMatrix identity(GroupTag tag, int size, int p, int m);
  // lambda(pi) for a cocharacter in e coordinates (SL2 and Sp4) or the
  // diagonal exponents (GL).
  static PadicMatrix torus(GroupTag tag, const Cocharacter& lambda, int p, int m);
  // The fixed symplectic form: antidiagonal (1, 1, -1, -1) from the top row.
  static PadicMatrix symplectic_form(int p, int m);

  GroupTag tag() const { return tag_; }
  int size() const { return n_; }
  int prime() const { return p_; }
  PadicApprox& at(int r, int c) { return a_[r * n_ + c]; }
  const PadicApprox& at(int r, int c) const { return a_[r * n_ + c]; }

  PadicMatrix operator*(const PadicMatrix& o) const;
  PadicMatrix transpose() const;
  bool is_member() const;

 private:
  GroupTag tag_;
  int n_;
  int p_;
  std::vector<PadicApprox> a_;
};

// Valuations of the elementary divisors, ascending.
std::vector<int> elementary_divisor_valuations(const PadicMatrix& g);
Cocharacter cartan_invariant(const PadicMatrix& g, bool check_membership = true);
int torus_dimension(GroupTag tag);
// Exponents of the diagonal entries of lambda(pi).
IntVec torus_exponents(GroupTag tag, const Cocharacter& lambda);
int matrix_size(GroupTag tag, int gl_rank = 2);

}  // namespace metasp
