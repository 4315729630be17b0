#include "metasp/padic.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace metasp {

namespace {

constexpr int kExactZeroPrecision = INT_MAX / 4;

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t reduce_signed(__int128 a, std::uint64_t m) {
  __int128 r = a % static_cast<__int128>(m);
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  __int128 t = 0, nt = 1, r = m, nr = a % m;
  while (nr != 0) {
    __int128 q = r / nr;
    __int128 tmp = t - q * nt;
    t = nt, nt = tmp;
    tmp = r - q * nr;
    r = nr, nr = tmp;
  }
  if (r != 1) throw std::invalid_argument("element is not a unit");
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

}  // namespace

std::uint64_t padic_pow(int p, int k) {
  if (k < 0) throw std::invalid_argument("negative exponent");
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) {
    if (r > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(p))
      throw PrecisionError("working precision exceeds 64-bit residues");
    r *= p;
  }
  return r;
}

PadicApprox PadicApprox::exact_zero(int p) {
  PadicApprox z;
  z.p_ = p;
  z.kind_ = Kind::ExactZero;
  return z;
}

PadicApprox PadicApprox::inexact_zero(int p, int abs_precision) {
  PadicApprox z;
  z.p_ = p;
  z.kind_ = Kind::InexactZero;
  z.val_ = abs_precision;
  return z;
}

PadicApprox PadicApprox::nonzero(int p, int val, int rel, std::uint64_t unit) {
  PadicApprox x;
  x.p_ = p;
  x.kind_ = Kind::Nonzero;
  x.val_ = val;
  x.rel_ = rel;
  x.unit_ = unit;
  return x;
}

PadicApprox PadicApprox::from_scaled(int p, __int128 num, int exp, int m) {
  if (m < 1) throw std::invalid_argument("precision must be positive");
  if (num == 0) return exact_zero(p);
  while (num % p == 0) {
    num /= p;
    ++exp;
  }
  return nonzero(p, exp, m, reduce_signed(num, padic_pow(p, m)));
}

int PadicApprox::valuation() const {
  if (kind_ == Kind::ExactZero) return kExactZeroPrecision;
  return val_;
}

int PadicApprox::absolute_precision() const {
  switch (kind_) {
    case Kind::ExactZero:
      return kExactZeroPrecision;
    case Kind::InexactZero:
      return val_;
    default:
      return val_ + rel_;
  }
}

PadicApprox PadicApprox::operator+(const PadicApprox& o) const {
  if (p_ != o.p_) throw std::invalid_argument("mixing different primes");
  if (kind_ == Kind::ExactZero) return o;
  if (o.kind_ == Kind::ExactZero) return *this;
  if (kind_ == Kind::InexactZero || o.kind_ == Kind::InexactZero) {
    const PadicApprox& z = kind_ == Kind::InexactZero ? *this : o;
    const PadicApprox& w = kind_ == Kind::InexactZero ? o : *this;
    if (w.kind_ == Kind::InexactZero) return inexact_zero(p_, std::min(z.val_, w.val_));
    if (w.val_ >= z.val_) return inexact_zero(p_, z.val_);
    PadicApprox r = w;
    const int rel = std::min(w.rel_, z.val_ - w.val_);
    r.rel_ = rel;
    r.unit_ = w.unit_ % padic_pow(p_, rel);
    return r;
  }
  const PadicApprox& a = val_ <= o.val_ ? *this : o;
  const PadicApprox& b = val_ <= o.val_ ? o : *this;
  const int abs_prec = std::min(a.val_ + a.rel_, b.val_ + b.rel_);
  const int k = abs_prec - a.val_;
  const std::uint64_t M = padic_pow(p_, k);
  std::uint64_t s = a.unit_ % M;
  const int gap = b.val_ - a.val_;
  if (gap < k) s = (s + mulmod(b.unit_ % M, padic_pow(p_, gap), M)) % M;
  if (s == 0) return inexact_zero(p_, abs_prec);
  int t = 0;
  while (s % p_ == 0) {
    s /= p_;
    ++t;
  }
  const int rel = k - t;
  return nonzero(p_, a.val_ + t, rel, s % padic_pow(p_, rel));
}

PadicApprox PadicApprox::operator-() const {
  if (kind_ != Kind::Nonzero) return *this;
  const std::uint64_t M = padic_pow(p_, rel_);
  return nonzero(p_, val_, rel_, (M - unit_ % M) % M);
}

PadicApprox PadicApprox::operator-(const PadicApprox& o) const { return *this + (-o); }

PadicApprox PadicApprox::operator*(const PadicApprox& o) const {
  if (p_ != o.p_) throw std::invalid_argument("mixing different primes");
  if (kind_ == Kind::ExactZero || o.kind_ == Kind::ExactZero) return exact_zero(p_);
  if (kind_ == Kind::InexactZero || o.kind_ == Kind::InexactZero) return inexact_zero(p_, valuation() + o.valuation());
  const int rel = std::min(rel_, o.rel_);
  const std::uint64_t M = padic_pow(p_, rel);
  return nonzero(p_, val_ + o.val_, rel, mulmod(unit_ % M, o.unit_ % M, M));
}

PadicApprox PadicApprox::operator/(const PadicApprox& o) const {
  if (p_ != o.p_) throw std::invalid_argument("mixing different primes");
  if (o.kind_ == Kind::ExactZero) throw std::domain_error("division by zero");
  if (o.kind_ == Kind::InexactZero) throw PrecisionError("division by an element indistinguishable from zero");
  if (kind_ == Kind::ExactZero) return exact_zero(p_);
  if (kind_ == Kind::InexactZero) return inexact_zero(p_, val_ - o.val_);
  const int rel = std::min(rel_, o.rel_);
  const std::uint64_t M = padic_pow(p_, rel);
  return nonzero(p_, val_ - o.val_, rel, mulmod(unit_ % M, inverse_mod(o.unit_ % M, M), M));
}

std::string PadicApprox::to_string() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::ExactZero:
      os << "0";
      break;
    case Kind::InexactZero:
      os << "O(" << p_ << "^" << val_ << ")";
      break;
    default:
      os << unit_ << "*" << p_ << "^" << val_ << " + O(" << p_ << "^" << val_ + rel_ << ")";
  }
  return os.str();
}

std::string to_string(GroupTag tag) {
  switch (tag) {
    case GroupTag::SL2:
      return "sl2";
    case GroupTag::GL:
      return "gl2";
    default:
      return "sp4";
  }
}

GroupTag parse_group_tag(const std::string& s) {
  if (s == "sl2") return GroupTag::SL2;
  if (s == "gl2" || s == "gl") return GroupTag::GL;
  if (s == "sp4") return GroupTag::Sp4;
  throw std::invalid_argument("unknown group '" + s + "' (expected sl2|gl2|sp4)");
}

int torus_dimension(GroupTag tag) {
  switch (tag) {
    case GroupTag::SL2:
      return 1;
    default:
      return 2;
  }
}

int matrix_size(GroupTag tag, int gl_rank) {
  switch (tag) {
    case GroupTag::SL2:
      return 2;
    case GroupTag::GL:
      return gl_rank;
    default:
      return 4;
  }
}

IntVec torus_exponents(GroupTag tag, const Cocharacter& lambda) {
  const IntVec& c = lambda.coords;
  switch (tag) {
    case GroupTag::SL2:
      if (c.size() != 1) throw std::invalid_argument("SL2 cocharacters have one coordinate");
      return {c[0], -c[0]};
    case GroupTag::GL:
      return c;
    default:
      if (c.size() != 2) throw std::invalid_argument("Sp4 cocharacters have two coordinates");
      return {c[0], c[1], -c[1], -c[0]};
  }
}

PadicMatrix::PadicMatrix(GroupTag tag, int size, int p)
    : tag_(tag), n_(size), p_(p), a_(static_cast<std::size_t>(size) * size, PadicApprox::exact_zero(p)) {}

PadicMatrix PadicMatrix::identity(GroupTag tag, int size, int p, int m) {
  PadicMatrix g(tag, size, p);
  for (int i = 0; i < size; ++i) g.at(i, i) = PadicApprox::from_int(p, 1, m);
  return g;
}

PadicMatrix PadicMatrix::torus(GroupTag tag, const Cocharacter& lambda, int p, int m) {
  const IntVec e = torus_exponents(tag, lambda);
  PadicMatrix g(tag, static_cast<int>(e.size()), p);
  for (std::size_t i = 0; i < e.size(); ++i) g.at(i, i) = PadicApprox::from_scaled(p, 1, e[i], m);
  return g;
}

PadicMatrix PadicMatrix::symplectic_form(int p, int m) {
  PadicMatrix J(GroupTag::Sp4, 4, p);
  J.at(0, 3) = PadicApprox::from_int(p, 1, m);
  J.at(1, 2) = PadicApprox::from_int(p, 1, m);
  J.at(2, 1) = PadicApprox::from_int(p, -1, m);
  J.at(3, 0) = PadicApprox::from_int(p, -1, m);
  return J;
}

PadicMatrix PadicMatrix::operator*(const PadicMatrix& o) const {
  if (n_ != o.n_ || p_ != o.p_) throw std::invalid_argument("matrix shape mismatch");
  PadicMatrix r(tag_, n_, p_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      PadicApprox s = PadicApprox::exact_zero(p_);
      for (int k = 0; k < n_; ++k) s = s + at(i, k) * o.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

PadicMatrix PadicMatrix::transpose() const {
  PadicMatrix r(tag_, n_, p_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(i, j) = at(j, i);
  return r;
}

bool PadicMatrix::is_member() const {
  switch (tag_) {
    case GroupTag::SL2: {
      if (n_ != 2) return false;
      const PadicApprox det = at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
      const PadicApprox diff = det - PadicApprox::from_int(p_, 1, std::max(1, det.relative_precision()));
      return diff.is_zero();
    }
    case GroupTag::Sp4: {
      if (n_ != 4) return false;
      const PadicMatrix J = symplectic_form(p_, 8);
      const PadicMatrix lhs = transpose() * J * (*this);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          if (!(lhs.at(i, j) - J.at(i, j)).is_zero()) return false;
      return true;
    }
    default:
      return true;
  }
}

std::vector<int> elementary_divisor_valuations(const PadicMatrix& g) {
  const int n = g.size();
  const int p = g.prime();
  std::vector<PadicApprox> a;
  a.reserve(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.push_back(g.at(i, j));
  auto A = [&](int r, int c) -> PadicApprox& { return a[r * n + c]; };

  std::vector<int> vals;
  for (int t = 0; t < n; ++t) {
    int best_r = -1, best_c = -1, best_v = INT_MAX, zero_bound = INT_MAX;
    for (int r = t; r < n; ++r)
      for (int c = t; c < n; ++c) {
        const PadicApprox& x = A(r, c);
        if (x.is_exact_zero()) continue;
        if (x.is_zero()) {
          zero_bound = std::min(zero_bound, x.valuation());
        } else if (x.valuation() < best_v) {
          best_v = x.valuation();
          best_r = r;
          best_c = c;
        }
      }
    if (best_r < 0) {
      if (zero_bound == INT_MAX) throw std::invalid_argument("matrix is singular");
      throw PrecisionError("pivot undecidable at working precision");
    }
    if (zero_bound <= best_v) throw PrecisionError("pivot valuation undecidable at working precision");
    if (best_r != t)
      for (int c = 0; c < n; ++c) std::swap(A(best_r, c), A(t, c));
    if (best_c != t)
      for (int r = 0; r < n; ++r) std::swap(A(r, best_c), A(r, t));
    const PadicApprox pivot = A(t, t);
    for (int r = t + 1; r < n; ++r) {
      if (A(r, t).is_exact_zero()) continue;
      const PadicApprox f = A(r, t) / pivot;
      for (int c = t + 1; c < n; ++c) A(r, c) = A(r, c) - f * A(t, c);
      A(r, t) = PadicApprox::exact_zero(p);
    }
    for (int c = t + 1; c < n; ++c) A(t, c) = PadicApprox::exact_zero(p);
    vals.push_back(best_v);
  }
  std::sort(vals.begin(), vals.end());
  return vals;
}

Cocharacter cartan_invariant(const PadicMatrix& g, bool check_membership) {
  if (check_membership && !g.is_member()) throw std::invalid_argument("matrix fails group membership");
  const std::vector<int> d = elementary_divisor_valuations(g);
  switch (g.tag()) {
    case GroupTag::SL2:
    case GroupTag::Sp4: {
      const int n = g.size() / 2;
      for (int k = 0; k < g.size(); ++k)
        if (d[k] != -d[g.size() - 1 - k]) throw std::invalid_argument("elementary divisors are not symplectic");
      return antidominant_rep(Cocharacter(IntVec(d.begin(), d.begin() + n)));
    }
    default:
      return Cocharacter(IntVec(d.begin(), d.end()));
  }
}

}  // namespace metasp
