#include "metasp/rootdata.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

namespace metasp {

namespace {

void require_same_rank(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("rank mismatch");
}

void require_index(int i, int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  if (i < 1 || i > n) throw std::out_of_range("simple root index out of range");
}

IntVec add(const IntVec& a, const IntVec& b, int sign) {
  require_same_rank(a.size(), b.size());
  IntVec r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + sign * b[k];
  return r;
}

long long ceil_rational(const Rational& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
  return q;
}

}  // namespace

Character Character::operator+(const Character& o) const { return Character(add(coords, o.coords, 1)); }
Character Character::operator-(const Character& o) const { return Character(add(coords, o.coords, -1)); }
Character Character::operator-() const { return *this * -1; }
Character Character::operator*(int k) const {
  IntVec r = coords;
  for (int& x : r) x *= k;
  return Character(r);
}

int Cocharacter::coord_sum() const { return std::accumulate(coords.begin(), coords.end(), 0); }

Cocharacter Cocharacter::operator+(const Cocharacter& o) const {
  std::optional<int> sim;
  if (similitude || o.similitude) sim = similitude.value_or(0) + o.similitude.value_or(0);
  return Cocharacter(add(coords, o.coords, 1), sim);
}
Cocharacter Cocharacter::operator-(const Cocharacter& o) const { return *this + (-o); }
Cocharacter Cocharacter::operator-() const { return *this * -1; }
Cocharacter Cocharacter::operator*(int k) const {
  IntVec r = coords;
  for (int& x : r) x *= k;
  std::optional<int> sim;
  if (similitude) sim = *similitude * k;
  return Cocharacter(r, sim);
}

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ')';
  return os.str();
}
std::string to_string(const Character& c) { return to_string(c.coords); }
std::string to_string(const Cocharacter& c) {
  std::string s = to_string(c.coords);
  if (c.similitude) s += "+" + std::to_string(*c.similitude) + "*lambda_{n+1}";
  return s;
}

ParabolicSubset::ParabolicSubset(int n, std::uint32_t mask) : n_(n), mask_(mask) {
  if (n < 0 || n > kMaxRank) throw std::invalid_argument("rank out of supported range");
  if (mask_ & ~full(n).mask_) throw std::invalid_argument("subset has indices above rank");
}

ParabolicSubset ParabolicSubset::full(int n) {
  ParabolicSubset J;
  J.n_ = n;
  J.mask_ = n == 0 ? 0u : (n >= 32 ? ~0u : ((1u << n) - 1u));
  return J;
}

ParabolicSubset ParabolicSubset::of(int n, const std::vector<int>& indices) {
  ParabolicSubset J(n);
  for (int i : indices) J.insert(i);
  return J;
}

ParabolicSubset ParabolicSubset::siegel(int n) {
  ParabolicSubset J = full(n);
  if (n > 0) J.erase(n);
  return J;
}

void ParabolicSubset::check_index(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("simple root index out of range");
}
bool ParabolicSubset::contains(int i) const {
  if (i < 1 || i > n_) return false;
  return mask_ & (1u << (i - 1));
}
void ParabolicSubset::insert(int i) {
  check_index(i);
  mask_ |= 1u << (i - 1);
}
void ParabolicSubset::erase(int i) {
  check_index(i);
  mask_ &= ~(1u << (i - 1));
}
int ParabolicSubset::size() const { return std::popcount(mask_); }
std::vector<int> ParabolicSubset::indices() const {
  std::vector<int> r;
  for (int i = 1; i <= n_; ++i)
    if (contains(i)) r.push_back(i);
  return r;
}
bool ParabolicSubset::is_subset_of(const ParabolicSubset& o) const {
  require_same_rank(n_, o.n_);
  return (mask_ & ~o.mask_) == 0;
}
ParabolicSubset ParabolicSubset::operator|(const ParabolicSubset& o) const {
  require_same_rank(n_, o.n_);
  return ParabolicSubset(n_, mask_ | o.mask_);
}
ParabolicSubset ParabolicSubset::operator&(const ParabolicSubset& o) const {
  require_same_rank(n_, o.n_);
  return ParabolicSubset(n_, mask_ & o.mask_);
}
ParabolicSubset ParabolicSubset::minus(const ParabolicSubset& o) const {
  require_same_rank(n_, o.n_);
  return ParabolicSubset(n_, mask_ & ~o.mask_);
}

std::string to_string(const ParabolicSubset& J) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i : J.indices()) {
    os << (first ? "" : ",") << i;
    first = false;
  }
  os << '}';
  return os.str();
}

RootDatumCn::RootDatumCn(int n) : n_(n) {
  if (n < 1 || n > ParabolicSubset::kMaxRank) throw std::invalid_argument("rank out of supported range");
  cartan_.assign(n, IntVec(n, 0));
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) cartan_[j - 1][k - 1] = pairing(simple_root(j, n), coroot(k, n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      IntVec a(n, 0), b(n, 0);
      a[i] = 1, a[j] = -1;
      b[i] = 1, b[j] = 1;
      positive_.emplace_back(a);
      positive_.emplace_back(b);
    }
  for (int i = 0; i < n; ++i) {
    IntVec c(n, 0);
    c[i] = 2;
    positive_.emplace_back(c);
  }
  std::sort(positive_.begin(), positive_.end());
}

std::vector<std::vector<Rational>> RootDatumCn::cartan_inverse() const {
  const int n = n_;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = cartan_[i][j];
    a[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a[piv][col].numerator() == 0) ++piv;
    if (piv == n) throw std::logic_error("Cartan matrix is singular");
    std::swap(a[piv], a[col]);
    Rational inv = Rational(1) / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].numerator() == 0) continue;
      Rational f = a[r][col];
      for (int c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

std::vector<Character> RootDatumCn::roots() const {
  std::vector<Character> all = positive_;
  for (const auto& r : positive_) all.push_back(-r);
  std::sort(all.begin(), all.end());
  return all;
}

bool RootDatumCn::is_root(const Character& c) const {
  if (c.rank() != n_) return false;
  int nonzero = 0, abs_sum = 0;
  for (int x : c.coords) {
    if (x != 0) ++nonzero;
    abs_sum += std::abs(x);
  }
  if (nonzero == 2) return abs_sum == 2;
  if (nonzero == 1) return abs_sum == 2;
  return false;
}

Character simple_root(int i, int n) {
  require_index(i, n);
  IntVec c(n, 0);
  if (i < n) {
    c[i - 1] = 1;
    c[i] = -1;
  } else {
    c[n - 1] = 2;
  }
  return Character(c);
}

Cocharacter coroot(int i, int n) {
  require_index(i, n);
  IntVec c(n, 0);
  c[i - 1] = 1;
  if (i < n) c[i] = -1;
  return Cocharacter(c);
}

Character fundamental_weight(int i, int n) {
  require_index(i, n);
  IntVec c(n, 0);
  for (int k = 0; k < i; ++k) c[k] = 1;
  return Character(c);
}

Cocharacter coroot_of(const Character& root) {
  RootDatumCn R(root.rank());
  if (!R.is_root(root)) throw std::invalid_argument("not a root: " + to_string(root));
  int norm = 0;
  for (int x : root.coords) norm += x * x;
  IntVec c = root.coords;
  if (norm == 4)
    for (int& x : c) x /= 2;
  return Cocharacter(c);
}

int pairing(const Character& chi, const Cocharacter& lambda) {
  require_same_rank(chi.coords.size(), lambda.coords.size());
  int s = 0;
  for (std::size_t k = 0; k < chi.coords.size(); ++k) s += chi.coords[k] * lambda.coords[k];
  return s;
}

std::vector<Character> chi_basis(int n) {
  // Work with doubled coordinates so that chi_n = alpha_n / 2 stays integral.
  std::vector<IntVec> twice(n + 1, IntVec(n, 0));
  twice[n] = simple_root(n, n).coords;
  for (int i = n - 1; i >= 1; --i) {
    IntVec a = simple_root(i, n).coords;
    for (int k = 0; k < n; ++k) twice[i][k] = 2 * a[k] + twice[i + 1][k];
  }
  std::vector<Character> out;
  for (int i = 1; i <= n; ++i) {
    IntVec c(n);
    for (int k = 0; k < n; ++k) {
      if (twice[i][k] % 2) throw std::logic_error("chi basis not integral");
      c[k] = twice[i][k] / 2;
    }
    out.emplace_back(c);
  }
  return out;
}

std::vector<Cocharacter> lambda_basis(int n) {
  std::vector<Cocharacter> rev;
  Cocharacter cur = coroot(n, n);
  rev.push_back(cur);
  for (int i = n - 1; i >= 1; --i) {
    cur = coroot(i, n) + cur;
    rev.push_back(cur);
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

IntVec coroot_coordinates(const Cocharacter& lambda) {
  IntVec a(lambda.coords.size());
  int run = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    run += lambda.coords[k];
    a[k] = run;
  }
  return a;
}

Cocharacter from_coroot_coordinates(const IntVec& a) {
  const int n = static_cast<int>(a.size());
  Cocharacter r(IntVec(n, 0));
  for (int i = 1; i <= n; ++i) r = r + coroot(i, n) * a[i - 1];
  return r;
}

std::vector<Rational> root_coordinates(const Character& chi) {
  // alpha_i = eps_i - eps_{i+1}, alpha_n = 2 eps_n, so
  // chi = sum b_i alpha_i with b_i = chi_1 + ... + chi_i for i < n and
  // b_n = (chi_1 + ... + chi_n) / 2.
  const int n = chi.rank();
  std::vector<Rational> b(n);
  long long run = 0;
  for (int i = 0; i < n; ++i) {
    run += chi.coords[i];
    b[i] = Rational(run);
  }
  if (n > 0) b[n - 1] = Rational(run, 2);
  return b;
}

bool leq(const Cocharacter& lambda, const Cocharacter& mu, const ParabolicSubset& J) {
  require_same_rank(lambda.coords.size(), mu.coords.size());
  if (lambda.similitude.value_or(0) != mu.similitude.value_or(0)) return false;
  IntVec d(lambda.coords.size());
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = mu.coords[k] - lambda.coords[k];
  IntVec a = coroot_coordinates(Cocharacter(d));
  for (int i = 1; i <= static_cast<int>(a.size()); ++i) {
    if (J.contains(i)) {
      if (a[i - 1] < 0) return false;
    } else if (a[i - 1] != 0) {
      return false;
    }
  }
  return true;
}

bool is_antidominant(const Cocharacter& lambda, const ParabolicSubset& J) {
  const int n = lambda.rank();
  require_same_rank(n, J.rank());
  for (int j : J.indices())
    if (pairing(simple_root(j, n), lambda) > 0) return false;
  return true;
}

bool is_antidominant(const Cocharacter& lambda) {
  return is_antidominant(lambda, ParabolicSubset::full(lambda.rank()));
}

std::vector<IntVec> antidominant_above_coefficients(const Cocharacter& lambda,
                                                    const ParabolicSubset& J) {
  const int n = lambda.rank();
  if (!is_antidominant(lambda, J)) throw std::invalid_argument("base cocharacter is not antidominant for J");
  const std::vector<int> idx = J.indices();
  const int m = static_cast<int>(idx.size());
  if (m == 0) return {IntVec(n, 0)};

  RootDatumCn R(n);
  const auto& C = R.cartan();
  // The Cartan matrix of J is a block sum of type A and C Cartan matrices,
  // so it is invertible with nonnegative inverse.
  std::vector<std::vector<Rational>> cj(m, std::vector<Rational>(2 * m, Rational(0)));
  std::vector<long long> b(m);
  for (int r = 0; r < m; ++r) {
    for (int s = 0; s < m; ++s) cj[r][s] = C[idx[r] - 1][idx[s] - 1];
    cj[r][m + r] = 1;
    b[r] = -pairing(simple_root(idx[r], n), lambda);
  }
  for (int col = 0; col < m; ++col) {
    int piv = col;
    while (cj[piv][col].numerator() == 0) ++piv;
    std::swap(cj[piv], cj[col]);
    Rational inv = Rational(1) / cj[col][col];
    for (auto& x : cj[col]) x *= inv;
    for (int r = 0; r < m; ++r) {
      if (r == col || cj[r][col].numerator() == 0) continue;
      Rational f = cj[r][col];
      for (int c = 0; c < 2 * m; ++c) cj[r][c] -= f * cj[col][c];
    }
  }
  std::vector<long long> bound(m);
  for (int r = 0; r < m; ++r) {
    Rational s(0);
    for (int t = 0; t < m; ++t) s += cj[r][m + t] * b[t];
    bound[r] = std::max<long long>(0, ceil_rational(s));
  }

  std::vector<IntVec> out;
  IntVec a(m, 0);
  while (true) {
    bool ok = true;
    for (int r = 0; r < m && ok; ++r) {
      long long s = 0;
      for (int t = 0; t < m; ++t) s += static_cast<long long>(C[idx[r] - 1][idx[t] - 1]) * a[t];
      ok = s <= b[r];
    }
    if (ok) {
      IntVec full(n, 0);
      for (int r = 0; r < m; ++r) full[idx[r] - 1] = a[r];
      out.push_back(full);
    }
    int k = 0;
    while (k < m && a[k] == bound[k]) a[k++] = 0;
    if (k == m) break;
    ++a[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cocharacter> antidominant_above(const Cocharacter& lambda, const ParabolicSubset& J) {
  std::vector<Cocharacter> out;
  for (const IntVec& a : antidominant_above_coefficients(lambda, J)) {
    Cocharacter mu = lambda + from_coroot_coordinates(a);
    out.push_back(mu);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ParabolicSubset parabolic_from_cochar(const Cocharacter& lambda) {
  const int n = lambda.rank();
  if (!is_antidominant(lambda)) throw std::invalid_argument("cocharacter is not antidominant");
  ParabolicSubset J(n);
  for (int i = 1; i <= n; ++i)
    if (pairing(simple_root(i, n), lambda) == 0) J.insert(i);
  return J;
}

Cocharacter antidominant_rep(const Cocharacter& lambda) {
  IntVec c = lambda.coords;
  for (int& x : c) x = -std::abs(x);
  std::sort(c.begin(), c.end());
  return Cocharacter(c, lambda.similitude);
}

Cocharacter weyl_act(const IntVec& perm, const IntVec& signs, const Cocharacter& lambda) {
  const std::size_t n = lambda.coords.size();
  require_same_rank(perm.size(), n);
  require_same_rank(signs.size(), n);
  IntVec c(n);
  for (std::size_t k = 0; k < n; ++k) c[perm[k]] = signs[k] * lambda.coords[k];
  return Cocharacter(c, lambda.similitude);
}

RootStringData root_string_data(const Character& beta, const Character& gamma) {
  require_same_rank(beta.coords.size(), gamma.coords.size());
  RootDatumCn R(beta.rank());
  if (!R.is_root(beta) || !R.is_root(gamma)) throw std::invalid_argument("root_string_data: inputs must be roots");
  RootStringData out;
  out.exists = R.is_root(beta - gamma);
  if (!out.exists) return out;
  while (R.is_root(beta * (out.length + 1) - gamma)) ++out.length;
  // r = how far the beta-string through -gamma extends downwards.
  int r = 0;
  while (R.is_root(-gamma - beta * (r + 1))) ++r;
  long long binom = 1;
  for (int j = 1; j <= out.length; ++j) {
    binom = binom * (r + j) / j;
    out.magnitudes.push_back(static_cast<int>(binom));
  }
  return out;
}

}  // namespace metasp
