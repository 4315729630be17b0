#include "metasp/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <exception>
#include <mutex>
#include <thread>

namespace metasp {

namespace {

// num * p^exp with num prime to p (or num = 0).
struct PRat {
  __int128 num = 0;
  int exp = 0;
};

PRat normalize(int p, __int128 num, int exp) {
  if (num == 0) return {0, 0};
  while (num % p == 0) {
    num /= p;
    ++exp;
  }
  return {num, exp};
}

__int128 pow128(int p, int k) {
  __int128 r = 1;
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

PRat add(int p, const PRat& a, const PRat& b) {
  if (a.num == 0) return b;
  if (b.num == 0) return a;
  if (a.exp <= b.exp) return normalize(p, a.num + b.num * pow128(p, b.exp - a.exp), a.exp);
  return normalize(p, b.num + a.num * pow128(p, a.exp - b.exp), b.exp);
}

PRat mul(const PRat& a, const PRat& b) {
  if (a.num == 0 || b.num == 0) return {0, 0};
  return {a.num * b.num, a.exp + b.exp};
}

int valuation(const PRat& a) { return a.num == 0 ? INT_MAX : a.exp; }

struct Monomial {
  long long coeff;
  std::vector<int> vars;
};

struct Entry {
  int row, col;
  std::vector<Monomial> terms;
  int last = 0;
};

struct UnipotentModel {
  int size = 0;
  int coords = 0;
  std::vector<Entry> entries;
};

// Representatives are ordered products with the most central root groups on
// the left; for Sp4 the product is
// u_{-2e1}(x4) u_{-(e1+e2)}(x3) u_{-(e1-e2)}(x1) u_{-2e2}(x2),
// whose below-diagonal entries are listed here.
UnipotentModel model_for(GroupTag tag) {
  UnipotentModel m;
  if (tag == GroupTag::Sp4) {
    m.size = 4;
    m.coords = 4;
    m.entries = {
        {1, 0, {{1, {0}}}, 0},
        {3, 2, {{-1, {0}}}, 0},
        {2, 1, {{1, {1}}}, 1},
        {2, 0, {{1, {2}}}, 2},
        {3, 1, {{1, {2}}, {-1, {0, 1}}}, 2},
        {3, 0, {{1, {3}}, {1, {0, 2}}}, 3},
    };
  } else {
    m.size = 2;
    m.coords = 1;
    m.entries = {{1, 0, {{1, {0}}}, 0}};
  }
  return m;
}

PRat evaluate(int p, const Entry& e, const std::vector<PRat>& x) {
  PRat s{0, 0};
  for (const Monomial& mono : e.terms) {
    PRat t{mono.coeff, 0};
    for (int v : mono.vars) t = mul(t, x[v]);
    s = add(p, s, normalize(p, t.num, t.exp));
  }
  return s;
}

// Each entry is +-x_last plus a polynomial in earlier coordinates, so the
// bound on an entry confines x_last to a single coset c + p^B Z_p.
int linear_sign(const Entry& e) {
  for (const Monomial& m : e.terms)
    if (m.vars.size() == 1 && m.vars[0] == e.last) return static_cast<int>(m.coeff);
  throw std::logic_error("entry is not linear in its last coordinate");
}

struct CountJob {
  int p;
  int depth;
  int precision;
  GroupTag tag;
  UnipotentModel model;
  IntVec mu_exps;
  Cocharacter lambda;
  int lmin;
  std::vector<int> bound;                  // per entry
  std::vector<int> sign;                   // per entry
  std::vector<std::vector<int>> by_level;  // entry indices checked at each coordinate

  // Candidates for x_k, as residues c + t p^B modulo Z_p with B >= -depth.
  bool candidates(int k, std::vector<PRat>& x, PRat& c, int& B) const {
    int driver = -1;
    for (int e : by_level[k])
      if (driver < 0 || bound[e] > bound[driver]) driver = e;
    x[k] = {0, 0};
    const PRat r = evaluate(p, model.entries[driver], x);
    c = {-sign[driver] * r.num, r.exp};
    B = bound[driver];
    if (B >= 0) {
      B = 0;
      return true;
    }
    if (B < -depth) {
      if (c.num != 0 && c.exp < -depth) return false;
      B = -depth;
    }
    return true;
  }

  long long run_block(std::size_t lo, std::size_t hi) const {
    std::vector<PRat> x(model.coords);
    std::vector<PRat> entry_val(model.entries.size());
    long long count = 0;
    recurse(0, lo, hi, x, entry_val, count);
    return count;
  }

  std::size_t first_level_size() const {
    std::vector<PRat> x(model.coords);
    PRat c;
    int B;
    if (!candidates(0, x, c, B)) return 0;
    return static_cast<std::size_t>(pow128(p, -B));
  }

  void recurse(int k, std::size_t lo, std::size_t hi, std::vector<PRat>& x, std::vector<PRat>& ev,
               long long& count) const {
    PRat c;
    int B;
    if (!candidates(k, x, c, B)) return;
    const std::size_t n = static_cast<std::size_t>(pow128(p, -B));
    const std::size_t begin = k == 0 ? lo : 0;
    const std::size_t end = k == 0 ? std::min(hi, n) : n;
    for (std::size_t t = begin; t < end; ++t) {
      x[k] = add(p, c, normalize(p, static_cast<__int128>(t), B));
      bool ok = true;
      for (int e : by_level[k]) {
        ev[e] = evaluate(p, model.entries[e], x);
        if (valuation(ev[e]) < bound[e]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (k + 1 < model.coords)
        recurse(k + 1, lo, hi, x, ev, count);
      else if (leaf_matches(ev))
        ++count;
    }
  }

  bool leaf_matches(const std::vector<PRat>& ev) const {
    // The smallest elementary divisor is the minimal entry valuation.
    int vmin = INT_MAX;
    for (int c = 0; c < model.size; ++c) vmin = std::min(vmin, mu_exps[c]);
    for (std::size_t e = 0; e < ev.size(); ++e)
      if (ev[e].num != 0) vmin = std::min(vmin, ev[e].exp + mu_exps[model.entries[e].col]);
    if (vmin != lmin) return false;
    PadicMatrix g(tag, model.size, p);
    for (int c = 0; c < model.size; ++c) g.at(c, c) = PadicApprox::from_scaled(p, 1, mu_exps[c], precision);
    for (std::size_t e = 0; e < ev.size(); ++e) {
      const Entry& en = model.entries[e];
      if (ev[e].num != 0) g.at(en.row, en.col) = PadicApprox::from_scaled(p, ev[e].num, ev[e].exp + mu_exps[en.col], precision);
    }
    return cartan_invariant(g, false) == lambda;
  }
};

long long symmetric_mod(long long c, long long p) {
  long long r = c % p;
  if (r < 0) r += p;
  if (r > p / 2) r -= p;
  return r;
}

bool antidominant_for(GroupTag tag, const Cocharacter& lambda) {
  if (tag == GroupTag::GL) {
    for (std::size_t k = 1; k < lambda.coords.size(); ++k)
      if (lambda.coords[k - 1] > lambda.coords[k]) return false;
    return true;
  }
  return is_antidominant(lambda);
}

}  // namespace

int unipotent_dimension(GroupTag tag) { return model_for(tag).coords; }

std::vector<std::vector<Rational>> unipotent_matrix(GroupTag tag, const std::vector<Rational>& x) {
  using Mat = std::vector<std::vector<Rational>>;
  const int s = tag == GroupTag::Sp4 ? 4 : 2;
  if (static_cast<int>(x.size()) != unipotent_dimension(tag)) throw std::invalid_argument("wrong number of coordinates");
  auto id = [s] {
    Mat m(s, std::vector<Rational>(s, Rational(0)));
    for (int i = 0; i < s; ++i) m[i][i] = 1;
    return m;
  };
  auto mult = [s](const Mat& a, const Mat& b) {
    Mat r(s, std::vector<Rational>(s, Rational(0)));
    for (int i = 0; i < s; ++i)
      for (int k = 0; k < s; ++k)
        if (a[i][k].numerator() != 0)
          for (int j = 0; j < s; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
  };
  if (tag != GroupTag::Sp4) {
    Mat u = id();
    u[1][0] = x[0];
    return u;
  }
  // Negative root groups for the form with antidiagonal (1, 1, -1, -1).
  Mat a = id(), b = id(), c = id(), d = id();
  a[1][0] = x[0];
  a[3][2] = -x[0];  // -(e1 - e2)
  b[2][1] = x[1];   // -2e2
  c[2][0] = x[2];
  c[3][1] = x[2];  // -(e1 + e2)
  d[3][0] = x[3];  // -2e1
  return mult(mult(d, c), mult(a, b));
}

long long count_cosets_at_depth(const Cocharacter& mu, const Cocharacter& lambda, int depth, GroupTag tag, int p,
                                const OracleOptions& opts) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  if (!is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime");
  if (!antidominant_for(tag, lambda)) throw std::invalid_argument("target cocharacter must be antidominant");
  CountJob job;
  job.p = p;
  job.depth = depth;
  job.tag = tag;
  job.model = model_for(tag);
  job.mu_exps = torus_exponents(tag, mu);
  job.lambda = lambda;
  const IntVec lexps = torus_exponents(tag, lambda);
  if (static_cast<int>(job.mu_exps.size()) != job.model.size) throw std::invalid_argument("cocharacter does not fit the group");
  job.lmin = *std::min_element(lexps.begin(), lexps.end());
  int maxabs = 0;
  for (int c : lambda.coords) maxabs = std::max(maxabs, std::abs(c));
  job.precision = opts.precision > 0 ? opts.precision : depth + maxabs + 2;
  if (*std::min_element(job.mu_exps.begin(), job.mu_exps.end()) < job.lmin) return 0;

  job.by_level.assign(job.model.coords, {});
  for (std::size_t e = 0; e < job.model.entries.size(); ++e) {
    const Entry& en = job.model.entries[e];
    job.bound.push_back(job.lmin - job.mu_exps[en.col]);
    job.sign.push_back(linear_sign(en));
    job.by_level[en.last].push_back(static_cast<int>(e));
  }
  const long long range = static_cast<long long>(job.first_level_size());
  if (range == 0) return 0;

  int threads = opts.threads > 0 ? opts.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp<int>(threads, 1, static_cast<int>(std::min<long long>(range, 64)));
  std::vector<long long> partial(threads, 0);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    const std::size_t lo = static_cast<std::size_t>(range * t / threads);
    const std::size_t hi = static_cast<std::size_t>(range * (t + 1) / threads);
    pool.emplace_back([&, t, lo, hi] {
      try {
        partial[t] = job.run_block(lo, hi);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  long long total = 0;
  for (long long c : partial) total += c;
  return total;
}

CosetCountResult count_cosets(const Cocharacter& mu, const Cocharacter& lambda, int depth, GroupTag tag, int p,
                              const OracleOptions& opts) {
  CosetCountResult r;
  r.mu = mu;
  r.lambda = lambda;
  r.depth_used = depth;
  r.raw_count = count_cosets_at_depth(mu, lambda, depth, tag, p, opts);
  r.count_mod_p = symmetric_mod(r.raw_count, p);
  if (opts.check_stability) {
    OracleOptions next = opts;
    if (next.precision > 0) ++next.precision;
    r.stabilized = count_cosets_at_depth(mu, lambda, depth + 1, tag, p, next) == r.raw_count;
  }
  return r;
}

std::vector<CosetCountResult> reductive_satake_table(const Cocharacter& lambda, int depth, GroupTag tag, int p,
                                                     const OracleOptions& opts) {
  if (tag == GroupTag::GL) throw std::invalid_argument("Satake rows are computed for sl2 and sp4");
  if (lambda.rank() != torus_dimension(tag)) throw std::invalid_argument("cocharacter rank does not match the group");
  std::vector<CosetCountResult> rows;
  for (const Cocharacter& mu : antidominant_above(lambda, ParabolicSubset::full(lambda.rank())))
    rows.push_back(count_cosets(mu, lambda, depth, tag, p, opts));
  return rows;
}

TorusHeckeElement reductive_satake_row(const Cocharacter& lambda, int depth, GroupTag tag, int p,
                                       const OracleOptions& opts) {
  TorusHeckeElement h(p);
  for (const auto& row : reductive_satake_table(lambda, depth, tag, p, opts)) h.add_term(row.mu, row.count_mod_p);
  return h;
}

int default_pipeline_depth(int i, int n) {
  const Cocharacter two_lambda = lambda_alpha(i, n) * 2;
  int m = 0;
  for (int c : two_lambda.coords) m = std::max(m, std::abs(c));
  return m + 2;
}

PipelineReport verify_metaplectic_pipeline(int i, int n, int p, int depth, const OracleOptions& opts) {
  if (n < 1 || n > 2) throw std::invalid_argument("the oracle pipeline covers n = 1 and n = 2");
  PipelineReport rep;
  rep.i = i;
  rep.n = n;
  rep.p = p;
  rep.depth = depth > 0 ? depth : default_pipeline_depth(i, n);
  const GroupTag tag = n == 1 ? GroupTag::SL2 : GroupTag::Sp4;
  const Cocharacter two_lambda = lambda_alpha(i, n) * 2;
  OracleOptions o = opts;
  o.check_stability = true;
  rep.table = reductive_satake_table(two_lambda, rep.depth, tag, p, o);
  rep.reductive_row = TorusHeckeElement(p);
  rep.all_stabilized = true;
  for (const auto& row : rep.table) {
    rep.reductive_row.add_term(row.mu, row.count_mod_p);
    rep.all_stabilized = rep.all_stabilized && row.stabilized;
  }
  // The filter is indexed by the Hecke operator T_{2 lambda}.
  rep.filtered = parity_filter(rep.reductive_row, two_lambda);
  rep.target = metaplectic_satake_T2lambda(i, n, p);
  const bool match = i == n ? rep.filtered == rep.target
                            : (rep.reductive_row == rep.target && rep.filtered == rep.reductive_row);
  rep.agree = match && rep.all_stabilized;
  return rep;
}

bool representatives_distinct(GroupTag tag, int p, int depth) {
  using Mat = std::vector<std::vector<Rational>>;
  const int K = unipotent_dimension(tag);
  const long long range = static_cast<long long>(pow128(p, depth));
  const long long den = range;
  long long total = 1;
  for (int k = 0; k < K; ++k) total *= range;
  std::vector<Mat> reps, invs;
  for (long long idx = 0; idx < total; ++idx) {
    std::vector<Rational> x(K);
    long long t = idx;
    for (int k = 0; k < K; ++k) {
      x[k] = Rational(t % range, den);
      t /= range;
    }
    Mat u = unipotent_matrix(tag, x);
    const int s = static_cast<int>(u.size());
    Mat N = u;
    for (int i = 0; i < s; ++i) N[i][i] -= 1;
    Mat inv(s, std::vector<Rational>(s, Rational(0))), power(s, std::vector<Rational>(s, Rational(0)));
    for (int i = 0; i < s; ++i) inv[i][i] = power[i][i] = 1;
    for (int k = 1; k < s; ++k) {
      Mat next(s, std::vector<Rational>(s, Rational(0)));
      for (int i = 0; i < s; ++i)
        for (int l = 0; l < s; ++l)
          for (int j = 0; j < s; ++j) next[i][j] += power[i][l] * N[l][j];
      power = next;
      for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) inv[i][j] += (k % 2 ? -1 : 1) * power[i][j];
    }
    reps.push_back(u);
    invs.push_back(inv);
  }
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = a + 1; b < reps.size(); ++b) {
      const int s = static_cast<int>(reps[a].size());
      bool integral = true;
      for (int i = 0; i < s && integral; ++i)
        for (int j = 0; j < s && integral; ++j) {
          Rational e(0);
          for (int l = 0; l < s; ++l) e += reps[b][i][l] * invs[a][l][j];
          integral = e.denominator() % p != 0;
        }
      if (integral) return false;
    }
  return true;
}

int hilbert_by_solvability(const SquareClass& x, const SquareClass& y, const LocalField& F, int k) {
  if (F.f != 1) throw std::invalid_argument("the solvability oracle works over Q_p");
  const long long p = F.p;
  const long long M = static_cast<long long>(padic_pow(F.p, k));
  auto rep = [&](const SquareClass& c) {
    long long r = c.unit ? F.nonsquare_unit : 1;
    if (c.val) r *= p;
    return r % M;
  };
  const long long a = rep(x), b = rep(y);
  std::vector<char> square(M, 0);
  for (long long z = 0; z < M; ++z) square[(z * z) % M] = 1;
  for (long long X = 0; X < M; ++X)
    for (long long Y = 0; Y < M; ++Y) {
      if (X % p == 0 && Y % p == 0) continue;
      const long long r = (a * ((X * X) % M) + b * ((Y * Y) % M)) % M;
      if (square[r]) return 1;
    }
  return -1;
}

}  // namespace metasp
