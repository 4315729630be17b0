#include "metasp/selftest.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "metasp/classify.hpp"
#include "metasp/hecke.hpp"
#include "metasp/oracle.hpp"

namespace metasp {

namespace {

struct Tally {
  bool pass = true;
  std::ostringstream msg;
  int checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) msg << "first failure: " << what << "; ";
    if (!ok) pass = false;
  }
};

CriterionResult finish(int id, std::string name, Tally& t, const std::string& extra = "") {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.pass = t.pass;
  r.detail = t.msg.str() + std::to_string(t.checks) + " checks" + (extra.empty() ? "" : "; " + extra);
  return r;
}

CriterionResult satake_identities(const SelftestOptions& o) {
  Tally t;
  OracleOptions oo;
  oo.threads = o.threads;
  for (int p : {3, 5}) {
    auto rep = verify_metaplectic_pipeline(1, 1, p, 0, oo);
    t.expect(rep.agree, "n=1 p=" + std::to_string(p));
  }
  std::string extra = "Sp4 skipped (opt-in)";
  if (o.sp4) {
    extra = "Sp4 primes:";
    for (int p : o.sp4_primes) {
      extra += " " + std::to_string(p);
      for (int i = 1; i <= 2; ++i) {
        auto rep = verify_metaplectic_pipeline(i, 2, p, 0, oo);
        t.expect(rep.agree, "n=2 i=" + std::to_string(i) + " p=" + std::to_string(p));
        if (i == 2)
          for (const auto& z : {Cocharacter({-2, 0}), Cocharacter({-1, -1})})
            t.expect(rep.reductive_row.coefficient(z) == 0, "forced zero at " + to_string(z));
      }
    }
  }
  return finish(1, "Satake identities vs coset oracle", t, extra);
}

CriterionResult sl2_counts(const SelftestOptions& o) {
  Tally t;
  OracleOptions oo;
  oo.threads = o.threads;
  const Cocharacter two_lambda({-2});
  for (long long p : {3, 5, 7}) {
    auto a = count_cosets(Cocharacter({-1}), two_lambda, 3, GroupTag::SL2, static_cast<int>(p), oo);
    auto b = count_cosets(Cocharacter({0}), two_lambda, 3, GroupTag::SL2, static_cast<int>(p), oo);
    t.expect(a.raw_count == p - 1 && a.stabilized, "p-1 count at p=" + std::to_string(p));
    t.expect(b.raw_count == p * p - p && b.stabilized, "p^2-p count at p=" + std::to_string(p));
  }
  return finish(2, "SL2 coset counts", t);
}

CriterionResult hilbert_symbol(const SelftestOptions&) {
  Tally t;
  for (int p : {3, 5, 7}) {
    const auto F = LocalField::make(p);
    const auto m1 = SquareClass::minus_one(F);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        const auto x = SquareClass::from_index(a), y = SquareClass::from_index(b);
        const std::string tag = "(" + to_string(x) + "," + to_string(y) + ") p=" + std::to_string(p);
        t.expect(hilbert(x, y, F) == hilbert_by_solvability(x, y, F), "oracle " + tag);
        t.expect(hilbert(x, y, F) == hilbert(y, x, F), "symmetry " + tag);
        for (int c = 0; c < 4; ++c) {
          const auto z = SquareClass::from_index(c);
          t.expect(hilbert(x * y, z, F) == hilbert(x, z, F) * hilbert(y, z, F), "bimultiplicativity " + tag);
        }
      }
    for (int a = 0; a < 4; ++a) {
      const auto x = SquareClass::from_index(a);
      t.expect(hilbert(x, x * m1, F) == 1, "(x,-x) at p=" + std::to_string(p));
    }
  }
  return finish(3, "Hilbert symbol", t);
}

CriterionResult cover_arithmetic(const SelftestOptions& o) {
  Tally t;
  for (int n = 1; n <= 8; ++n)
    for (int i = 1; i <= n; ++i) {
      t.expect(eval_Q(coroot(i, n)) == (i < n ? 2 : 1), "Q on coroot " + std::to_string(i));
      t.expect(splits_over_Mprime(i, n) == (i != n), "splitting " + std::to_string(i));
    }
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> rank(1, 8), coord(-6, 6), cls(0, 3), prime(0, 2);
  const int primes[] = {3, 5, 7};
  for (int k = 0; k < 10000; ++k) {
    const int n = rank(rng);
    IntVec a(n), b(n);
    for (int j = 0; j < n; ++j) {
      a[j] = coord(rng);
      b[j] = coord(rng);
    }
    const auto F = LocalField::make(primes[prime(rng)]);
    const int s = commutator_sign(Cocharacter(a), SquareClass::from_index(cls(rng)), Cocharacter(b),
                                  SquareClass::from_index(cls(rng)), F);
    t.expect(s == 1, "commutator sign on " + to_string(a) + ", " + to_string(b));
  }
  return finish(4, "Cover arithmetic", t);
}

CriterionResult a_set_lemma(const SelftestOptions&) {
  Tally t;
  for (int n = 1; n <= 5; ++n)
    for (int i = 1; i < n; ++i) {
      const auto A = enumerate_A(lambda_alpha(i, n));
      IntVec zero(n, 0), ei(n, 0);
      ei[i - 1] = 1;
      const std::string tag = " n=" + std::to_string(n) + " i=" + std::to_string(i);
      for (const auto& fiber : A_fibers(A, i)) {
        const bool ok = fiber.size() == 1 || (fiber.size() == 2 && fiber[0] == zero && fiber[1] == ei);
        t.expect(ok, "fiber shape" + tag);
      }
      for (long long p : {0LL, 3LL, 5LL}) {
        const auto h = metaplectic_satake_T2lambda(i, n, p);
        t.expect(vanishing_sum_check(h, A, i), "accepts the Satake family" + tag);
        std::map<IntVec, long long> base;
        for (const auto& a : A.elements) base[a] = 0;
        base[zero] = 1;
        base[ei] = -1;
        t.expect(vanishing_sum_check(base, A, i, p), "accepts coefficient map" + tag);
        // Every single-point perturbation must be rejected.
        for (const auto& a : A.elements)
          for (long long d : {1LL, -1LL}) {
            auto c = base;
            c[a] += d;
            t.expect(!vanishing_sum_check(c, A, i, p), "rejects perturbation at " + to_string(a) + tag);
          }
      }
    }
  return finish(5, "A-set vanishing lemma", t);
}

CriterionResult classification_counts(const SelftestOptions&) {
  Tally t;
  for (int n = 1; n <= 5; ++n)
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      const ParabolicSubset J(n, m);
      const auto E = eligible_roots(J).indices();
      for (std::uint32_t f = 0; f < (1u << E.size()); ++f) {
        SupersingularDatum d;
        d.levi = J;
        d.label = "s";
        for (std::size_t k = 0; k < E.size(); ++k) d.flags[E[k]] = (f >> k) & 1;
        if (d.flags.count(n) && d.flags[n]) continue;  // not genuine
        const auto factors = composition_factors(d);
        const auto pi = pi_sigma(d);
        t.expect(!pi.contains(n), "long root in Pi(sigma)");
        t.expect(factors.size() == (std::size_t{1} << pi.size()), "factor count for " + to_string(J));
        for (const auto& tr : factors) validate_triple(tr);
      }
    }

  const auto F = LocalField::make(3);
  for (long long N : {2LL, 4LL}) {
    const auto G = ValueGroup::make(F, N);
    const long long order = (F.q - 1) * N;
    for (int n = 1; n <= 4; ++n) {
      long long total = 1;
      for (int k = 0; k < n; ++k) total *= order;
      std::vector<SupersingularDatum> menu;
      for (long long code = 0; code < total; ++code) {
        GenuineTorusCharacter s;
        long long c = code;
        for (int k = 0; k < n; ++k, c /= order) s.xi.push_back(SmoothCharacterFx::make(G, c % (F.q - 1), (c / (F.q - 1)) % N));
        s.psi_class = SquareClass::from_index(static_cast<int>(code % 4));
        int trivial = 0;
        for (int i = 1; i < n; ++i) trivial += restrict_short_coroot(s, i).is_trivial();
        const int len = ps_length(s);
        t.expect(len == (1 << trivial) && len <= (1 << (n - 1)), "ps_length bound");
        t.expect((len == (1 << (n - 1))) == (trivial == n - 1), "maximal length exactly when all trivial");
        t.expect(ps_irreducible(s) == (len == 1), "irreducibility");
        const auto d = torus_datum(s);
        t.expect(static_cast<int>(composition_factors(d).size()) == len, "ps_length vs factors");
        t.expect(ps_irreducible(s) == pi_sigma(d).is_empty(), "irreducible iff Pi(sigma) empty");
        if (n <= 2) menu.push_back(d);
      }
      if (n <= 2) {
        const auto rep = enumerate_classification(n, menu, F);
        t.expect(rep.injective, "injectivity at n=" + std::to_string(n));
      }
    }
  }
  return finish(6, "Classification counts", t);
}

CriterionResult psi_dependence(const SelftestOptions& o) {
  Tally t;
  std::mt19937_64 rng(o.seed + 7);
  const int primes[] = {3, 5, 7};
  std::uniform_int_distribution<int> pick(0, 2), rank(1, 4);
  for (int k = 0; k < 100; ++k) {
    const auto F = LocalField::make(primes[pick(rng)]);
    const auto G = ValueGroup::make(F, 2 * (F.q - 1));
    std::uniform_int_distribution<long long> ue(0, F.q - 2), pv(0, G.N - 1);
    GenuineTorusCharacter base;
    const int n = rank(rng);
    for (int i = 0; i < n; ++i) base.xi.push_back(SmoothCharacterFx::make(G, ue(rng), pv(rng)));
    base.psi_class = SquareClass::one();
    for (int a = 0; a < 4; ++a) {
      auto twisted = base;
      twisted.psi_class = SquareClass::from_index(a);
      t.expect(ps_equivalent(base, twisted, F) == SquareClass::from_index(a).is_square(), "psi class " + std::to_string(a));
    }
  }
  return finish(7, "psi dependence", t);
}

CriterionResult change_of_weight(const SelftestOptions&) {
  Tally t;
  for (int n = 1; n <= 3; ++n) {
    const long long N = n == 3 ? 3 : 4;
    long long thetas = 1;
    for (int k = 0; k < n; ++k) thetas *= N;
    const auto points = HeckeCharacter::standard_points(n);
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      const ParabolicSubset J(n, m);
      for (long long code = 0; code < thetas; ++code) {
        IntVec theta(n);
        long long c = code;
        for (int k = 0; k < n; ++k, c /= N) theta[k] = static_cast<int>(c % N);
        const auto chi = HeckeCharacter::from_torus_data(J, theta, N, points);
        const auto Pi = pi_chi(chi);
        for (int i = 1; i <= n; ++i) {
          if (Pi.contains(i)) continue;
          bool orth = true;
          for (int b : Pi.indices()) orth = orth && pairing(simple_root(b, n), coroot(i, n)) == 0;
          const CharValue v = chi.value(coroot(i, n));
          const bool trivial = !v.zero && v.exp % N == 0;
          const bool expect_na = i < n && orth && trivial;
          const auto d = change_of_weight_decision(i, chi);
          t.expect(d.applicable == !expect_na, "decision at n=" + std::to_string(n) + " i=" + std::to_string(i) +
                                                   " J=" + to_string(J) + " theta=" + to_string(theta));
        }
      }
    }
  }
  return finish(8, "Change of weight", t);
}

}  // namespace

CriterionResult run_criterion(int id, const SelftestOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    switch (id) {
      case 1: r = satake_identities(opts); break;
      case 2: r = sl2_counts(opts); break;
      case 3: r = hilbert_symbol(opts); break;
      case 4: r = cover_arithmetic(opts); break;
      case 5: r = a_set_lemma(opts); break;
      case 6: r = classification_counts(opts); break;
      case 7: r = psi_dependence(opts); break;
      case 8: r = change_of_weight(opts); break;
      default: throw std::out_of_range("criterion id must be 1.." + std::to_string(kSelftestCriteria));
    }
  } catch (const std::out_of_range&) {
    throw;
  } catch (const std::exception& e) {
    static const char* names[] = {"", "Satake identities vs coset oracle", "SL2 coset counts", "Hilbert symbol",
                                  "Cover arithmetic", "A-set vanishing lemma", "Classification counts",
                                  "psi dependence", "Change of weight"};
    r.id = id;
    r.name = names[id];
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_selftest(const SelftestOptions& opts) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kSelftestCriteria; ++id) out.push_back(run_criterion(id, opts));
  return out;
}

}  // namespace metasp
