// metasp: command-line front end for the metaplectic Sp_2n toolkit.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or schema error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "metasp/classify.hpp"
#include "metasp/json_io.hpp"
#include "metasp/oracle.hpp"
#include "metasp/selftest.hpp"

using namespace metasp;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int p = 3;
  int f = 1;
  int n = 2;
  long long N = 0;  // 0: 2(p-1)
  int depth = 4;
  std::uint64_t seed = 1;
  int threads = 0;
  std::string emit = "text";

  LocalField field() const { return LocalField::make(p, f); }
  ValueGroup values() const { return ValueGroup::make(field(), N ? N : 2LL * (p - 1)); }
  bool json() const { return emit == "json"; }

  void check() const {
    if (!is_odd_prime(p)) throw UsageError("--p must be an odd prime");
    if (f < 1) throw UsageError("--f must be positive");
    if (n < 1 || n > ParabolicSubset::kMaxRank) throw UsageError("--n out of range");
    if (depth < 1) throw UsageError("--depth must be at least 1");
    const long long n_eff = N ? N : 2LL * (p - 1);
    if (n_eff % 2 != 0 || std::gcd(n_eff, static_cast<long long>(p)) != 1)
      throw UsageError("--N must be even and prime to p");
  }
};

IntVec parse_ints(const std::string& s) {
  IntVec out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw UsageError("bad integer '" + tok + "'");
    } catch (const std::logic_error&) {
      throw UsageError("bad integer '" + tok + "'");
    }
  }
  return out;
}

ParabolicSubset parse_subset(const std::string& s, int n) {
  if (s.empty() || s == "-") return ParabolicSubset(n);
  std::vector<int> idx;
  for (int i : parse_ints(s)) {
    if (i < 1 || i > n) throw UsageError("simple root index " + std::to_string(i) + " out of range");
    idx.push_back(i);
  }
  return ParabolicSubset::of(n, idx);
}

void emit_json(const json& j, Schema s) {
  validate(j, s);
  std::cout << j.dump(2) << "\n";
}

int cmd_hilbert(const RunConfig& cfg, const std::string& xs, const std::string& ys, bool verify) {
  SquareClass x, y;
  try {
    x = SquareClass::parse(xs);
    y = SquareClass::parse(ys);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  const auto F = cfg.field();
  const int h = hilbert(x, y, F);
  int oracle = 0;
  if (verify) {
    if (cfg.f != 1) throw UsageError("--verify needs f = 1");
    oracle = hilbert_by_solvability(x, y, F);
  }
  if (cfg.json()) {
    json j = {{"x", xs}, {"y", ys}, {"p", cfg.p}, {"f", cfg.f}, {"symbol", h}};
    if (verify) j["oracle"] = oracle;
    emit_json(j, Schema::Object);
  } else {
    std::cout << h << "\n";
    if (verify) std::cout << "oracle: " << oracle << (oracle == h ? " (agree)" : " (MISMATCH)") << "\n";
  }
  return verify && oracle != h ? 1 : 0;
}

int cmd_cover(const RunConfig& cfg, const std::string& lam, const std::string& lam2) {
  const int n = cfg.n;
  json rows = json::array();
  for (int i = 1; i <= n; ++i)
    rows.push_back({{"i", i}, {"Q", eval_Q(coroot(i, n))}, {"splits", splits_over_Mprime(i, n)}});
  json j = {{"n", n}, {"coroots", rows}};
  auto read = [&](const std::string& s) {
    Cocharacter c(parse_ints(s));
    if (c.rank() != n) throw UsageError("cocharacter rank must equal --n");
    return c;
  };
  if (!lam.empty()) j["Q_lambda"] = eval_Q(read(lam));
  if (!lam.empty() && !lam2.empty()) j["B"] = eval_B(read(lam), read(lam2));
  if (cfg.json()) {
    emit_json(j, Schema::Object);
    return 0;
  }
  for (const auto& r : rows)
    std::cout << "alpha_" << r["i"] << "^vee: Q = " << r["Q"] << ", splits over M'_alpha: " << (r["splits"].get<bool>() ? "yes" : "no") << "\n";
  if (j.contains("Q_lambda")) std::cout << "Q(lambda) = " << j["Q_lambda"] << "\n";
  if (j.contains("B")) std::cout << "B(lambda, lambda') = " << j["B"] << "\n";
  return 0;
}

int cmd_satake(const RunConfig& cfg, int i, bool oracle) {
  if (i < 1 || i > cfg.n) throw UsageError("--i must lie in 1..n");
  const auto h = metaplectic_satake_T2lambda(i, cfg.n);
  json j = to_json(h);
  validate(j, Schema::HeckeElement);
  int rc = 0;
  std::string verdict;
  if (oracle) {
    if (cfg.n > 2 || cfg.f != 1) throw UsageError("--oracle needs n <= 2 and f = 1");
    OracleOptions opts;
    opts.threads = cfg.threads;
    const auto rep = verify_metaplectic_pipeline(i, cfg.n, cfg.p, 0, opts);
    verdict = rep.agree ? "agree" : "disagree";
    rc = rep.agree ? 0 : 1;
    j["oracle"] = {{"verdict", verdict}, {"p", cfg.p}, {"depth", rep.depth},
                   {"reductive_row", to_json(rep.reductive_row)}, {"filtered", to_json(rep.filtered)}};
  }
  if (cfg.json()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << to_json(h).dump() << "\n";
    if (oracle) std::cout << "oracle: " << verdict << "\n";
  }
  return rc;
}

int cmd_aset(const RunConfig& cfg, int i) {
  if (i < 1 || i > cfg.n) throw UsageError("--i must lie in 1..n");
  const auto A = enumerate_A(lambda_alpha(i, cfg.n));
  const auto fibers = A_fibers(A, i);
  const bool check = i < cfg.n ? vanishing_sum_check(metaplectic_satake_T2lambda(i, cfg.n, cfg.p), A, i) : true;
  json j = {{"lambda", A.base.coords}, {"elements", A.elements}, {"fibers", fibers},
            {"lemma_applies", i < cfg.n}, {"vanishing_check", check}};
  if (cfg.json()) {
    emit_json(j, Schema::Object);
  } else {
    std::cout << "A(" << to_string(A.base) << "): " << A.elements.size() << " elements\n";
    for (const auto& fb : fibers) {
      std::cout << " ";
      for (const auto& a : fb) std::cout << " " << to_string(a);
      std::cout << "\n";
    }
    if (i < cfg.n) std::cout << "vanishing sum check: " << (check ? "pass" : "FAIL") << "\n";
  }
  return check ? 0 : 1;
}

int cmd_weights(const RunConfig& cfg, const std::string& nu_s) {
  const IntVec nu = parse_ints(nu_s);
  if (static_cast<int>(nu.size()) != cfg.n) throw UsageError("--nu must have n entries");
  long long q = 1;
  for (int k = 0; k < cfg.f; ++k) q *= cfg.p;
  if (!is_q_restricted(Character(nu), q)) throw UsageError("weight is not q-restricted");
  const QRestrictedWeight w(Character(nu), q);
  json j = to_json(w);
  json pairs = json::array();
  for (int i = 1; i <= cfg.n; ++i)
    if (pairing(w.nu(), coroot(i, cfg.n)) == 0) {
      const auto w2 = change_of_weight_pair(w, i);
      pairs.push_back({{"i", i}, {"nu_prime", w2.nu().coords}});
    }
  j["change_of_weight"] = pairs;
  validate(j, Schema::Weight);
  if (cfg.json()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "nu = " << to_string(w.nu()) << ", q = " << q << ", Pi_nu = " << to_string(pi_nu(w)) << "\n";
    for (const auto& pr : pairs) std::cout << "  i = " << pr["i"] << ": nu' = " << pr["nu_prime"].dump() << "\n";
  }
  return 0;
}

struct ClassifyArgs {
  std::string input;
  bool siegel = false;
  std::string P, Q, rho_flags, label = "rho";
};

std::map<int, bool> parse_flags(const std::string& s) {
  std::map<int, bool> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos) throw UsageError("flags look like 1:true,2:false");
    const std::string v = tok.substr(colon + 1);
    if (v != "true" && v != "false") throw UsageError("flag values are true or false");
    out[parse_ints(tok.substr(0, colon)).at(0)] = v == "true";
  }
  return out;
}

void print_triples(const std::vector<SupersingularTriple>& ts, const RunConfig& cfg) {
  if (cfg.emit == "csv") {
    std::cout << "P,Q,levi_shape,label,supercuspidal\n";
    for (const auto& t : ts)
      std::cout << '"' << to_string(t.P) << "\",\"" << to_string(t.Q) << "\"," << to_string(levi_shape(t.P)) << ","
                << t.sigma.label << "," << (is_supercuspidal_class(t) ? "yes" : "no") << "\n";
    return;
  }
  for (const auto& t : ts)
    std::cout << "(P = " << to_string(t.P) << ", sigma = " << t.sigma.label << ", Q = " << to_string(t.Q) << ")  Levi "
              << to_string(levi_shape(t.P)) << "\n";
}

int cmd_classify(const RunConfig& cfg, const ClassifyArgs& a) {
  const int n = cfg.n;
  std::vector<SupersingularTriple> triples;
  json extra = json::object();
  if (a.siegel) {
    try {
      triples.push_back(siegel_lift(parse_subset(a.P, n), parse_flags(a.rho_flags), parse_subset(a.Q, n), a.label));
    } catch (const std::invalid_argument& e) {
      throw SchemaError(e.what());
    }
  } else {
    if (a.input.empty()) throw UsageError("classify needs --input FILE (or - for stdin) or --siegel");
    json in;
    try {
      if (a.input == "-") {
        in = json::parse(std::cin);
      } else {
        std::ifstream f(a.input);
        if (!f) throw UsageError("cannot open " + a.input);
        in = json::parse(f);
      }
    } catch (const json::parse_error& e) {
      throw SchemaError(e.what());
    }
    const auto d = datum_from_json(in, n, cfg.values());
    triples = composition_factors(d);
    if (d.torus_character) {
      extra["length"] = ps_length(*d.torus_character);
      extra["irreducible"] = ps_irreducible(*d.torus_character);
    }
  }
  json arr = json::array();
  for (const auto& t : triples) arr.push_back(to_json(t));
  validate(arr, Schema::TripleList);
  if (cfg.json()) {
    json j = {{"triples", arr}};
    j.update(extra);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  print_triples(triples, cfg);
  if (cfg.emit != "csv") {
    if (extra.contains("length")) std::cout << "length: " << extra["length"] << "\n";
    if (extra.contains("irreducible")) std::cout << "irreducible: " << extra["irreducible"] << "\n";
  }
  return 0;
}

int cmd_oracle(const RunConfig& cfg, const std::string& group, const std::string& lam) {
  GroupTag tag;
  try {
    tag = parse_group_tag(group);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (cfg.f != 1) throw UsageError("the coset oracle needs f = 1");
  const Cocharacter lambda(parse_ints(lam));
  if (lambda.rank() != torus_dimension(tag)) throw UsageError("lambda has the wrong rank for " + group);
  OracleOptions opts;
  opts.threads = cfg.threads;
  const auto table = reductive_satake_table(lambda, cfg.depth, tag, cfg.p, opts);
  json rows = json::array();
  bool stable = true;
  for (const auto& r : table) {
    json row = to_json(r);
    validate(row, Schema::CountRow);
    rows.push_back(row);
    stable = stable && r.stabilized;
  }
  if (cfg.json()) {
    std::cout << json{{"group", group}, {"lambda", lambda.coords}, {"p", cfg.p}, {"depth", cfg.depth}, {"rows", rows}}.dump(2)
              << "\n";
  } else {
    for (const auto& r : table)
      std::cout << to_string(r.mu) << "  raw " << r.raw_count << "  mod p " << r.count_mod_p
                << (r.stabilized ? "" : "  (not stabilized)") << "\n";
  }
  return stable ? 0 : 1;
}

int cmd_selftest(const RunConfig& cfg, bool sp4, const std::string& primes) {
  SelftestOptions o;
  o.sp4 = sp4;
  o.seed = cfg.seed;
  o.threads = cfg.threads;
  if (!primes.empty()) o.sp4_primes = parse_ints(primes);
  bool ok = true;
  json arr = json::array();
  for (int id = 1; id <= kSelftestCriteria; ++id) {
    const auto r = run_criterion(id, o);
    ok = ok && r.pass;
    if (cfg.json()) {
      arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    } else {
      std::cout << "criterion " << r.id << " [" << (r.pass ? "PASS" : "FAIL") << "] " << r.name << ": " << r.detail << "\n";
      std::cout.flush();
    }
  }
  if (cfg.json()) emit_json(json{{"criteria", arr}, {"pass", ok}}, Schema::Object);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metaplectic Sp_2n toolkit: root data, cover arithmetic, Satake identities, classification"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value configuration file");
  RunConfig cfg;
  app.add_option("--p", cfg.p, "odd residue characteristic")->capture_default_str();
  app.add_option("--f", cfg.f, "residue degree")->capture_default_str();
  app.add_option("--n", cfg.n, "rank")->capture_default_str();
  app.add_option("--N", cfg.N, "value group order (default 2(p-1))");
  app.add_option("--depth", cfg.depth, "coset enumeration depth")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--threads", cfg.threads, "oracle worker threads (0: all cores)");
  app.add_option("--emit", cfg.emit, "output format")->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();

  std::string hx, hy;
  bool hverify = false;
  auto* hil = app.add_subcommand("hilbert", "quadratic Hilbert symbol of two square classes (1|u|pi|upi)");
  hil->add_option("x", hx)->required();
  hil->add_option("y", hy)->required();
  hil->add_flag("--verify", hverify, "cross-check with the solvability oracle");

  std::string lam1, lam2;
  auto* cov = app.add_subcommand("cover", "quadratic form Q and splitting data of the cover");
  cov->add_option("--lambda", lam1, "cocharacter, comma separated (use --lambda=-1,2)");
  cov->add_option("--lambda2", lam2, "second cocharacter for B");

  int si = 1;
  bool soracle = false;
  auto* sat = app.add_subcommand("satake", "metaplectic Satake transform of T_{2 lambda_alpha_i}");
  sat->add_option("--i", si)->required();
  sat->add_flag("--oracle", soracle, "verify against the coset-counting oracle (n <= 2)");

  int ai = 1;
  auto* aset = app.add_subcommand("aset", "the set A(lambda_alpha_i) and its fibers");
  aset->add_option("--i", ai)->required();

  std::string nu;
  auto* wts = app.add_subcommand("weights", "q-restricted weight data");
  wts->add_option("--nu", nu, "highest weight, comma separated")->required();

  ClassifyArgs ca;
  auto* cls = app.add_subcommand("classify", "composition factors of a supersingular datum or torus character");
  cls->add_option("--input", ca.input, "JSON file, - for stdin");
  cls->add_flag("--siegel", ca.siegel, "lift a reductive triple from the Siegel Levi");
  cls->add_option("--P", ca.P, "P for --siegel, comma separated");
  cls->add_option("--Q", ca.Q, "Q for --siegel, comma separated");
  cls->add_option("--rho-flags", ca.rho_flags, "reductive flags, e.g. 1:true");
  cls->add_option("--label", ca.label, "label of the lifted datum");

  std::string group = "sl2", olam;
  auto* orc = app.add_subcommand("oracle", "reductive coset counts |S_{mu,lambda}|");
  orc->add_option("--group", group)->check(CLI::IsMember({"sl2", "gl2", "sp4"}))->capture_default_str();
  orc->add_option("--lambda", olam, "antidominant lambda (use --lambda=-2)")->required();

  bool sp4 = false;
  std::string sp4_primes;
  auto* st = app.add_subcommand("selftest", "run acceptance criteria 1-8");
  st->add_flag("--sp4", sp4, "include the Sp4 coset oracle");
  st->add_option("--sp4-primes", sp4_primes, "primes for the Sp4 run (default 3)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    cfg.check();
    if (*hil) return cmd_hilbert(cfg, hx, hy, hverify);
    if (*cov) return cmd_cover(cfg, lam1, lam2);
    if (*sat) return cmd_satake(cfg, si, soracle);
    if (*aset) return cmd_aset(cfg, ai);
    if (*wts) return cmd_weights(cfg, nu);
    if (*cls) return cmd_classify(cfg, ca);
    if (*orc) return cmd_oracle(cfg, group, olam);
    if (*st) return cmd_selftest(cfg, sp4, sp4_primes);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
