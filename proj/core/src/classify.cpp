#include "metasp/classify.hpp"

#include <sstream>
#include <stdexcept>

namespace metasp {

std::string to_string(const LeviShape& s) {
  std::ostringstream os;
  bool first = true;
  for (int b : s.gl_blocks) {
    os << (first ? "" : " x ") << "GL" << b;
    first = false;
  }
  if (s.sp_rank > 0) os << (first ? "" : " x ") << "Sp" << 2 * s.sp_rank;
  if (first && s.sp_rank == 0) os << "trivial";
  return os.str();
}

ParabolicSubset eligible_roots(const ParabolicSubset& J) {
  const int n = J.rank();
  ParabolicSubset E(n);
  for (int a = 1; a <= n; ++a) {
    if (J.contains(a)) continue;
    bool orthogonal = true;
    for (int b : J.indices())
      if (pairing(simple_root(b, n), coroot(a, n)) != 0) orthogonal = false;
    if (orthogonal) E.insert(a);
  }
  return E;
}

void validate_datum(const SupersingularDatum& sigma) {
  const int n = sigma.rank();
  const ParabolicSubset E = eligible_roots(sigma.levi);
  for (const auto& [a, flag] : sigma.flags)
    if (!E.contains(a)) throw std::invalid_argument("flag given for a non-eligible root " + std::to_string(a));
  for (int a : E.indices())
    if (!sigma.flags.count(a)) throw std::invalid_argument("missing flag for eligible root " + std::to_string(a));
  if (sigma.genuine && E.contains(n) && sigma.flags.at(n))
    throw std::invalid_argument("a genuine datum cannot be trivial on the long root subgroup");
  if (sigma.torus_character) {
    if (!sigma.levi.is_empty()) throw std::invalid_argument("torus characters need the empty Levi");
    if (sigma.torus_character->rank() != n) throw std::invalid_argument("torus character rank mismatch");
    if (supersingular_flags_from_character(*sigma.torus_character) != sigma.flags)
      throw std::invalid_argument("flags disagree with the torus character");
  }
}

SupersingularDatum torus_datum(const GenuineTorusCharacter& sigma, const std::string& label) {
  SupersingularDatum d;
  d.levi = ParabolicSubset(sigma.rank());
  d.flags = supersingular_flags_from_character(sigma);
  d.torus_character = sigma;
  d.label = label;
  return d;
}

ParabolicSubset pi_sigma(const SupersingularDatum& sigma) {
  const int n = sigma.rank();
  const ParabolicSubset E = eligible_roots(sigma.levi);
  ParabolicSubset out(n);
  for (int a : E.indices()) {
    auto it = sigma.flags.find(a);
    if (it == sigma.flags.end()) throw std::invalid_argument("missing flag for eligible root " + std::to_string(a));
    if (it->second && a != n) out.insert(a);
  }
  return out;
}

ParabolicSubset p_sigma(const SupersingularDatum& sigma) { return sigma.levi | pi_sigma(sigma); }

void validate_triple(const SupersingularTriple& t) {
  if (!(t.P == t.sigma.levi)) throw std::invalid_argument("triple: P must be the Levi of sigma");
  if (!t.P.is_subset_of(t.Q) || !t.Q.is_subset_of(p_sigma(t.sigma)))
    throw std::invalid_argument("triple: need P within Q within P(sigma)");
}

std::vector<SupersingularTriple> composition_factors(const SupersingularDatum& sigma) {
  validate_datum(sigma);
  const std::vector<int> free = pi_sigma(sigma).indices();
  std::vector<SupersingularTriple> out;
  for (std::uint32_t s = 0; s < (1u << free.size()); ++s) {
    ParabolicSubset Q = sigma.levi;
    for (std::size_t k = 0; k < free.size(); ++k)
      if (s & (1u << k)) Q.insert(free[k]);
    out.push_back({sigma.levi, sigma, Q});
  }
  return out;
}

bool data_equivalent(const SupersingularDatum& a, const SupersingularDatum& b, const LocalField& F) {
  if (!(a.levi == b.levi)) return false;
  if (a.torus_character && b.torus_character) return genuine_equal(*a.torus_character, *b.torus_character, F);
  if (a.torus_character || b.torus_character) return false;
  return a.label == b.label;
}

bool triples_equivalent(const SupersingularTriple& a, const SupersingularTriple& b, const LocalField& F) {
  return a.P == b.P && a.Q == b.Q && data_equivalent(a.sigma, b.sigma, F);
}

int ps_length(const GenuineTorusCharacter& sigma) {
  int trivial = 0;
  for (int i = 1; i < sigma.rank(); ++i)
    if (restrict_short_coroot(sigma, i).is_trivial()) ++trivial;
  return 1 << trivial;
}

bool ps_irreducible(const GenuineTorusCharacter& sigma) { return ps_length(sigma) == 1; }

bool ps_equivalent(const GenuineTorusCharacter& a, const GenuineTorusCharacter& b, const LocalField& F) {
  return genuine_equal(a, b, F);
}

LeviShape levi_shape(const ParabolicSubset& J) {
  const int n = J.rank();
  LeviShape s;
  int k = 1;  // current e-coordinate
  while (k <= n) {
    if (!J.contains(k)) {
      s.gl_blocks.push_back(1);
      ++k;
      continue;
    }
    int end = k;
    while (end + 1 <= n && J.contains(end + 1)) ++end;
    if (end == n) {
      s.sp_rank = n - k + 1;
      break;
    }
    // alpha_k..alpha_end are short: they join coordinates k..end+1.
    s.gl_blocks.push_back(end - k + 2);
    k = end + 2;
  }
  return s;
}

SupersingularTriple siegel_lift(const ParabolicSubset& P, const std::map<int, bool>& rho_flags,
                                const ParabolicSubset& Q, const std::string& label) {
  const int n = P.rank();
  const ParabolicSubset S = ParabolicSubset::siegel(n);
  if (!P.is_subset_of(S) || !Q.is_subset_of(S)) throw std::invalid_argument("Siegel lift needs P, Q inside the Siegel Levi");
  const ParabolicSubset E = eligible_roots(P);
  ParabolicSubset pi_rho(n);
  for (const auto& [a, flag] : rho_flags) {
    if (!S.contains(a) || !E.contains(a)) throw std::invalid_argument("reductive flag on a non-eligible root");
    if (flag) pi_rho.insert(a);
  }
  for (int a : E.indices())
    if (a != n && !rho_flags.count(a)) throw std::invalid_argument("missing reductive flag for root " + std::to_string(a));
  if (!P.is_subset_of(Q) || !Q.is_subset_of(P | pi_rho)) throw std::invalid_argument("invalid reductive triple");

  SupersingularDatum sigma;
  sigma.levi = P;
  sigma.flags = rho_flags;
  if (E.contains(n)) sigma.flags[n] = false;
  sigma.label = label;
  SupersingularTriple t{P, sigma, Q};
  validate_datum(sigma);
  validate_triple(t);
  return t;
}

bool is_supercuspidal_class(const SupersingularTriple& t) { return t.P.is_full(); }

ClassificationReport enumerate_classification(int n, const std::vector<SupersingularDatum>& menu, const LocalField& F) {
  ClassificationReport rep;
  std::vector<SupersingularDatum> kept;
  for (std::size_t k = 0; k < menu.size(); ++k) {
    const SupersingularDatum& d = menu[k];
    if (d.rank() != n) throw std::invalid_argument("menu datum has the wrong rank");
    validate_datum(d);
    bool dup = false;
    for (std::size_t j = 0; j < kept.size() && !dup; ++j)
      if (data_equivalent(kept[j], d, F)) {
        dup = true;
        rep.merges.push_back("menu entry " + std::to_string(k) + " (" + d.label + ") merged with an earlier equivalent datum");
      }
    if (!dup) kept.push_back(d);
  }
  std::vector<std::size_t> origin;
  for (std::size_t j = 0; j < kept.size(); ++j)
    for (auto& t : composition_factors(kept[j])) {
      rep.triples.push_back(t);
      origin.push_back(j);
    }
  for (std::size_t a = 0; a < rep.triples.size(); ++a)
    for (std::size_t b = a + 1; b < rep.triples.size(); ++b)
      if (triples_equivalent(rep.triples[a], rep.triples[b], F)) rep.injective = false;
  return rep;
}

}  // namespace metasp
