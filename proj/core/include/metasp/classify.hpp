#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "metasp/characters.hpp"

namespace metasp {

struct SupersingularDatum {
  ParabolicSubset levi;
  // "T cap M'_alpha acts trivially", keyed by the eligible simple roots.
  std::map<int, bool> flags;
  bool genuine = true;
  std::optional<GenuineTorusCharacter> torus_character;
  std::string label;

  int rank() const { return levi.rank(); }
};

struct SupersingularTriple {
  ParabolicSubset P;
  SupersingularDatum sigma;
  ParabolicSubset Q;
};

struct LeviShape {
  IntVec gl_blocks;  // in order along the diagonal, size-1 blocks included
  int sp_rank = 0;   // m in Sp_{2m}
  bool operator==(const LeviShape&) const = default;
};

std::string to_string(const LeviShape& s);

// Simple roots alpha outside J with <beta, alpha^vee> = 0 for all beta in J.
ParabolicSubset eligible_roots(const ParabolicSubset& J);
void validate_datum(const SupersingularDatum& sigma);
SupersingularDatum torus_datum(const GenuineTorusCharacter& sigma, const std::string& label = "torus");

ParabolicSubset pi_sigma(const SupersingularDatum& sigma);
ParabolicSubset p_sigma(const SupersingularDatum& sigma);
void validate_triple(const SupersingularTriple& t);
std::vector<SupersingularTriple> composition_factors(const SupersingularDatum& sigma);

bool data_equivalent(const SupersingularDatum& a, const SupersingularDatum& b, const LocalField& F);
bool triples_equivalent(const SupersingularTriple& a, const SupersingularTriple& b, const LocalField& F);

int ps_length(const GenuineTorusCharacter& sigma);
bool ps_irreducible(const GenuineTorusCharacter& sigma);
bool ps_equivalent(const GenuineTorusCharacter& a, const GenuineTorusCharacter& b, const LocalField& F);

LeviShape levi_shape(const ParabolicSubset& J);

// Reductive GL_n datum on P inside the Siegel Levi: flags for the roots of
// Pi_S eligible relative to P.
SupersingularTriple siegel_lift(const ParabolicSubset& P, const std::map<int, bool>& rho_flags,
                                const ParabolicSubset& Q, const std::string& label = "rho");

bool is_supercuspidal_class(const SupersingularTriple& t);

struct ClassificationReport {
  std::vector<SupersingularTriple> triples;
  std::vector<std::string> merges;
  bool injective = true;
};

ClassificationReport enumerate_classification(int n, const std::vector<SupersingularDatum>& menu, const LocalField& F);

}  // namespace metasp
