#pragma once

#include <map>
#include <vector>

#include "metasp/cover.hpp"

namespace metasp {

// Moduli for character values: the unit part is an exponent in Z/(q-1)
// (through a fixed generator of k^x), the value at pi lies in Z/N.
struct ValueGroup {
  long long q = 3;
  long long N = 2;

  static ValueGroup make(const LocalField& F, long long N);
  static ValueGroup make_default(const LocalField& F);
};

struct SmoothCharacterFx {
  long long unit_exp = 0;
  long long pi_val = 0;
  long long unit_mod = 2;
  long long pi_mod = 2;

  static SmoothCharacterFx trivial(const ValueGroup& G);
  static SmoothCharacterFx make(const ValueGroup& G, long long unit_exp, long long pi_val);

  bool is_trivial() const { return unit_exp == 0 && pi_val == 0; }
  SmoothCharacterFx operator*(const SmoothCharacterFx& o) const;
  SmoothCharacterFx inverse() const;
  bool operator==(const SmoothCharacterFx& o) const;
  bool operator<(const SmoothCharacterFx& o) const;
};

// The +-1-valued character x -> (x, c)_F viewed inside the value group.
SmoothCharacterFx hilbert_character(const SquareClass& c, const LocalField& F, const ValueGroup& G);

struct GenuineTorusCharacter {
  std::vector<SmoothCharacterFx> xi;
  SquareClass psi_class;

  int rank() const { return static_cast<int>(xi.size()); }
};

SmoothCharacterFx restrict_short_coroot(const GenuineTorusCharacter& sigma, int i);
bool genuine_equal(const GenuineTorusCharacter& a, const GenuineTorusCharacter& b, const LocalField& F);
// Keys 1..n; the long-root entry is always false.
std::map<int, bool> supersingular_flags_from_character(const GenuineTorusCharacter& sigma);

}  // namespace metasp
