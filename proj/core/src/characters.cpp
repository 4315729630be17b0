#include "metasp/characters.hpp"

#include <numeric>
#include <stdexcept>
#include <tuple>

namespace metasp {

namespace {

long long mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

void require_compatible(const SmoothCharacterFx& a, const SmoothCharacterFx& b) {
  if (a.unit_mod != b.unit_mod || a.pi_mod != b.pi_mod)
    throw std::invalid_argument("characters live in different value groups");
}

}  // namespace

ValueGroup ValueGroup::make(const LocalField& F, long long N) {
  if (N <= 0 || N % 2 != 0) throw std::invalid_argument("value group order must be even (needs to contain -1)");
  if (std::gcd(N, static_cast<long long>(F.p)) != 1)
    throw std::invalid_argument("value group order must be prime to p");
  return ValueGroup{F.q, N};
}

ValueGroup ValueGroup::make_default(const LocalField& F) { return make(F, std::lcm(F.q - 1, 2LL)); }

SmoothCharacterFx SmoothCharacterFx::trivial(const ValueGroup& G) { return make(G, 0, 0); }

SmoothCharacterFx SmoothCharacterFx::make(const ValueGroup& G, long long unit_exp, long long pi_val) {
  SmoothCharacterFx c;
  c.unit_mod = G.q - 1;
  c.pi_mod = G.N;
  c.unit_exp = mod(unit_exp, c.unit_mod);
  c.pi_val = mod(pi_val, c.pi_mod);
  return c;
}

SmoothCharacterFx SmoothCharacterFx::operator*(const SmoothCharacterFx& o) const {
  require_compatible(*this, o);
  SmoothCharacterFx c = *this;
  c.unit_exp = mod(unit_exp + o.unit_exp, unit_mod);
  c.pi_val = mod(pi_val + o.pi_val, pi_mod);
  return c;
}

SmoothCharacterFx SmoothCharacterFx::inverse() const {
  SmoothCharacterFx c = *this;
  c.unit_exp = mod(-unit_exp, unit_mod);
  c.pi_val = mod(-pi_val, pi_mod);
  return c;
}

bool SmoothCharacterFx::operator==(const SmoothCharacterFx& o) const {
  require_compatible(*this, o);
  return unit_exp == o.unit_exp && pi_val == o.pi_val;
}

bool SmoothCharacterFx::operator<(const SmoothCharacterFx& o) const {
  return std::tie(unit_mod, pi_mod, unit_exp, pi_val) < std::tie(o.unit_mod, o.pi_mod, o.unit_exp, o.pi_val);
}

SmoothCharacterFx hilbert_character(const SquareClass& c, const LocalField& F, const ValueGroup& G) {
  if (G.N % 2 != 0) throw std::invalid_argument("value group cannot represent -1");
  // A nonsquare unit generates k^x modulo squares, so its symbol decides
  // the unit part; pi decides the rest.
  const long long unit = hilbert(SquareClass::u(), c, F) == -1 ? (G.q - 1) / 2 : 0;
  const long long at_pi = hilbert(SquareClass::pi(), c, F) == -1 ? G.N / 2 : 0;
  return SmoothCharacterFx::make(G, unit, at_pi);
}

SmoothCharacterFx restrict_short_coroot(const GenuineTorusCharacter& sigma, int i) {
  const int n = sigma.rank();
  if (i == n) throw std::invalid_argument("the long coroot section is not a homomorphism");
  if (i < 1 || i > n) throw std::out_of_range("simple root index out of range");
  return sigma.xi[i - 1] * sigma.xi[i].inverse();
}

bool genuine_equal(const GenuineTorusCharacter& a, const GenuineTorusCharacter& b, const LocalField& F) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
  if (a.rank() == 0) return true;
  const ValueGroup G{a.xi[0].unit_mod + 1, a.xi[0].pi_mod};
  const SmoothCharacterFx twist = hilbert_character(a.psi_class * b.psi_class.inverse(), F, G);
  for (int i = 0; i < a.rank(); ++i)
    if (!(b.xi[i] == a.xi[i] * twist)) return false;
  return true;
}

std::map<int, bool> supersingular_flags_from_character(const GenuineTorusCharacter& sigma) {
  std::map<int, bool> flags;
  const int n = sigma.rank();
  for (int i = 1; i < n; ++i) flags[i] = restrict_short_coroot(sigma, i).is_trivial();
  if (n >= 1) flags[n] = false;
  return flags;
}

}  // namespace metasp
