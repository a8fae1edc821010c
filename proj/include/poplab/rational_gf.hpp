#pragma once

#include <map>
#include <string>
#include <vector>

#include "poplab/multipoly.hpp"

namespace poplab {

// A rational generating function in x whose coefficients live in the
// six-variable statistics ring. num[k] / den[k] is the MultiPoly coefficient
// of x^k. Expansion requires den[0] to be the constant +1 or -1.
struct RationalGF {
  std::vector<MultiPoly> num;
  std::vector<MultiPoly> den;

  friend bool operator==(const RationalGF&, const RationalGF&) = default;
};

// Unique series S with S * den = num (mod x^{order+1}). A global sign flip is
// applied first when den[0] = -1, so the reported series is the actual value
// of num/den.
XSeries expand_rational(const RationalGF& gf, int order);

// The reverse-complement substitution u<->t, s<->v applied coefficient-wise:
// carries the class of the pair (j, l) to the class of (l, j).
RationalGF swap_reverse_complement(const RationalGF& gf);

// The transcribed closed-form generating functions, one numerator/denominator
// pair per POP pair (j, l) with 3 <= j <= l <= 5, loaded from the reviewed
// fixture file. Term lines look like
//   +3 p^2 q^2 u^2 v^0 s^0 t^1 x^4
// under a "gf <j> <l> numerator|denominator" header; duplicate monomials in a
// section are rejected.
class GFFixtures {
 public:
  static GFFixtures load(const std::string& path);
  // Compiled-in data directory, overridable with POPLAB_DATA_DIR.
  static const GFFixtures& builtin();

  // Stored pairs only (3 <= j <= l <= 5).
  const RationalGF& stored(int j, int l) const;

  // Any 3 <= j, l <= 5; for j > l the stored (l, j) entry is carried over by
  // swap_reverse_complement.
  RationalGF theorem_gf(int j, int l) const;

  struct Counts {
    int num = 0;
    int den = 0;
  };
  Counts term_counts(int j, int l) const;

 private:
  std::map<std::pair<int, int>, RationalGF> table_;
};

// Convenience over GFFixtures::builtin().
RationalGF load_theorem_gf(int j, int l);

}  // namespace poplab
