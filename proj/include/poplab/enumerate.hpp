#pragma once

#include <stdexcept>
#include <vector>

#include "poplab/multipoly.hpp"
#include "poplab/pop.hpp"

namespace poplab {

struct AvoiderQuery {
  int n = 0;
  std::vector<Pop> pops;
  bool separable_only = false;
};

struct EnumOptions {
  // 0 = use the machine's available parallelism; 1 = sequential reference path.
  int jobs = 0;
  // 0 = module defaults (n <= 10 for distributions, n <= 12 for counting),
  // raised by POPLAB_MAX_N or an explicit value here.
  int max_n = 0;
};

struct cap_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kDistributionCap = 10;
inline constexpr int kCountingCap = 12;

// Exact cardinality of the avoider class. Enumeration prunes prefixes that
// already contain a queried pattern (containment is monotone under
// extension), so restrictive queries stay cheap well past n = 10.
BigInt count_avoiders(const AvoiderQuery& q, const EnumOptions& opt = {});

// Sum of p^asc q^des u^lmax v^rmax s^lmin t^rmin over the class members: the
// coefficient of x^n in the class generating function.
MultiPoly distribution(const AvoiderQuery& q, const EnumOptions& opt = {});

// Truncated series of distributions for n = 0..n_max.
XSeries series_bruteforce(const std::vector<Pop>& pops, bool separable_only, int n_max,
                          const EnumOptions& opt = {});

// The class members themselves, in lexicographic order.
std::vector<Permutation> list_avoiders(const AvoiderQuery& q, const EnumOptions& opt = {});

}  // namespace poplab
