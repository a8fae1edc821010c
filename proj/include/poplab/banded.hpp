#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "poplab/bigint.hpp"

namespace poplab {

// Displacement window: -a < pi_i - i < b at every position. The flat-POP pair
// (j, l) corresponds to (a, b) = (l-1, j-1), since
// -l+2 <= pi_i - i <= j-2  <=>  -(l-1) < pi_i - i < j-1.
struct BandedSpec {
  int a = 1;  // lower slack, >= 1
  int b = 1;  // upper slack, >= 1

  static BandedSpec from_pop_pair(int j, int l) { return {l - 1, j - 1}; }
  int window_width() const { return a + b - 1; }
  friend bool operator==(const BandedSpec&, const BandedSpec&) = default;
};

// Exact count of permutations of {1..n} inside the window, by a left-to-right
// DP whose state is the set of already-used values in the sliding window
// (state space <= 2^(a+b-2)).
BigInt banded_count(int n, BandedSpec spec);

// [banded_count(0), ..., banded_count(n_max)]
std::vector<BigInt> banded_sequence(BandedSpec spec, int n_max);

// k-step Fibonacci numbers: F_1 = 1, F_r = 0 for r <= 0, and
// F_n = F_{n-1} + ... + F_{n-k}. Requires k >= 2.
BigInt kfib(int k, long long n);

// Constant-coefficient linear recurrence a_n = sum_{i=1..order} coeffs[i-1] * a_{n-i},
// reported against the normalized denominator 1 - c_1 x - ... - c_d x^d.
struct Recurrence {
  std::vector<BigRational> coeffs;

  int order() const { return static_cast<int>(coeffs.size()); }
  std::string denominator_string() const;
  friend bool operator==(const Recurrence&, const Recurrence&) = default;
};

struct no_recurrence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Minimal-order recurrence fitting the whole sequence, found by exact
// Berlekamp-Massey over the rationals on all but the last two terms and
// validated on those held-out terms. Throws no_recurrence when nothing of
// order <= length/2 - 1 fits.
Recurrence find_recurrence(const std::vector<BigInt>& seq);

}  // namespace poplab
