#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "poplab/bigint.hpp"
#include "poplab/permutation.hpp"

namespace poplab {

// Fixed variable tuple for the joint-statistics ring: p, q track ascents and
// descents; u, v, s, t track the four maxima/minima counts.
inline constexpr int kNumVars = 6;
inline constexpr std::array<char, kNumVars> kVarNames{'p', 'q', 'u', 'v', 's', 't'};

int var_index(char name);  // throws std::invalid_argument on unknown names

struct Monomial {
  std::array<uint16_t, kNumVars> e{};

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Sparse multivariate polynomial with exact integer coefficients. Zero
// coefficients are never stored; equality is structural.
class MultiPoly {
 public:
  MultiPoly() = default;

  static MultiPoly constant(BigInt c);
  static MultiPoly one() { return constant(1); }
  static MultiPoly variable(char name, int exp = 1);
  static MultiPoly term(const Monomial& m, BigInt c);
  // p^asc q^des u^lmax v^rmax s^lmin t^rmin
  static MultiPoly from_stats(const StatVector& s);

  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  const std::map<Monomial, BigInt>& terms() const { return terms_; }
  BigInt coeff(const Monomial& m) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a);

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  // Set one variable to 1 (exponent zeroed, coefficients merged).
  MultiPoly substitute_one(char var) const;
  // Set every variable to 1.
  BigInt coefficient_sum() const;
  // Exchange two variables in every monomial.
  MultiPoly swap_vars(char a, char b) const;

  void add_term(const Monomial& m, const BigInt& c);

  // Terms in descending lexicographic order of the exponent vector,
  // e.g. "p*u^2*v*s*t^2 + q*u*v^2*s^2*t".
  std::string to_string() const;

 private:
  std::map<Monomial, BigInt> terms_;
};

// Truncated power series in x with MultiPoly coefficients. All arithmetic is
// closed at the common truncation order; mixing orders throws.
class XSeries {
 public:
  XSeries() = default;
  explicit XSeries(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const MultiPoly& coeff(int n) const { return coeffs_[static_cast<size_t>(n)]; }
  MultiPoly& coeff(int n) { return coeffs_[static_cast<size_t>(n)]; }

  friend XSeries operator+(const XSeries& a, const XSeries& b);
  friend XSeries operator*(const XSeries& a, const XSeries& b);
  friend bool operator==(const XSeries&, const XSeries&) = default;

  XSeries substitute_one(char var) const;
  XSeries swap_vars(char a, char b) const;
  // Coefficient sums per power of x (the underlying counting sequence).
  std::vector<BigInt> counting_sequence() const;

  std::string to_string() const;

 private:
  std::vector<MultiPoly> coeffs_;
};

}  // namespace poplab
