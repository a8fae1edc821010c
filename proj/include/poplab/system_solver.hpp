#pragma once

#include <map>
#include <tuple>
#include <utility>

#include "poplab/multipoly.hpp"
#include "poplab/rational_gf.hpp"

namespace poplab {

// The small fixed coefficients feeding the functional-equation system for the
// pair (j, l): joint-distribution polynomials of single-POP separable classes
// at lengths <= 3, always computed by brute-force enumeration.
//
//   u[(i,a)] : [x^a] over separable avoiders of P_{j-i}
//   v[(i,a)] : [x^i] over separable avoiders of Pt_{l-a-1}
//   w[i]     : [x^i] over separable avoiders of Pt_{l-1}
//   x[h]     : [x^h] over all separable permutations
//   y[(i,h,m)] : [x^{i-h}] over separable avoiders of Pt_{l-m-h-1}
//   z[(i,h,m)] : [x^m] over separable avoiders of P_{j-(i-h)}
struct SmallCoefficients {
  int j = 0;
  int l = 0;
  std::map<std::pair<int, int>, MultiPoly> u;
  std::map<std::pair<int, int>, MultiPoly> v;
  std::map<int, MultiPoly> w;
  std::map<int, MultiPoly> x;
  std::map<std::tuple<int, int, int>, MultiPoly> y;
  std::map<std::tuple<int, int, int>, MultiPoly> z;
};

SmallCoefficients small_coefficients(int j, int l);

// The class generating function F for the pair (j, l), assembled from the
// functional-equation system. Classifying class members by how many entries
// sit to the right of the maximum (and which side of it holds n-1) gives
//
//   F = 1 + A(v) + B(v) * (F|_{v=1} - 1)
//
// with A, B polynomials in x built from the small coefficients above.
// Specializing v = 1 solves the linear relation exactly, so
// F = [(1 + A)(1 - B|_{v=1}) + B * A|_{v=1}] / (1 - B|_{v=1}).
RationalGF system_gf(int j, int l);

// Series expansion of system_gf to the requested order. Requires 3 <= j, l <= 5.
XSeries solve_system(int j, int l, int order);

}  // namespace poplab
