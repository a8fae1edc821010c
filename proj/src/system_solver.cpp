#include "poplab/system_solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "poplab/enumerate.hpp"

namespace poplab {

namespace {

enum class FlatKind { none, pj, ptilde };

// [x^n] of the separable class avoiding one flat POP (or nothing), by direct
// enumeration. All system uses have n <= 3.
MultiPoly sep_class_coeff(FlatKind kind, int param, int n) {
  AvoiderQuery q;
  q.n = n;
  q.separable_only = true;
  if (kind == FlatKind::pj) q.pops.push_back(Pop::flat_pj(param));
  if (kind == FlatKind::ptilde) q.pops.push_back(Pop::flat_ptilde(param));
  return distribution(q, EnumOptions{1, 0});
}

MultiPoly mono(const char* vars) {
  MultiPoly out = MultiPoly::one();
  for (const char* c = vars; *c; ++c) out = out * MultiPoly::variable(*c);
  return out;
}

MultiPoly sub1(MultiPoly p, const char* vars) {
  for (const char* c = vars; *c; ++c) p = p.substitute_one(*c);
  return p;
}

using XPoly = std::vector<MultiPoly>;  // x-degree indexed, MultiPoly coefficients

void add_at(XPoly& p, int xdeg, const MultiPoly& c) {
  if (static_cast<int>(p.size()) <= xdeg) p.resize(static_cast<size_t>(xdeg) + 1);
  p[static_cast<size_t>(xdeg)] += c;
}

XPoly mul(const XPoly& a, const XPoly& b) {
  XPoly out;
  if (a.empty() || b.empty()) return out;
  out.resize(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k) out[i + k] += a[i] * b[k];
  return out;
}

XPoly add(XPoly a, const XPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

XPoly substitute_one(XPoly p, char var) {
  for (auto& c : p) c = c.substitute_one(var);
  return p;
}

XPoly negate(XPoly p) {
  for (auto& c : p) c = -c;
  return p;
}

void check_pair(int j, int l) {
  if (j < 3 || j > 5 || l < 3 || l > 5)
    throw std::invalid_argument("the system covers 3 <= j, l <= 5");
}

// Known terms A and the multipliers B of (F|_{v=1} - 1), per x power.
void assemble(int j, int l, XPoly& A, XPoly& B) {
  add_at(A, 1, mono("uvst"));
  add_at(B, 1, mono("puvt"));
  for (int i = 1; i <= j - 2; ++i) {
    // n-1 left of n, the i entries right of n form one block
    for (int a = 1; a <= l - 3; ++a) {
      const MultiPoly ua = sep_class_coeff(FlatKind::pj, j - i, a);
      const MultiPoly vi = sep_class_coeff(FlatKind::ptilde, l - a - 1, i);
      add_at(A, 1 + a + i, mono("pquv") * sub1(ua, "vt") * sub1(vi, "u"));
      add_at(B, 1 + a + i, mono("pquv") * MultiPoly::variable('p') * sub1(ua, "vst") * sub1(vi, "us"));
    }
    // n-1 right of n, all i right entries below one block
    const MultiPoly wi = sep_class_coeff(FlatKind::ptilde, l - 1, i);
    add_at(A, 1 + i, mono("quvs") * sub1(wi, "u"));
    add_at(B, 1 + i, mono("pquv") * sub1(wi, "us"));
    // n-1 right of n, split blocks around a middle descent
    for (int h = 1; h <= std::min(i - 1, l - 4); ++h) {
      const MultiPoly xh = sep_class_coeff(FlatKind::none, 0, h);
      for (int m = 1; m <= l - h - 3; ++m) {
        const MultiPoly zm = sep_class_coeff(FlatKind::pj, j - (i - h), m);
        const MultiPoly yih = sep_class_coeff(FlatKind::ptilde, l - m - h - 1, i - h);
        const MultiPoly xf = sub1(xh, "ust");
        add_at(A, 1 + i + m, mono("pquv") * MultiPoly::variable('q') * xf * sub1(zm, "vt") * sub1(yih, "u"));
        add_at(B, 1 + i + m,
               mono("pquv") * mono("pq") * xf * sub1(zm, "vst") * sub1(yih, "us"));
      }
    }
  }
}

}  // namespace

SmallCoefficients small_coefficients(int j, int l) {
  check_pair(j, l);
  SmallCoefficients sc;
  sc.j = j;
  sc.l = l;
  for (int i = 1; i <= j - 2; ++i) {
    for (int a = 1; a <= l - 3; ++a) {
      sc.u[{i, a}] = sep_class_coeff(FlatKind::pj, j - i, a);
      sc.v[{i, a}] = sep_class_coeff(FlatKind::ptilde, l - a - 1, i);
    }
    sc.w[i] = sep_class_coeff(FlatKind::ptilde, l - 1, i);
    for (int h = 1; h <= std::min(i - 1, l - 4); ++h) {
      sc.x[h] = sep_class_coeff(FlatKind::none, 0, h);
      for (int m = 1; m <= l - h - 3; ++m) {
        sc.y[{i, h, m}] = sep_class_coeff(FlatKind::ptilde, l - m - h - 1, i - h);
        sc.z[{i, h, m}] = sep_class_coeff(FlatKind::pj, j - (i - h), m);
      }
    }
  }
  return sc;
}

RationalGF system_gf(int j, int l) {
  check_pair(j, l);
  XPoly A, B;
  assemble(j, l, A, B);
  const XPoly A1 = substitute_one(A, 'v');
  const XPoly B1 = substitute_one(B, 'v');

  XPoly one_minus_B1 = add(XPoly{MultiPoly::one()}, negate(B1));
  XPoly one_plus_A = add(XPoly{MultiPoly::one()}, A);

  RationalGF gf;
  gf.num = add(mul(one_plus_A, one_minus_B1), mul(B, A1));
  gf.den = one_minus_B1;
  return gf;
}

XSeries solve_system(int j, int l, int order) {
  return expand_rational(system_gf(j, l), order);
}

}  // namespace poplab
