#include "poplab/multipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace poplab {

int var_index(char name) {
  for (int i = 0; i < kNumVars; ++i)
    if (kVarNames[static_cast<size_t>(i)] == name) return i;
  throw std::invalid_argument(std::string("unknown variable '") + name + "'");
}

MultiPoly MultiPoly::constant(BigInt c) {
  MultiPoly p;
  if (c != 0) p.terms_.emplace(Monomial{}, std::move(c));
  return p;
}

MultiPoly MultiPoly::variable(char name, int exp) {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  Monomial m;
  m.e[static_cast<size_t>(var_index(name))] = static_cast<uint16_t>(exp);
  return term(m, 1);
}

MultiPoly MultiPoly::term(const Monomial& m, BigInt c) {
  MultiPoly p;
  if (c != 0) p.terms_.emplace(m, std::move(c));
  return p;
}

MultiPoly MultiPoly::from_stats(const StatVector& s) {
  Monomial m;
  m.e = {static_cast<uint16_t>(s.asc),  static_cast<uint16_t>(s.des),
         static_cast<uint16_t>(s.lmax), static_cast<uint16_t>(s.rmax),
         static_cast<uint16_t>(s.lmin), static_cast<uint16_t>(s.rmin)};
  return term(m, 1);
}

BigInt MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      for (int i = 0; i < kNumVars; ++i)
        m.e[static_cast<size_t>(i)] = static_cast<uint16_t>(ma.e[static_cast<size_t>(i)] +
                                                            mb.e[static_cast<size_t>(i)]);
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly out;
  for (const auto& [m, c] : a.terms()) out.add_term(m, -c);
  return out;
}

MultiPoly MultiPoly::substitute_one(char var) const {
  const int idx = var_index(var);
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    mm.e[static_cast<size_t>(idx)] = 0;
    out.add_term(mm, c);
  }
  return out;
}

BigInt MultiPoly::coefficient_sum() const {
  BigInt s = 0;
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

MultiPoly MultiPoly::swap_vars(char a, char b) const {
  const size_t ia = static_cast<size_t>(var_index(a));
  const size_t ib = static_cast<size_t>(var_index(b));
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    std::swap(mm.e[ia], mm.e[ib]);
    out.add_term(mm, c);
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    BigInt a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_var = false;
    for (int i = 0; i < kNumVars; ++i) has_var = has_var || m.e[static_cast<size_t>(i)] != 0;
    if (a != 1 || !has_var) {
      out << a.str();
      if (has_var) out << "*";
    }
    bool first_var = true;
    for (int i = 0; i < kNumVars; ++i) {
      const int e = m.e[static_cast<size_t>(i)];
      if (e == 0) continue;
      if (!first_var) out << "*";
      first_var = false;
      out << kVarNames[static_cast<size_t>(i)];
      if (e > 1) out << "^" << e;
    }
  }
  return out.str();
}

XSeries::XSeries(int order) {
  if (order < 0) throw std::invalid_argument("negative series order");
  coeffs_.resize(static_cast<size_t>(order) + 1);
}

namespace {

void check_same_order(const XSeries& a, const XSeries& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("series truncation orders differ: " +
                                std::to_string(a.order()) + " vs " + std::to_string(b.order()));
}

}  // namespace

XSeries operator+(const XSeries& a, const XSeries& b) {
  check_same_order(a, b);
  XSeries out(a.order());
  for (int n = 0; n <= a.order(); ++n) out.coeff(n) = a.coeff(n) + b.coeff(n);
  return out;
}

XSeries operator*(const XSeries& a, const XSeries& b) {
  check_same_order(a, b);
  XSeries out(a.order());
  for (int n = 0; n <= a.order(); ++n)
    for (int k = 0; k <= n; ++k) out.coeff(n) += a.coeff(k) * b.coeff(n - k);
  return out;
}

XSeries XSeries::substitute_one(char var) const {
  XSeries out(order());
  for (int n = 0; n <= order(); ++n) out.coeff(n) = coeff(n).substitute_one(var);
  return out;
}

XSeries XSeries::swap_vars(char a, char b) const {
  XSeries out(order());
  for (int n = 0; n <= order(); ++n) out.coeff(n) = coeff(n).swap_vars(a, b);
  return out;
}

std::vector<BigInt> XSeries::counting_sequence() const {
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.coefficient_sum());
  return out;
}

std::string XSeries::to_string() const {
  std::ostringstream out;
  for (int n = 0; n <= order(); ++n) {
    if (n) out << " + ";
    out << "(" << coeff(n).to_string() << ")*x^" << n;
  }
  return out.str();
}

}  // namespace poplab
