#include "poplab/rational_gf.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace poplab {

namespace {

bool is_constant(const MultiPoly& p, const BigInt& c) {
  return p == MultiPoly::constant(c);
}

}  // namespace

XSeries expand_rational(const RationalGF& gf, int order) {
  if (order < 0) throw std::invalid_argument("negative order");
  if (gf.den.empty()) throw std::invalid_argument("empty denominator");
  std::vector<MultiPoly> num = gf.num, den = gf.den;
  if (is_constant(den[0], -1)) {
    for (auto& c : num) c = -c;
    for (auto& c : den) c = -c;
  }
  if (!is_constant(den[0], 1))
    throw std::invalid_argument("denominator constant term must be +1 or -1");
  XSeries s(order);
  for (int n = 0; n <= order; ++n) {
    MultiPoly acc;
    if (n < static_cast<int>(num.size())) acc = num[static_cast<size_t>(n)];
    for (int k = 1; k <= n && k < static_cast<int>(den.size()); ++k)
      acc -= den[static_cast<size_t>(k)] * s.coeff(n - k);
    s.coeff(n) = std::move(acc);
  }
  return s;
}

RationalGF swap_reverse_complement(const RationalGF& gf) {
  RationalGF out;
  out.num.reserve(gf.num.size());
  out.den.reserve(gf.den.size());
  for (const auto& c : gf.num) out.num.push_back(c.swap_vars('u', 't').swap_vars('v', 's'));
  for (const auto& c : gf.den) out.den.push_back(c.swap_vars('u', 't').swap_vars('v', 's'));
  return out;
}

GFFixtures GFFixtures::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file " + path);
  GFFixtures fx;
  std::vector<MultiPoly>* section = nullptr;
  std::set<std::pair<Monomial, int>> seen;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    if (line.rfind("gf ", 0) == 0) {
      std::string tag, part;
      int j = 0, l = 0;
      ls >> tag >> j >> l >> part;
      if (j < 3 || l < j || l > 5) fail("unsupported pair in header");
      auto& gf = fx.table_[{j, l}];
      if (part == "numerator")
        section = &gf.num;
      else if (part == "denominator")
        section = &gf.den;
      else
        fail("header part must be numerator or denominator");
      if (!section->empty()) fail("duplicate section");
      seen.clear();
      continue;
    }
    if (section == nullptr) fail("term line before any section header");
    std::string coef_tok;
    ls >> coef_tok;
    if (coef_tok.size() < 2 || (coef_tok[0] != '+' && coef_tok[0] != '-'))
      fail("term must start with an explicit sign");
    BigInt coef(coef_tok.substr(1));
    if (coef_tok[0] == '-') coef = -coef;
    Monomial m;
    int xdeg = -1;
    std::string factor;
    int nfac = 0;
    while (ls >> factor) {
      auto caret = factor.find('^');
      if (factor.size() < 3 || caret != 1) fail("bad factor '" + factor + "'");
      const char v = factor[0];
      const int e = std::stoi(factor.substr(2));
      if (e < 0) fail("negative exponent");
      if (v == 'x') {
        if (xdeg >= 0) fail("repeated x factor");
        xdeg = e;
      } else {
        m.e[static_cast<size_t>(var_index(v))] = static_cast<uint16_t>(e);
      }
      ++nfac;
    }
    if (nfac != kNumVars + 1 || xdeg < 0) fail("term must list all of p q u v s t and x");
    if (!seen.insert({m, xdeg}).second) fail("duplicate monomial in section");
    if (static_cast<int>(section->size()) <= xdeg) section->resize(static_cast<size_t>(xdeg) + 1);
    (*section)[static_cast<size_t>(xdeg)].add_term(m, coef);
  }
  if (fx.table_.size() != 6) throw std::runtime_error(path + ": expected the six pairs 3<=j<=l<=5");
  return fx;
}

const GFFixtures& GFFixtures::builtin() {
  static const GFFixtures fx = [] {
    std::string dir = POPLAB_DATA_DIR;
    if (const char* env = std::getenv("POPLAB_DATA_DIR")) dir = env;
    return load(dir + "/theorem_gf.txt");
  }();
  return fx;
}

const RationalGF& GFFixtures::stored(int j, int l) const {
  auto it = table_.find({j, l});
  if (it == table_.end())
    throw std::invalid_argument("no stored generating function for (" + std::to_string(j) + "," +
                                std::to_string(l) + ")");
  return it->second;
}

RationalGF GFFixtures::theorem_gf(int j, int l) const {
  if (j < 3 || j > 5 || l < 3 || l > 5)
    throw std::invalid_argument("supported pairs have 3 <= j, l <= 5");
  if (j <= l) return stored(j, l);
  return swap_reverse_complement(stored(l, j));
}

GFFixtures::Counts GFFixtures::term_counts(int j, int l) const {
  const RationalGF& gf = stored(j, l);
  Counts c;
  for (const auto& p : gf.num) c.num += p.term_count();
  for (const auto& p : gf.den) c.den += p.term_count();
  return c;
}

RationalGF load_theorem_gf(int j, int l) {
  return GFFixtures::builtin().theorem_gf(j, l);
}

}  // namespace poplab
