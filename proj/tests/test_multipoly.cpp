#include <doctest.h>

#include <cstdint>

#include "poplab/json_io.hpp"
#include "poplab/multipoly.hpp"

using namespace poplab;

namespace {

MultiPoly V(char c, int e = 1) { return MultiPoly::variable(c, e); }

// small deterministic polynomial generator for ring-law checks
struct Lcg {
  uint64_t state = 0x2545F4914F6CDD1Dull;
  uint32_t next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<uint32_t>(state >> 33);
  }
};

MultiPoly random_poly(Lcg& rng) {
  MultiPoly p;
  const int terms = 1 + static_cast<int>(rng.next() % 4);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (int i = 0; i < kNumVars; ++i) m.e[static_cast<size_t>(i)] = static_cast<uint16_t>(rng.next() % 3);
    p.add_term(m, static_cast<int>(rng.next() % 9) - 4);
  }
  return p;
}

}  // namespace

TEST_SUITE_BEGIN("multipoly");

TEST_CASE("basic arithmetic") {
  const MultiPoly uvst = V('u') * V('v') * V('s') * V('t');
  CHECK(uvst * uvst == V('u', 2) * V('v', 2) * V('s', 2) * V('t', 2));
  CHECK(uvst + MultiPoly() == uvst);
  CHECK((uvst - uvst).is_zero());
}

TEST_CASE("ring laws on deterministic random polynomials") {
  Lcg rng;
  for (int round = 0; round < 50; ++round) {
    const MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
  }
}

TEST_CASE("substitute one variable") {
  const MultiPoly p1 = V('p') * V('u', 2) * V('v') * V('s') * V('t', 2);
  CHECK(p1.substitute_one('v') == V('p') * V('u', 2) * V('s') * V('t', 2));
  const MultiPoly p2 = V('q') * V('u') * V('v', 2) * V('s', 2) * V('t');
  CHECK(p2.substitute_one('v') == V('q') * V('u') * V('s', 2) * V('t'));
  CHECK(MultiPoly::one().substitute_one('v') == MultiPoly::one());
  // terms differing only in the killed variable merge
  const MultiPoly m = (V('v') + MultiPoly::one()) * V('u');
  CHECK(m.substitute_one('v') == MultiPoly::constant(2) * V('u'));
  CHECK_THROWS_AS(m.substitute_one('z'), std::invalid_argument);
}

TEST_CASE("stat monomials and evaluation") {
  const StatVector s{1, 0, 2, 1, 1, 2};  // stats of 12
  CHECK(MultiPoly::from_stats(s) == V('p') * V('u', 2) * V('v') * V('s') * V('t', 2));
  const MultiPoly p = MultiPoly::from_stats(s) + MultiPoly::from_stats({0, 1, 1, 2, 2, 1});
  CHECK(p.coefficient_sum() == 2);
  CHECK(p.swap_vars('u', 't').swap_vars('u', 't') == p);
}

TEST_CASE("canonical printing, leading term first") {
  const MultiPoly p = V('p') * V('u', 2) * V('v') * V('s') * V('t', 2) +
                      V('q') * V('u') * V('v', 2) * V('s', 2) * V('t');
  CHECK(p.to_string() == "p*u^2*v*s*t^2 + q*u*v^2*s^2*t");
  CHECK(MultiPoly().to_string() == "0");
  CHECK((MultiPoly::constant(-2) * V('p') - V('q')).to_string() == "-2*p - q");
}

TEST_CASE("series arithmetic truncates uniformly") {
  XSeries one_plus_x(2), one_minus_x(2);
  one_plus_x.coeff(0) = MultiPoly::one();
  one_plus_x.coeff(1) = MultiPoly::one();
  one_minus_x.coeff(0) = MultiPoly::one();
  one_minus_x.coeff(1) = -MultiPoly::one();
  const XSeries prod = one_plus_x * one_minus_x;
  CHECK(prod.coeff(0) == MultiPoly::one());
  CHECK(prod.coeff(1).is_zero());
  CHECK(prod.coeff(2) == -MultiPoly::one());

  XSeries other_order(3);
  CHECK_THROWS_AS((void)(one_plus_x * other_order), std::invalid_argument);
  CHECK_THROWS_AS((void)(one_plus_x + other_order), std::invalid_argument);
}

TEST_CASE("json round-trip") {
  Lcg rng;
  for (int round = 0; round < 20; ++round) {
    const MultiPoly p = random_poly(rng);
    CHECK(multipoly_from_json(multipoly_to_json(p)) == p);
  }
  XSeries s(3);
  s.coeff(0) = MultiPoly::one();
  s.coeff(2) = random_poly(rng);
  CHECK(xseries_from_json(xseries_to_json(s)) == s);

  const std::vector<BigInt> seq{BigInt(1), BigInt("123456789012345678901234567890"), BigInt(-7)};
  CHECK(sequence_from_json(sequence_to_json(seq)) == seq);
}

TEST_SUITE_END();
