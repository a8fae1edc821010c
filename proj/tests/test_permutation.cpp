#include <doctest.h>

#include <algorithm>

#include "poplab/permutation.hpp"

using namespace poplab;

namespace {

Permutation P(const std::string& s) { return parse_permutation(s); }

std::vector<Permutation> all_of_size(int n) {
  std::vector<Permutation> out;
  for (const auto& p : SnRange(n)) out.push_back(p);
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("permutation");

TEST_CASE("construction validates bijections") {
  CHECK(Permutation({4, 2, 3, 1, 6, 5}) == P("423165"));
  CHECK(Permutation().size() == 0);
  CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
}

TEST_CASE("reverse and complement") {
  CHECK(reverse(P("423165")) == P("561324"));
  CHECK(reverse(Permutation()) == Permutation());
  CHECK(reverse(P("1")) == P("1"));
  CHECK(complement(P("423165")) == P("354612"));
  CHECK(complement(Permutation()) == Permutation());
  CHECK(complement(P("12")) == P("21"));
}

TEST_CASE("direct and skew sums") {
  CHECK(direct_sum(P("231"), P("312")) == P("231645"));
  CHECK(direct_sum(Permutation(), P("312")) == P("312"));
  CHECK(direct_sum(P("1"), P("1")) == P("12"));
  CHECK(skew_sum(P("231"), P("312")) == P("564312"));
  CHECK(skew_sum(Permutation(), P("312")) == P("312"));
  CHECK(skew_sum(P("1"), P("1")) == P("21"));
}

TEST_CASE("statistics") {
  CHECK(stats(P("31452")) == StatVector{2, 2, 3, 2, 2, 2});
  CHECK(stats(Permutation()) == StatVector{});
  CHECK(stats(P("1")) == StatVector{0, 0, 1, 1, 1, 1});
}

TEST_CASE("standardize") {
  CHECK(standardize({4, 1, 5}) == P("213"));
  CHECK(standardize({7}) == P("1"));
  CHECK(standardize({3, 4, 1}) == P("231"));
  CHECK(standardize({}) == Permutation());
  CHECK_THROWS_AS(standardize({2, 2}), std::invalid_argument);
}

TEST_CASE("permutation stream is lexicographic and complete") {
  CHECK(all_of_size(0) == std::vector<Permutation>{Permutation()});
  CHECK(all_of_size(2) == std::vector<Permutation>{P("12"), P("21")});

  auto s4 = all_of_size(4);
  CHECK(s4.size() == 24);
  CHECK(std::is_sorted(s4.begin(), s4.end()));
  CHECK(std::adjacent_find(s4.begin(), s4.end()) == s4.end());

  CHECK_THROWS_AS(SnRange(13), std::invalid_argument);
  CHECK_NOTHROW(SnRange(13, 14));  // explicit cap raise
}

TEST_CASE("symmetry laws, exhaustive to n = 7") {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& p : SnRange(n)) {
      CHECK(reverse(reverse(p)) == p);
      CHECK(complement(complement(p)) == p);
      CHECK(reverse(complement(p)) == complement(reverse(p)));

      const StatVector s = stats(p);
      CHECK(s.asc + s.des == std::max(n - 1, 0));
      if (n >= 1) {
        for (int v : {s.lmax, s.rmax, s.lmin, s.rmin}) {
          CHECK(v >= 1);
          CHECK(v <= n);
        }
      }

      // reverse-complement exchanges lmax<->rmin and lmin<->rmax
      const StatVector rc = stats(reverse(complement(p)));
      CHECK(rc.asc == s.asc);
      CHECK(rc.des == s.des);
      CHECK(rc.lmax == s.rmin);
      CHECK(rc.rmin == s.lmax);
      CHECK(rc.lmin == s.rmax);
      CHECK(rc.rmax == s.lmin);

      // complement exchanges asc<->des, lmax<->lmin, rmax<->rmin
      const StatVector c = stats(complement(p));
      CHECK(c.asc == s.des);
      CHECK(c.des == s.asc);
      CHECK(c.lmax == s.lmin);
      CHECK(c.lmin == s.lmax);
      CHECK(c.rmax == s.rmin);
      CHECK(c.rmin == s.rmax);
    }
  }
}

TEST_CASE("sum associativity and identity") {
  std::vector<Permutation> pool;
  for (int n = 0; n <= 3; ++n)
    for (const auto& p : SnRange(n)) pool.push_back(p);
  for (const auto& a : pool) {
    CHECK(direct_sum(a, Permutation()) == a);
    CHECK(direct_sum(Permutation(), a) == a);
    CHECK(skew_sum(a, Permutation()) == a);
    CHECK(skew_sum(Permutation(), a) == a);
    for (const auto& b : pool)
      for (const auto& c : pool) {
        CHECK(direct_sum(direct_sum(a, b), c) == direct_sum(a, direct_sum(b, c)));
        CHECK(skew_sum(skew_sum(a, b), c) == skew_sum(a, skew_sum(b, c)));
      }
  }
}

TEST_CASE("text round-trip") {
  CHECK(to_string(P("423165")) == "423165");
  CHECK(to_string(Permutation()) == "e");
  CHECK(parse_permutation("4,2,3,1,6,5") == P("423165"));
  CHECK_THROWS_AS(parse_permutation("40a"), std::invalid_argument);
}

TEST_SUITE_END();
