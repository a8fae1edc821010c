#include <doctest.h>

#include <algorithm>
#include <set>

#include "poplab/pop.hpp"

using namespace poplab;

namespace {

Permutation P(const std::string& s) { return parse_permutation(s); }

// Test-side oracle: containment via the generic subsequence counter only
// (count_occurrences never dispatches to the specialized flat tests).
bool contains_oracle(const Pop& pop, const Permutation& p) {
  return count_occurrences(pop, p) > 0;
}

bool naive_separable(const Permutation& p) {
  return !contains_oracle(Pop::classical(P("2413")), p) &&
         !contains_oracle(Pop::classical(P("3142")), p);
}

std::vector<int> block_word(const Block& b) {
  std::vector<int> out;
  for (int v : b.pattern.values()) out.push_back(b.value_lo + v - 1);
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("pop");

TEST_CASE("classical patterns are chains") {
  const Pop chain = Pop::classical(P("321"));
  std::vector<std::pair<int, int>> want{{2, 1}, {3, 1}, {3, 2}};
  auto got = chain.relation_pairs();
  std::sort(got.begin(), got.end());
  CHECK(got == want);
  CHECK(Pop::classical(P("1")).relation_pairs().empty());
  CHECK(Pop::classical(P("12")).relation_pairs() ==
        std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("flat POP shapes") {
  auto got3 = Pop::flat_pj(3).relation_pairs();
  std::sort(got3.begin(), got3.end());
  CHECK(got3 == std::vector<std::pair<int, int>>{{2, 1}, {3, 1}});
  auto gott3 = Pop::flat_ptilde(3).relation_pairs();
  std::sort(gott3.begin(), gott3.end());
  CHECK(gott3 == std::vector<std::pair<int, int>>{{3, 1}, {3, 2}});
  CHECK(Pop::flat_pj(2) == Pop::classical(P("21")));
  CHECK_THROWS_AS(Pop::flat_pj(1), std::invalid_argument);
  CHECK_THROWS_AS(Pop::flat_ptilde(1), std::invalid_argument);

  CHECK(Pop::flat_pj(4).as_flat_pj() == 4);
  CHECK(Pop::flat_ptilde(5).as_flat_ptilde() == 5);
  CHECK(!Pop::classical(P("2413")).as_flat_pj().has_value());
}

TEST_CASE("general poset construction") {
  const Pop pop = Pop::from_relations(3, {{3, 1}});
  CHECK(pop.relation_pairs() == std::vector<std::pair<int, int>>{{3, 1}});
  CHECK_THROWS_AS(Pop::from_relations(2, {{1, 2}, {2, 1}}), std::invalid_argument);
  CHECK_NOTHROW(Pop::from_relations(1, {}));
  // closure: 1<2, 2<3 forces 1<3
  const Pop chain = Pop::from_relations(3, {{1, 2}, {2, 3}});
  CHECK(chain.below(1, 3));
}

TEST_CASE("occurrence counting") {
  CHECK(count_occurrences(Pop::from_relations(3, {{3, 1}}), P("34152")) == 6);
  CHECK(count_occurrences(Pop::flat_pj(4), P("312")) == 0);  // pattern longer than host
  CHECK(count_occurrences(Pop::classical(P("321")), P("123465")) == 0);
}

TEST_CASE("occurrence predicate") {
  CHECK(occurs(Pop::flat_pj(3), P("34152")));
  CHECK_FALSE(occurs(Pop::flat_pj(3), Permutation()));
  CHECK(occurs(Pop::classical(P("2413")), P("2413")));
}

TEST_CASE("avoids_all") {
  CHECK(avoids_all(P("123465"), {Pop::classical(P("321"))}));
  CHECK(avoids_all(Permutation(), {Pop::flat_pj(3), Pop::classical(P("21"))}));
  CHECK_FALSE(avoids_all(P("21"), {Pop::flat_pj(2)}));
}

TEST_CASE("specialized flat tests") {
  // 312: the leading 3 has two smaller entries to its right
  CHECK(occurs_flat_pj(3, P("312")));
  // 231: the final 1 has two larger entries before it, so an occurrence
  // (2,3,1) exists -- frozen from the subsequence oracle
  CHECK(count_occurrences(Pop::flat_ptilde(3), P("231")) == 1);
  CHECK(occurs_flat_ptilde(3, P("231")));
  CHECK_FALSE(occurs_flat_ptilde(3, P("213")));
  CHECK_FALSE(occurs_flat_pj(4, P("312")));  // host shorter than pattern
}

TEST_CASE("specialized flat tests agree with the generic matcher, exhaustive") {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& p : SnRange(n)) {
      for (int k = 2; k <= 6; ++k) {
        CHECK(occurs_flat_pj(k, p) == contains_oracle(Pop::flat_pj(k), p));
        CHECK(occurs_flat_ptilde(k, p) == contains_oracle(Pop::flat_ptilde(k), p));
      }
    }
  }
}

TEST_CASE("chain POP counting equals classical containment counting") {
  // direct classical matcher, independent of the Pop machinery
  auto classical_count = [](const Permutation& pat, const Permutation& host) {
    const int k = pat.size(), n = host.size();
    long count = 0;
    std::vector<int> idx;
    auto rec = [&](auto&& self, int from) -> void {
      const int d = static_cast<int>(idx.size());
      if (d == k) {
        ++count;
        return;
      }
      for (int i = from; i <= n - (k - d); ++i) {
        bool ok = true;
        for (int e = 0; e < d && ok; ++e)
          if ((pat.at(e) < pat.at(d)) != (host.at(idx[static_cast<size_t>(e)]) < host.at(i)))
            ok = false;
        if (!ok) continue;
        idx.push_back(i);
        self(self, i + 1);
        idx.pop_back();
      }
    };
    rec(rec, 0);
    return count;
  };
  std::vector<Permutation> patterns;
  for (int k = 1; k <= 4; ++k)
    for (const auto& pat : SnRange(k)) patterns.push_back(pat);
  for (int n = 0; n <= 7; ++n)
    for (const auto& host : SnRange(n))
      for (const auto& pat : patterns)
        CHECK(count_occurrences(Pop::classical(pat), host) == classical_count(pat, host));
}

TEST_CASE("separability") {
  CHECK_FALSE(is_separable(P("2413")));
  CHECK(is_separable(P("32176854")));
  CHECK(is_separable(Permutation()));
  for (int n = 0; n <= 7; ++n)
    for (const auto& p : SnRange(n)) CHECK(is_separable(p) == naive_separable(p));
}

TEST_CASE("separability is closed under reverse, complement, and sums") {
  std::vector<Permutation> pool;
  for (int n = 0; n <= 4; ++n)
    for (const auto& p : SnRange(n))
      if (is_separable(p)) pool.push_back(p);
  for (const auto& p : pool) {
    CHECK(is_separable(reverse(p)));
    CHECK(is_separable(complement(p)));
    for (const auto& q : pool) {
      CHECK(is_separable(direct_sum(p, q)));
      CHECK(is_separable(skew_sum(p, q)));
    }
  }
}

TEST_CASE("flat-pair avoidance maps through reverse-complement") {
  for (int n = 0; n <= 7; ++n)
    for (const auto& p : SnRange(n)) {
      const Permutation rc = reverse(complement(p));
      for (int j = 3; j <= 5; ++j)
        for (int l = 3; l <= 5; ++l) {
          const bool lhs = !occurs_flat_pj(j, p) && !occurs_flat_ptilde(l, p);
          const bool rhs = !occurs_flat_pj(l, rc) && !occurs_flat_ptilde(j, rc);
          CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("block decomposition of 32176854") {
  const Decomposition d = stankova_decompose(P("32176854"));
  REQUIRE(d.m() == 2);
  CHECK(block_word(d.left[0]) == std::vector<int>{3, 2, 1});
  CHECK(block_word(d.left[1]) == std::vector<int>{7, 6});
  CHECK(d.right[0].empty());
  CHECK(block_word(d.right[1]) == std::vector<int>{5, 4});
}

TEST_CASE("block decomposition corner cases") {
  const Decomposition single = stankova_decompose(P("1"));
  CHECK(single.m() == 1);
  CHECK(single.left[0].empty());
  CHECK(single.right[0].empty());

  const Decomposition two = stankova_decompose(P("21"));
  CHECK(two.m() == 1);
  CHECK(two.left[0].empty());
  CHECK(block_word(two.right[0]) == std::vector<int>{1});

  CHECK_THROWS_AS(stankova_decompose(Permutation()), std::invalid_argument);
  CHECK_THROWS_AS(stankova_decompose(P("2413")), std::invalid_argument);
}

TEST_CASE("decomposition blocks satisfy the interval conditions and rebuild") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : SnRange(n)) {
      if (!is_separable(p)) continue;
      const Decomposition d = stankova_decompose(p);
      REQUIRE(d.m() >= 1);
      CHECK(stankova_reconstruct(d) == p);
      // only L_m and R_1 may be empty
      for (int i = 0; i < d.m(); ++i) {
        if (i + 1 < d.m()) CHECK_FALSE(d.left[static_cast<size_t>(i)].empty());
        if (i > 0) CHECK_FALSE(d.right[static_cast<size_t>(i)].empty());
      }
      // value intervals interleave R_1 < L_1 < R_2 < ... < R_m < L_m
      int prev_hi = 0;
      for (int i = 0; i < d.m(); ++i) {
        for (const Block* b : {&d.right[static_cast<size_t>(i)], &d.left[static_cast<size_t>(i)]}) {
          if (b->empty()) continue;
          CHECK(b->value_lo > prev_hi);
          prev_hi = b->value_hi;
        }
      }
    }
  }
}

TEST_CASE("pop text syntax") {
  CHECK(parse_pop("Pj:4") == Pop::flat_pj(4));
  CHECK(parse_pop("Pt:5") == Pop::flat_ptilde(5));
  CHECK(parse_pop("classical:2413") == Pop::classical(P("2413")));
  CHECK(parse_pop("pop k=3 below=3<1") == Pop::from_relations(3, {{3, 1}}));
  CHECK(parse_pop("pop k=3 below=3<1;2<1") == Pop::flat_pj(3));
  const auto list = parse_pop_list("Pj:4,Pt:4");
  REQUIRE(list.size() == 2);
  CHECK(list[0] == Pop::flat_pj(4));
  CHECK(list[1] == Pop::flat_ptilde(4));
  CHECK_THROWS_AS(parse_pop("nope:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pop("pop k=2 below=1<2;2<1"), std::invalid_argument);
}

TEST_SUITE_END();
