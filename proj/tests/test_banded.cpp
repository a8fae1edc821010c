#include <doctest.h>

#include "poplab/banded.hpp"
#include "poplab/permutation.hpp"

using namespace poplab;

namespace {

// Test-side oracle: filter the full permutation stream by the window.
BigInt window_filter_count(int n, BandedSpec spec) {
  BigInt count = 0;
  for (const auto& p : SnRange(n)) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const int d = p.at(i) - (i + 1);
      if (!(-spec.a < d && d < spec.b)) ok = false;
    }
    if (ok) ++count;
  }
  return count;
}

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("banded");

TEST_CASE("window counting examples") {
  CHECK(banded_count(5, {2, 2}) == 8);
  for (int n = 0; n <= 8; ++n)
    for (int b = 1; b <= 4; ++b) CHECK(banded_count(n, {1, b}) == 1);
  CHECK(banded_count(4, {3, 3}) == window_filter_count(4, {3, 3}));
}

TEST_CASE("DP equals the exhaustive filter, n <= 8, slacks <= 4") {
  for (int n = 0; n <= 8; ++n)
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; b <= 4; ++b)
        CHECK(banded_count(n, {a, b}) == window_filter_count(n, {a, b}));
}

TEST_CASE("window symmetry") {
  for (int n = 0; n <= 10; ++n)
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; b <= 4; ++b)
        CHECK(banded_count(n, {a, b}) == banded_count(n, {b, a}));
}

TEST_CASE("sequences") {
  CHECK(banded_sequence({2, 2}, 7) == ints({1, 1, 2, 3, 5, 8, 13, 21}));
  CHECK(banded_sequence({2, 3}, 7) == ints({1, 1, 2, 4, 7, 13, 24, 44}));
  std::vector<BigInt> want;
  for (int n = 0; n <= 6; ++n) want.push_back(window_filter_count(n, {3, 3}));
  CHECK(banded_sequence({3, 3}, 6) == want);
}

TEST_CASE("pop pair to window mapping") {
  CHECK(BandedSpec::from_pop_pair(4, 3) == BandedSpec{2, 3});
  CHECK(BandedSpec::from_pop_pair(3, 5) == BandedSpec{4, 2});
}

TEST_CASE("k-step Fibonacci") {
  CHECK(kfib(2, 7) == 13);
  for (int k = 2; k <= 6; ++k) {
    CHECK(kfib(k, 0) == 0);
    CHECK(kfib(k, -3) == 0);
    CHECK(kfib(k, 1) == 1);
  }
  CHECK(kfib(3, 5) == 7);
  CHECK_THROWS_AS(kfib(1, 5), std::invalid_argument);
  // classical Fibonacci prefix
  const std::vector<long> fib{0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
  for (int n = 0; n <= 10; ++n) CHECK(kfib(2, n) == fib[static_cast<size_t>(n)]);
  // window counts match the k-step values straight from the recurrence
  for (int j = 3; j <= 6; ++j)
    for (int n = 0; n <= 12; ++n)
      CHECK(banded_count(n, BandedSpec::from_pop_pair(j, 3)) == kfib(j - 1, n + 1));
}

TEST_CASE("recurrence discovery") {
  const Recurrence fib = find_recurrence(ints({1, 1, 2, 3, 5, 8, 13, 21, 34, 55}));
  CHECK(fib.order() == 2);
  CHECK(fib.coeffs == std::vector<BigRational>{1, 1});
  CHECK(fib.denominator_string() == "1 - x - x^2");

  const Recurrence constant = find_recurrence(ints({1, 1, 1, 1, 1, 1}));
  CHECK(constant.order() == 1);
  CHECK(constant.coeffs == std::vector<BigRational>{1});
  CHECK(constant.denominator_string() == "1 - x");

  const Recurrence geometric = find_recurrence(ints({1, 2, 4, 8, 16, 32}));
  CHECK(geometric.order() == 1);
  CHECK(geometric.coeffs == std::vector<BigRational>{2});

  const Recurrence tribonacci = find_recurrence(banded_sequence({2, 3}, 16));
  CHECK(tribonacci.order() == 3);
  CHECK(tribonacci.coeffs == std::vector<BigRational>{1, 1, 1});
}

TEST_CASE("recurrence discovery is stable under longer prefixes") {
  const Recurrence shorter = find_recurrence(banded_sequence({2, 2}, 11));
  const Recurrence longer = find_recurrence(banded_sequence({2, 2}, 16));
  CHECK(shorter == longer);
}

TEST_CASE("recurrence discovery failures") {
  CHECK_THROWS_AS(find_recurrence(ints({1, 2, 3})), no_recurrence);
  // factorials satisfy no constant-coefficient linear recurrence
  CHECK_THROWS_AS(find_recurrence(ints({1, 1, 2, 6, 24, 120, 720, 5040, 40320})), no_recurrence);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(banded_count(-1, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(banded_count(4, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(banded_sequence({2, 2}, -1), std::invalid_argument);
}

TEST_SUITE_END();
