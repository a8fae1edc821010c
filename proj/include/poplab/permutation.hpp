#pragma once

#include <compare>
#include <string>
#include <vector>

namespace poplab {

// The six classical statistics of a permutation. For n >= 1,
// asc + des = n - 1 and each of the maxima/minima counts lies in [1, n];
// the empty permutation has all six equal to 0.
struct StatVector {
  int asc = 0;
  int des = 0;
  int lmax = 0;  // left-to-right maxima
  int rmax = 0;  // right-to-left maxima
  int lmin = 0;  // left-to-right minima
  int rmin = 0;  // right-to-left minima

  friend bool operator==(const StatVector&, const StatVector&) = default;
};

// A permutation of {1..n} in one-line notation. n == 0 is the valid empty
// permutation. Immutable after construction.
class Permutation {
 public:
  Permutation() = default;

  // Validates that `one_line` is a bijection onto {1..n}; throws
  // std::invalid_argument otherwise.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(vals_.size()); }
  bool empty() const { return vals_.empty(); }

  // 0-based position, 1-based value.
  int at(int pos) const { return vals_[static_cast<size_t>(pos)]; }
  const std::vector<int>& values() const { return vals_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation&,
                                          const Permutation&) = default;

 private:
  std::vector<int> vals_;
};

Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);

// (a (+) b): b shifted above a, appended after it.
Permutation direct_sum(const Permutation& a, const Permutation& b);
// (a (-) b): a shifted above b, b appended after it.
Permutation skew_sum(const Permutation& a, const Permutation& b);

StatVector stats(const Permutation& p);

// Order-isomorphic reduction of a word with distinct entries.
Permutation standardize(const std::vector<int>& word);

std::string to_string(const Permutation& p);

// Accepts the compact digit form ("423165", n <= 9) or a comma/space
// separated list ("4,2,3,1,6,5").
Permutation parse_permutation(const std::string& text);

// Guard against accidental factorial blowup; callers may raise it explicitly.
inline constexpr int kIterSnDefaultCap = 12;

// All n! permutations of {1..n} in lexicographic order. Usable in range-for;
// the empty permutation is the single element for n == 0.
class SnRange {
 public:
  explicit SnRange(int n, int cap = kIterSnDefaultCap);

  class iterator {
   public:
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;

    iterator() : done_(true) {}
    explicit iterator(int n);

    const Permutation& operator*() const { return cur_; }
    iterator& operator++();
    iterator operator++(int) {
      auto c = *this;
      ++*this;
      return c;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_;
    }

   private:
    Permutation cur_;
    bool done_ = false;
  };

  iterator begin() const { return iterator(n_); }
  iterator end() const { return iterator(); }
  int n() const { return n_; }

 private:
  int n_;
};

}  // namespace poplab
