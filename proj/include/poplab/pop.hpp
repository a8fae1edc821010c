#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poplab/bigint.hpp"
#include "poplab/permutation.hpp"

namespace poplab {

// A partially ordered pattern: a strict partial order on labels {1..k}, where
// label i stands for the i-th element of a candidate subsequence. below(a, b)
// means the element at subsequence position a must be smaller than the one at
// position b. The relation is stored transitively closed, so an occurrence
// test is a pure conjunction over the stored pairs. A classical pattern is a
// chain (total order).
class Pop {
 public:
  Pop() = default;

  static Pop classical(const Permutation& pattern);
  // k = j labels; label 1 above the mutually incomparable labels 2..j.
  // Avoiding it forbids any entry with j-1 smaller entries to its right.
  static Pop flat_pj(int j);
  // k = l labels; label l below the mutually incomparable labels 1..l-1.
  // Avoiding it forbids any entry with l-1 larger entries to its left.
  static Pop flat_ptilde(int l);
  // Transitive closure of `below`; throws on cycles or out-of-range labels.
  static Pop from_relations(int k, const std::vector<std::pair<int, int>>& below);

  int size() const { return k_; }
  bool below(int a, int b) const {
    return rel_[static_cast<size_t>(a - 1) * static_cast<size_t>(k_) +
                static_cast<size_t>(b - 1)] != 0;
  }
  std::vector<std::pair<int, int>> relation_pairs() const;

  // Structural detection, used to dispatch to the O(n^2) specialized tests.
  std::optional<int> as_flat_pj() const;
  std::optional<int> as_flat_ptilde() const;

  friend bool operator==(const Pop&, const Pop&) = default;

 private:
  int k_ = 0;
  std::vector<char> rel_;  // k*k adjacency, transitively closed
};

BigInt count_occurrences(const Pop& pop, const Permutation& p);
bool occurs(const Pop& pop, const Permutation& p);
bool avoids_all(const Permutation& p, const std::vector<Pop>& pops);

// Specialized flat-POP tests, O(n^2).
bool occurs_flat_pj(int j, const Permutation& p);
bool occurs_flat_ptilde(int l, const Permutation& p);

// Recursive block-decomposition test; equivalent to avoiding 2413 and 3142.
bool is_separable(const Permutation& p);

// One block of a Stankova decomposition: its pattern plus the interval of
// values it occupies in the host permutation. Empty block <=> hi < lo.
struct Block {
  Permutation pattern;
  int value_lo = 1;
  int value_hi = 0;

  bool empty() const { return value_hi < value_lo; }
  friend bool operator==(const Block&, const Block&) = default;
};

// p = L_1 ... L_m n R_m ... R_1 with interleaved value intervals
// R_1 < L_1 < R_2 < ... < R_m < L_m. left[i] is L_{i+1}, right[i] is R_{i+1}.
// Only L_m and R_1 may be empty.
struct Decomposition {
  std::vector<Block> left;
  std::vector<Block> right;

  int m() const { return static_cast<int>(left.size()); }
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Requires p nonempty and separable; the wide blocks are the maximal
// same-side runs of consecutive values walked down from n-1, which yields the
// maximal block count m.
Decomposition stankova_decompose(const Permutation& p);
Permutation stankova_reconstruct(const Decomposition& d);

// Textual POP syntax used by the CLI:
//   "Pj:4"  "Pt:5"  "classical:2413"  "pop k=3 below=3<1;2<1"
Pop parse_pop(const std::string& text);
// Comma-separated list of the shorthand forms above.
std::vector<Pop> parse_pop_list(const std::string& text);

}  // namespace poplab
