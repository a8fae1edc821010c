#include "poplab/pop.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace poplab {

namespace {

char& cell(std::vector<char>& rel, int k, int a, int b) {
  return rel[static_cast<size_t>(a - 1) * static_cast<size_t>(k) + static_cast<size_t>(b - 1)];
}

}  // namespace

Pop Pop::classical(const Permutation& pattern) {
  Pop pop;
  pop.k_ = pattern.size();
  pop.rel_.assign(static_cast<size_t>(pop.k_) * static_cast<size_t>(pop.k_), 0);
  for (int a = 1; a <= pop.k_; ++a)
    for (int b = 1; b <= pop.k_; ++b)
      if (a != b && pattern.at(a - 1) < pattern.at(b - 1)) cell(pop.rel_, pop.k_, a, b) = 1;
  return pop;
}

Pop Pop::flat_pj(int j) {
  if (j < 2) throw std::invalid_argument("flat pattern needs at least 2 labels");
  Pop pop;
  pop.k_ = j;
  pop.rel_.assign(static_cast<size_t>(j) * static_cast<size_t>(j), 0);
  for (int c = 2; c <= j; ++c) cell(pop.rel_, j, c, 1) = 1;
  return pop;
}

Pop Pop::flat_ptilde(int l) {
  if (l < 2) throw std::invalid_argument("flat pattern needs at least 2 labels");
  Pop pop;
  pop.k_ = l;
  pop.rel_.assign(static_cast<size_t>(l) * static_cast<size_t>(l), 0);
  for (int c = 1; c < l; ++c) cell(pop.rel_, l, l, c) = 1;
  return pop;
}

Pop Pop::from_relations(int k, const std::vector<std::pair<int, int>>& below) {
  if (k < 0) throw std::invalid_argument("negative pattern size");
  Pop pop;
  pop.k_ = k;
  pop.rel_.assign(static_cast<size_t>(k) * static_cast<size_t>(k), 0);
  for (auto [a, b] : below) {
    if (a < 1 || a > k || b < 1 || b > k)
      throw std::invalid_argument("relation label out of range 1..k");
    if (a == b) throw std::invalid_argument("reflexive relation pair");
    cell(pop.rel_, k, a, b) = 1;
  }
  for (int m = 1; m <= k; ++m)
    for (int a = 1; a <= k; ++a)
      for (int b = 1; b <= k; ++b)
        if (pop.below(a, m) && pop.below(m, b)) cell(pop.rel_, k, a, b) = 1;
  for (int a = 1; a <= k; ++a)
    if (pop.below(a, a)) throw std::invalid_argument("relation contains a cycle");
  return pop;
}

std::vector<std::pair<int, int>> Pop::relation_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= k_; ++a)
    for (int b = 1; b <= k_; ++b)
      if (below(a, b)) out.emplace_back(a, b);
  return out;
}

std::optional<int> Pop::as_flat_pj() const {
  if (k_ < 2) return std::nullopt;
  if (*this == flat_pj(k_)) return k_;
  return std::nullopt;
}

std::optional<int> Pop::as_flat_ptilde() const {
  if (k_ < 2) return std::nullopt;
  if (*this == flat_ptilde(k_)) return k_;
  return std::nullopt;
}

namespace {

// DFS over increasing index subsequences; `chosen` holds the values picked so
// far (label d+1 gets the d-th pick). Constraints against earlier labels only.
template <typename OnHit>
bool match_rec(const Pop& pop, const std::vector<int>& vals, int from, std::vector<int>& chosen,
               OnHit&& on_hit) {
  const int k = pop.size();
  const int d = static_cast<int>(chosen.size());
  if (d == k) return on_hit();
  const int n = static_cast<int>(vals.size());
  for (int i = from; i <= n - (k - d); ++i) {
    const int v = vals[static_cast<size_t>(i)];
    bool ok = true;
    for (int e = 1; e <= d && ok; ++e) {
      if (pop.below(e, d + 1) && !(chosen[static_cast<size_t>(e - 1)] < v)) ok = false;
      if (pop.below(d + 1, e) && !(v < chosen[static_cast<size_t>(e - 1)])) ok = false;
    }
    if (!ok) continue;
    chosen.push_back(v);
    if (match_rec(pop, vals, i + 1, chosen, on_hit)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

BigInt count_occurrences(const Pop& pop, const Permutation& p) {
  if (pop.size() > p.size()) return 0;
  BigInt count = 0;
  std::vector<int> chosen;
  match_rec(pop, p.values(), 0, chosen, [&] {
    ++count;
    return false;
  });
  return count;
}

bool occurs(const Pop& pop, const Permutation& p) {
  if (pop.size() > p.size()) return false;
  if (auto j = pop.as_flat_pj()) return occurs_flat_pj(*j, p);
  if (auto l = pop.as_flat_ptilde()) return occurs_flat_ptilde(*l, p);
  std::vector<int> chosen;
  return match_rec(pop, p.values(), 0, chosen, [] { return true; });
}

bool avoids_all(const Permutation& p, const std::vector<Pop>& pops) {
  for (const auto& pop : pops)
    if (occurs(pop, p)) return false;
  return true;
}

bool occurs_flat_pj(int j, const Permutation& p) {
  if (j < 2) throw std::invalid_argument("flat pattern needs at least 2 labels");
  const int n = p.size();
  for (int i = 0; i < n; ++i) {
    int smaller_after = 0;
    for (int r = i + 1; r < n; ++r)
      if (p.at(r) < p.at(i)) ++smaller_after;
    if (smaller_after >= j - 1) return true;
  }
  return false;
}

bool occurs_flat_ptilde(int l, const Permutation& p) {
  if (l < 2) throw std::invalid_argument("flat pattern needs at least 2 labels");
  const int n = p.size();
  for (int i = 0; i < n; ++i) {
    int larger_before = 0;
    for (int r = 0; r < i; ++r)
      if (p.at(r) > p.at(i)) ++larger_before;
    if (larger_before >= l - 1) return true;
  }
  return false;
}

namespace {

// A span of distinct values is separable iff it is a singleton or splits into
// a proper prefix occupying the lowest (or highest) values of the span, with
// both parts separable. Any valid split point works: the defining patterns
// 2413 and 3142 cannot straddle such a split.
bool separable_rec(const std::vector<int>& vals, int lo, int hi) {
  const int len = hi - lo;
  if (len <= 1) return true;
  int seg_min = vals[static_cast<size_t>(lo)], seg_max = seg_min;
  for (int i = lo + 1; i < hi; ++i) {
    seg_min = std::min(seg_min, vals[static_cast<size_t>(i)]);
    seg_max = std::max(seg_max, vals[static_cast<size_t>(i)]);
  }
  int pre_min = vals[static_cast<size_t>(lo)], pre_max = pre_min;
  for (int k = 1; k < len; ++k) {
    const int v = vals[static_cast<size_t>(lo + k - 1)];
    pre_min = std::min(pre_min, v);
    pre_max = std::max(pre_max, v);
    if (pre_max - pre_min + 1 != k) continue;
    if (pre_min == seg_min || pre_max == seg_max)
      return separable_rec(vals, lo, lo + k) && separable_rec(vals, lo + k, hi);
  }
  return false;
}

}  // namespace

bool is_separable(const Permutation& p) {
  return separable_rec(p.values(), 0, p.size());
}

Decomposition stankova_decompose(const Permutation& p) {
  if (p.empty()) throw std::invalid_argument("cannot decompose the empty permutation");
  if (!is_separable(p)) throw std::invalid_argument("permutation is not separable");
  const int n = p.size();
  std::vector<int> pos_of(static_cast<size_t>(n) + 1);
  for (int i = 0; i < n; ++i) pos_of[static_cast<size_t>(p.at(i))] = i;
  const int kp = pos_of[static_cast<size_t>(n)];

  // Maximal same-side runs of consecutive values, walked down from n-1.
  // side: true = left of n. Runs alternate; only the top left block and the
  // bottom right block may be missing.
  struct Run {
    bool left;
    int hi, lo;
  };
  std::vector<Run> runs;
  for (int v = n - 1; v >= 1; --v) {
    const bool left = pos_of[static_cast<size_t>(v)] < kp;
    if (!runs.empty() && runs.back().left == left)
      runs.back().lo = v;
    else
      runs.push_back({left, v, v});
  }
  std::vector<Block> blocks;  // alternating L_m, R_m, L_{m-1}, ..., L_1, R_1
  if (runs.empty() || !runs.front().left) blocks.push_back(Block{});
  for (const Run& r : runs) {
    std::vector<int> word;
    for (int i = 0; i < n; ++i)
      if (p.at(i) >= r.lo && p.at(i) <= r.hi) word.push_back(p.at(i));
    blocks.push_back(Block{standardize(word), r.lo, r.hi});
  }
  if (blocks.size() % 2 != 0) blocks.push_back(Block{});

  Decomposition d;
  const int m = static_cast<int>(blocks.size()) / 2;
  d.left.resize(static_cast<size_t>(m));
  d.right.resize(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    d.left[static_cast<size_t>(m - 1 - i)] = blocks[static_cast<size_t>(2 * i)];
    d.right[static_cast<size_t>(m - 1 - i)] = blocks[static_cast<size_t>(2 * i + 1)];
  }
  if (stankova_reconstruct(d) != p)
    throw std::logic_error("decomposition failed to reconstruct its input");
  return d;
}

Permutation stankova_reconstruct(const Decomposition& d) {
  std::vector<int> vals;
  int n = 1;
  for (const auto& b : d.left)
    if (!b.empty()) n += b.value_hi - b.value_lo + 1;
  for (const auto& b : d.right)
    if (!b.empty()) n += b.value_hi - b.value_lo + 1;
  auto emit = [&](const Block& b) {
    for (int v : b.pattern.values()) vals.push_back(b.value_lo + v - 1);
  };
  for (const auto& b : d.left) emit(b);
  vals.push_back(n);
  for (auto it = d.right.rbegin(); it != d.right.rend(); ++it) emit(*it);
  return Permutation(std::move(vals));
}

namespace {

std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

}  // namespace

Pop parse_pop(const std::string& text) {
  const std::string s = trimmed(text);
  auto starts_with_i = [&](const char* prefix) {
    size_t len = std::string(prefix).size();
    if (s.size() < len) return false;
    for (size_t i = 0; i < len; ++i)
      if (std::tolower(static_cast<unsigned char>(s[i])) !=
          std::tolower(static_cast<unsigned char>(prefix[i])))
        return false;
    return true;
  };
  if (starts_with_i("pj:")) return Pop::flat_pj(std::stoi(s.substr(3)));
  if (starts_with_i("pt:")) return Pop::flat_ptilde(std::stoi(s.substr(3)));
  if (starts_with_i("classical:")) return Pop::classical(parse_permutation(s.substr(10)));
  if (starts_with_i("pop")) {
    int k = -1;
    std::vector<std::pair<int, int>> below;
    std::istringstream in(s.substr(3));
    std::string tok;
    while (in >> tok) {
      if (tok.rfind("k=", 0) == 0) {
        k = std::stoi(tok.substr(2));
      } else if (tok.rfind("below=", 0) == 0) {
        std::istringstream pairs(tok.substr(6));
        std::string pr;
        while (std::getline(pairs, pr, ';')) {
          auto lt = pr.find('<');
          if (lt == std::string::npos)
            throw std::invalid_argument("bad relation pair '" + pr + "' (want a<b)");
          below.emplace_back(std::stoi(pr.substr(0, lt)), std::stoi(pr.substr(lt + 1)));
        }
      } else {
        throw std::invalid_argument("bad pop token '" + tok + "'");
      }
    }
    if (k < 0) throw std::invalid_argument("pop spec needs k=<size>");
    return Pop::from_relations(k, below);
  }
  throw std::invalid_argument("bad pop spec '" + text +
                              "' (want Pj:N, Pt:N, classical:PERM, or pop k=.. below=..)");
}

std::vector<Pop> parse_pop_list(const std::string& text) {
  std::vector<Pop> out;
  const std::string s = trimmed(text);
  if (s.empty()) return out;
  if (s.rfind("pop", 0) == 0 && s.find("k=") != std::string::npos) {
    out.push_back(parse_pop(s));
    return out;
  }
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trimmed(item);
    if (!item.empty()) out.push_back(parse_pop(item));
  }
  return out;
}

}  // namespace poplab
