#include "poplab/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace poplab {

namespace {

int resolve_cap(bool distribution_query, const EnumOptions& opt) {
  if (opt.max_n > 0) return opt.max_n;
  if (const char* env = std::getenv("POPLAB_MAX_N")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return distribution_query ? kDistributionCap : kCountingCap;
}

int resolve_jobs(const EnumOptions& opt) {
  if (opt.jobs > 0) return opt.jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Does the word contain an occurrence of `pop` whose last element is the last
// letter? During prefix extension only such occurrences can be new.
bool occurs_ending_at_last(const Pop& pop, const std::vector<int>& word) {
  const int k = pop.size();
  const int m = static_cast<int>(word.size());
  if (k > m || k == 0) return false;
  const int last = word[static_cast<size_t>(m - 1)];
  std::vector<int> chosen;
  chosen.reserve(static_cast<size_t>(k));
  // choose values for labels 1..k-1 among word[0..m-2], label k = last letter
  auto rec = [&](auto&& self, int from) -> bool {
    const int d = static_cast<int>(chosen.size());
    if (d == k - 1) {
      for (int e = 1; e < k; ++e) {
        if (pop.below(e, k) && !(chosen[static_cast<size_t>(e - 1)] < last)) return false;
        if (pop.below(k, e) && !(last < chosen[static_cast<size_t>(e - 1)])) return false;
      }
      return true;
    }
    for (int i = from; i <= m - 1 - (k - 1 - d); ++i) {
      const int v = word[static_cast<size_t>(i)];
      bool ok = true;
      for (int e = 1; e <= d && ok; ++e) {
        if (pop.below(e, d + 1) && !(chosen[static_cast<size_t>(e - 1)] < v)) ok = false;
        if (pop.below(d + 1, e) && !(v < chosen[static_cast<size_t>(e - 1)])) ok = false;
      }
      if (!ok) continue;
      chosen.push_back(v);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

// One avoider-class enumeration walk. Flat POPs in the query are enforced by
// per-position displacement counters; everything else (arbitrary POPs, plus
// the separability chains 2413/3142) goes through the generic
// ending-at-last-letter matcher.
struct Walk {
  int n;
  int pj_threshold;  // prune when some entry gets this many smaller entries after it
  int pt_threshold;  // prune when the new entry has this many larger entries before it
  std::vector<Pop> generic;

  std::vector<int> prefix;
  std::vector<int> smaller_after;
  uint32_t used = 0;

  Walk(const AvoiderQuery& q) : n(q.n), pj_threshold(q.n + 1), pt_threshold(q.n + 1) {
    for (const auto& pop : q.pops) {
      if (auto j = pop.as_flat_pj())
        pj_threshold = std::min(pj_threshold, *j - 1);
      else if (auto l = pop.as_flat_ptilde())
        pt_threshold = std::min(pt_threshold, *l - 1);
      else if (pop.size() == 0)
        pt_threshold = 0;  // the empty POP occurs in every nonempty permutation
      else
        generic.push_back(pop);
    }
    if (q.separable_only) {
      generic.push_back(Pop::classical(parse_permutation("2413")));
      generic.push_back(Pop::classical(parse_permutation("3142")));
    }
    prefix.reserve(static_cast<size_t>(n));
    smaller_after.assign(static_cast<size_t>(n), 0);
  }

  // Extend by value v; returns false (and restores nothing) when the new
  // prefix already contains a queried pattern. Caller must pop() iff true.
  bool push(int v) {
    int larger_before = 0;
    bool bad = false;
    for (size_t i = 0; i < prefix.size(); ++i) {
      if (prefix[i] > v) {
        ++larger_before;
        if (++smaller_after[i] >= pj_threshold) bad = true;
      }
    }
    prefix.push_back(v);
    used |= 1u << (v - 1);
    if (!bad && larger_before >= pt_threshold) bad = true;
    if (!bad)
      for (const auto& pop : generic)
        if (occurs_ending_at_last(pop, prefix)) {
          bad = true;
          break;
        }
    if (bad) {
      pop_back();
      return false;
    }
    return true;
  }

  void pop_back() {
    const int v = prefix.back();
    prefix.pop_back();
    used &= ~(1u << (v - 1));
    for (size_t i = 0; i < prefix.size(); ++i)
      if (prefix[i] > v) --smaller_after[i];
  }

  template <typename Leaf>
  void dfs(Leaf&& leaf) {
    if (static_cast<int>(prefix.size()) == n) {
      leaf(prefix);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used & (1u << (v - 1))) continue;
      if (!push(v)) continue;
      dfs(leaf);
      pop_back();
    }
  }
};

// Runs one walk per first entry and folds the partial results in first-entry
// order. Workers own disjoint slots of `parts`, so no synchronization is
// needed; exact arithmetic makes the fold order-independent either way.
template <typename Partial, typename LeafFn>
std::vector<Partial> run_partitioned(const AvoiderQuery& q, int jobs, LeafFn&& leaf_fn) {
  std::vector<Partial> parts(static_cast<size_t>(q.n));
  auto run_first = [&](int first) {
    Walk w(q);
    Partial acc{};
    if (w.push(first)) {
      w.dfs([&](const std::vector<int>& full) { leaf_fn(acc, full); });
      w.pop_back();
    }
    return acc;
  };
  const int groups = std::max(1, std::min(jobs, q.n));
  if (groups == 1 || q.n <= 2) {
    for (int f = 1; f <= q.n; ++f) parts[static_cast<size_t>(f - 1)] = run_first(f);
    return parts;
  }
  std::vector<std::thread> workers;
  workers.reserve(static_cast<size_t>(groups));
  for (int g = 0; g < groups; ++g) {
    workers.emplace_back([&, g] {
      for (int f = g + 1; f <= q.n; f += groups)
        parts[static_cast<size_t>(f - 1)] = run_first(f);
    });
  }
  for (auto& w : workers) w.join();
  return parts;
}

bool empty_permutation_in_class(const AvoiderQuery& q) {
  for (const auto& pop : q.pops)
    if (pop.size() == 0) return false;  // the empty POP occurs in everything, even eps
  return true;
}

void check_cap(const AvoiderQuery& q, bool distribution_query, const EnumOptions& opt) {
  const int cap = resolve_cap(distribution_query, opt);
  if (q.n > cap)
    throw cap_exceeded("n = " + std::to_string(q.n) + " exceeds the enumeration cap " +
                       std::to_string(cap) + " (raise with POPLAB_MAX_N or an explicit override)");
  if (q.n < 0) throw std::invalid_argument("negative n");
  if (q.n > 31) throw std::invalid_argument("enumeration is limited to n <= 31");
}

}  // namespace

BigInt count_avoiders(const AvoiderQuery& q, const EnumOptions& opt) {
  check_cap(q, false, opt);
  if (q.n == 0) return empty_permutation_in_class(q) ? 1 : 0;
  auto parts = run_partitioned<BigInt>(q, resolve_jobs(opt),
                                       [](BigInt& acc, const std::vector<int>&) { ++acc; });
  BigInt total = 0;
  for (const auto& p : parts) total += p;
  return total;
}

MultiPoly distribution(const AvoiderQuery& q, const EnumOptions& opt) {
  check_cap(q, true, opt);
  if (q.n == 0)
    return empty_permutation_in_class(q) ? MultiPoly::one() : MultiPoly();
  auto parts = run_partitioned<MultiPoly>(
      q, resolve_jobs(opt), [](MultiPoly& acc, const std::vector<int>& full) {
        acc += MultiPoly::from_stats(stats(Permutation(full)));
      });
  MultiPoly total;
  for (const auto& p : parts) total += p;
  return total;
}

XSeries series_bruteforce(const std::vector<Pop>& pops, bool separable_only, int n_max,
                          const EnumOptions& opt) {
  if (n_max < 0) throw std::invalid_argument("negative n_max");
  XSeries series(n_max);
  for (int n = 0; n <= n_max; ++n)
    series.coeff(n) = distribution(AvoiderQuery{n, pops, separable_only}, opt);
  return series;
}

std::vector<Permutation> list_avoiders(const AvoiderQuery& q, const EnumOptions& opt) {
  check_cap(q, false, opt);
  if (q.n == 0) {
    std::vector<Permutation> out;
    if (empty_permutation_in_class(q)) out.emplace_back();
    return out;
  }
  auto parts = run_partitioned<std::vector<Permutation>>(
      q, resolve_jobs(opt), [](std::vector<Permutation>& acc, const std::vector<int>& full) {
        acc.emplace_back(full);
      });
  std::vector<Permutation> out;
  for (auto& p : parts)
    for (auto& perm : p) out.push_back(std::move(perm));
  return out;
}

}  // namespace poplab
