#include "poplab/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace poplab {

Permutation::Permutation(std::vector<int> one_line) : vals_(std::move(one_line)) {
  const int n = size();
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int v : vals_) {
    if (v < 1 || v > n)
      throw std::invalid_argument("permutation entry " + std::to_string(v) +
                                  " out of range 1.." + std::to_string(n));
    if (seen[static_cast<size_t>(v)])
      throw std::invalid_argument("duplicate permutation entry " + std::to_string(v));
    seen[static_cast<size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("negative permutation size");
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation reverse(const Permutation& p) {
  std::vector<int> v(p.values().rbegin(), p.values().rend());
  return Permutation(std::move(v));
}

Permutation complement(const Permutation& p) {
  const int n = p.size();
  std::vector<int> v;
  v.reserve(static_cast<size_t>(n));
  for (int x : p.values()) v.push_back(n + 1 - x);
  return Permutation(std::move(v));
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
  const int m = a.size();
  std::vector<int> v = a.values();
  v.reserve(static_cast<size_t>(m + b.size()));
  for (int x : b.values()) v.push_back(x + m);
  return Permutation(std::move(v));
}

Permutation skew_sum(const Permutation& a, const Permutation& b) {
  const int n = b.size();
  std::vector<int> v;
  v.reserve(static_cast<size_t>(a.size() + n));
  for (int x : a.values()) v.push_back(x + n);
  for (int x : b.values()) v.push_back(x);
  return Permutation(std::move(v));
}

StatVector stats(const Permutation& p) {
  const int n = p.size();
  StatVector s;
  if (n == 0) return s;
  for (int i = 0; i + 1 < n; ++i) {
    if (p.at(i) < p.at(i + 1))
      ++s.asc;
    else
      ++s.des;
  }
  int hi = 0, lo = n + 1;
  for (int i = 0; i < n; ++i) {
    if (p.at(i) > hi) {
      hi = p.at(i);
      ++s.lmax;
    }
    if (p.at(i) < lo) {
      lo = p.at(i);
      ++s.lmin;
    }
  }
  hi = 0, lo = n + 1;
  for (int i = n - 1; i >= 0; --i) {
    if (p.at(i) > hi) {
      hi = p.at(i);
      ++s.rmax;
    }
    if (p.at(i) < lo) {
      lo = p.at(i);
      ++s.rmin;
    }
  }
  return s;
}

Permutation standardize(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return word[static_cast<size_t>(a)] < word[static_cast<size_t>(b)]; });
  std::vector<int> out(static_cast<size_t>(n));
  for (int rank = 0; rank < n; ++rank) {
    int pos = order[static_cast<size_t>(rank)];
    if (rank > 0 && word[static_cast<size_t>(pos)] ==
                        word[static_cast<size_t>(order[static_cast<size_t>(rank - 1)])])
      throw std::invalid_argument("standardize: duplicate entry");
    out[static_cast<size_t>(pos)] = rank + 1;
  }
  return Permutation(std::move(out));
}

std::string to_string(const Permutation& p) {
  if (p.empty()) return "e";
  if (p.size() <= 9) {
    std::string s;
    for (int v : p.values()) s += static_cast<char>('0' + v);
    return s;
  }
  std::string s;
  for (int i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p.at(i));
  }
  return s;
}

Permutation parse_permutation(const std::string& text) {
  std::vector<int> v;
  if (text.empty() || text == "e" || text == "eps") return Permutation();
  if (text.find(',') != std::string::npos || text.find(' ') != std::string::npos) {
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, text.find(',') != std::string::npos ? ',' : ' ')) {
      if (item.empty()) continue;
      v.push_back(std::stoi(item));
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9')
        throw std::invalid_argument("bad permutation literal: " + text);
      v.push_back(c - '0');
    }
  }
  return Permutation(std::move(v));
}

SnRange::SnRange(int n, int cap) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative n");
  if (n > cap)
    throw std::invalid_argument("n = " + std::to_string(n) +
                                " exceeds the permutation-stream cap " + std::to_string(cap));
}

SnRange::iterator::iterator(int n) : cur_(Permutation::identity(n)) {}

SnRange::iterator& SnRange::iterator::operator++() {
  auto v = cur_.values();
  if (!std::next_permutation(v.begin(), v.end())) {
    done_ = true;
    return *this;
  }
  cur_ = Permutation(std::move(v));
  return *this;
}

}  // namespace poplab
