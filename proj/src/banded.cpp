#include "poplab/banded.hpp"

#include <algorithm>
#include <sstream>

namespace poplab {

BigInt banded_count(int n, BandedSpec spec) {
  if (spec.a < 1 || spec.b < 1) throw std::invalid_argument("window slacks must be >= 1");
  if (n < 0) throw std::invalid_argument("negative n");
  if (n == 0) return 1;
  // Slack beyond n never binds.
  const int a = std::min(spec.a, n);
  const int b = std::min(spec.b, n);
  const int w = a + b - 1;
  if (w > 20) throw std::invalid_argument("window width " + std::to_string(w) + " too wide for the DP");

  // Bit d of a state at position i stands for value i - a + 1 + d;
  // set = unavailable (already used, or outside {1..n}).
  const uint32_t full = (w == 32) ? ~0u : (1u << w) - 1;
  std::vector<BigInt> cur(size_t{1} << w), nxt(size_t{1} << w);
  uint32_t init = 0;
  for (int d = 0; d < w; ++d) {
    const int v = 2 - a + d;  // window of position 1
    if (v < 1 || v > n) init |= 1u << d;
  }
  cur[init] = 1;
  for (int i = 1; i <= n; ++i) {
    std::fill(nxt.begin(), nxt.end(), BigInt(0));
    const bool incoming_oob = i + b > n;  // top value of the next window
    for (uint32_t s = 0; s <= full; ++s) {
      if (cur[s] == 0) continue;
      for (uint32_t avail = full & ~s; avail;) {
        const uint32_t bit = avail & ~(avail - 1u);  // lowest set bit
        avail &= avail - 1u;
        const uint32_t taken = s | bit;
        // Value i - a + 1 leaves the window now; it must be spoken for.
        if (!(taken & 1u)) continue;
        uint32_t shifted = taken >> 1;
        if (incoming_oob) shifted |= 1u << (w - 1);
        nxt[shifted] += cur[s];
      }
    }
    cur.swap(nxt);
  }
  return cur[full];
}

std::vector<BigInt> banded_sequence(BandedSpec spec, int n_max) {
  if (n_max < 0) throw std::invalid_argument("negative n_max");
  std::vector<BigInt> out;
  out.reserve(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) out.push_back(banded_count(n, spec));
  return out;
}

BigInt kfib(int k, long long n) {
  if (k < 2) throw std::invalid_argument("k-step Fibonacci needs k >= 2");
  if (n <= 0) return 0;
  if (n == 1) return 1;
  // window of the last k values F_{m-k}..F_{m-1}
  std::vector<BigInt> win(static_cast<size_t>(k), 0);
  win[static_cast<size_t>(k) - 1] = 1;  // F_1
  BigInt sum = 1;                       // running sum of the window
  BigInt next = 0;
  for (long long m = 2; m <= n; ++m) {
    next = sum;
    sum += next - win[0];
    win.erase(win.begin());
    win.push_back(next);
  }
  return next;
}

namespace {

// Berlekamp-Massey over Q: shortest connection vector C (C[0] = 1) with
// sum_{i=0..L} C[i] * s[n-i] = 0 for all valid n.
std::vector<BigRational> berlekamp_massey(const std::vector<BigRational>& s) {
  std::vector<BigRational> C{1}, B{1};
  int L = 0, m = 1;
  BigRational b = 1;
  for (int n = 0; n < static_cast<int>(s.size()); ++n) {
    BigRational d = s[static_cast<size_t>(n)];
    for (int i = 1; i <= L; ++i) d += C[static_cast<size_t>(i)] * s[static_cast<size_t>(n - i)];
    if (d == 0) {
      ++m;
      continue;
    }
    const BigRational coef = d / b;
    if (2 * L <= n) {
      std::vector<BigRational> T = C;
      if (C.size() < B.size() + static_cast<size_t>(m)) C.resize(B.size() + static_cast<size_t>(m), 0);
      for (size_t i = 0; i < B.size(); ++i) C[i + static_cast<size_t>(m)] -= coef * B[i];
      L = n + 1 - L;
      B = std::move(T);
      b = d;
      m = 1;
    } else {
      if (C.size() < B.size() + static_cast<size_t>(m)) C.resize(B.size() + static_cast<size_t>(m), 0);
      for (size_t i = 0; i < B.size(); ++i) C[i + static_cast<size_t>(m)] -= coef * B[i];
      ++m;
    }
  }
  C.resize(static_cast<size_t>(L) + 1, 0);
  return C;
}

}  // namespace

Recurrence find_recurrence(const std::vector<BigInt>& seq) {
  const int len = static_cast<int>(seq.size());
  if (len < 4) throw no_recurrence("need at least 4 terms");
  std::vector<BigRational> s;
  s.reserve(seq.size());
  for (const auto& v : seq) s.emplace_back(v);

  // Fit on all but the last two terms; those stay held out for validation.
  std::vector<BigRational> train(s.begin(), s.end() - 2);
  std::vector<BigRational> conn = berlekamp_massey(train);
  const int d = static_cast<int>(conn.size()) - 1;
  if (len < 2 * d + 2)
    throw no_recurrence("no recurrence of order <= " + std::to_string(len / 2 - 1) +
                        " fits " + std::to_string(len) + " terms");
  Recurrence rec;
  rec.coeffs.reserve(static_cast<size_t>(d));
  for (int i = 1; i <= d; ++i) rec.coeffs.push_back(-conn[static_cast<size_t>(i)]);
  for (int n = d; n < len; ++n) {
    BigRational acc = 0;
    for (int i = 1; i <= d; ++i) acc += rec.coeffs[static_cast<size_t>(i - 1)] * s[static_cast<size_t>(n - i)];
    if (acc != s[static_cast<size_t>(n)])
      throw no_recurrence("candidate of order " + std::to_string(d) +
                          " fails on held-out terms");
  }
  return rec;
}

std::string Recurrence::denominator_string() const {
  std::ostringstream out;
  out << "1";
  for (int i = 1; i <= order(); ++i) {
    BigRational c = coeffs[static_cast<size_t>(i - 1)];
    if (c == 0) continue;
    // denominator term is -c_i x^i
    const bool neg = c > 0;
    out << (neg ? " - " : " + ");
    BigRational mag = neg ? c : BigRational(-c);
    if (mag != 1) {
      if (denominator(mag) == 1)
        out << numerator(mag);
      else
        out << "(" << mag << ")";
    }
    out << "x";
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

}  // namespace poplab
