#pragma once

// Brute-force reference implementations. Nothing here calls into the library,
// so agreement with it is evidence rather than tautology.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Word = std::vector<int>;

inline std::vector<Word> perms(int n) {
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Word> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline int inversions(const Word& w) {
  int k = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) k += w[i] > w[j];
  return k;
}

inline std::vector<int> descent_set(const Word& w) {
  std::vector<int> d;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) d.push_back(static_cast<int>(i) + 1);
  return d;
}

// Tries every subset of positions.
inline bool contains(const Word& w, const Word& p) {
  const int n = static_cast<int>(w.size()), k = static_cast<int>(p.size());
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    Word sub;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) sub.push_back(w[i]);
    bool same = true;
    for (int a = 0; a < k && same; ++a)
      for (int b = 0; b < k && same; ++b) same = (sub[a] < sub[b]) == (p[a] < p[b]);
    if (same) return true;
  }
  return false;
}

// All reduced words, by peeling right descents: w = (w s_i) s_i.
inline std::vector<Word> reduced_words(const Word& w) {
  auto d = descent_set(w);
  if (d.empty()) return {{}};
  std::vector<Word> out;
  for (int i : d) {
    Word v = w;
    std::swap(v[i - 1], v[i]);
    for (auto r : reduced_words(v)) {
      r.push_back(i);
      out.push_back(r);
    }
  }
  return out;
}

// Schubert polynomial as a map exponent -> coefficient via compatible sequences
// (Billey-Jockusch-Stanley).
inline std::map<std::vector<int>, long> schubert_bjs(const Word& w) {
  const int n = static_cast<int>(w.size());
  std::map<std::vector<int>, long> out;
  for (const auto& a : reduced_words(w)) {
    const int l = static_cast<int>(a.size());
    std::vector<int> seq(l);
    auto rec = [&](auto&& self, int j) -> void {
      if (j == l) {
        std::vector<int> e(n, 0);
        for (int x : seq) ++e[x - 1];
        ++out[e];
        return;
      }
      for (int i = j ? seq[j - 1] : 1; i <= a[j]; ++i) {
        if (j && a[j - 1] < a[j] && i == seq[j - 1]) continue;
        seq[j] = i;
        self(self, j + 1);
      }
    };
    rec(rec, 0);
  }
  if (inversions(w) == 0) out[std::vector<int>(n, 0)] = 1;
  return out;
}

inline long count_with_descent_set(int n, const std::vector<int>& d) {
  long k = 0;
  for (const auto& w : perms(n)) k += descent_set(w) == d;
  return k;
}

inline long eulerian(int m, int k) {
  long c = 0;
  for (const auto& w : perms(m)) c += static_cast<int>(descent_set(w).size()) == k;
  return c;
}

// Up-down permutations w_1 < w_2 > w_3 < ...
inline long alternating(int n) {
  long c = 0;
  for (const auto& w : perms(n)) {
    bool ok = true;
    for (int i = 0; i + 1 < n && ok; ++i) ok = (i % 2 == 0) == (w[i] < w[i + 1]);
    c += ok;
  }
  return c;
}

// SYT count by removing a corner holding the largest entry.
inline long syt_count(std::vector<int> shape) {
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape.empty()) return 1;
  long total = 0;
  for (std::size_t i = 0; i < shape.size(); ++i)
    if (i + 1 == shape.size() || shape[i + 1] < shape[i]) {
      auto s = shape;
      --s[i];
      total += syt_count(s);
    }
  return total;
}

inline mpz_class choose(long n, long k) {
  if (k < 0 || n < k || n < 0) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Flagged Jacobi-Trudi at x = 1: det[ h_{l_i - i + j}(1^{b_i}) ], Leibniz expansion.
inline mpz_class flagged_jacobi_trudi(const std::vector<int>& lambda, const std::vector<int>& b) {
  const int r = static_cast<int>(lambda.size());
  auto h = [](int k, int m) -> mpz_class {
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (m <= 0) return 0;
    return choose(m + k - 1, k);
  };
  std::vector<int> sigma(r);
  std::iota(sigma.begin(), sigma.end(), 0);
  mpz_class det = 0;
  do {
    mpz_class term = inversions(sigma) % 2 ? -1 : 1;
    for (int i = 0; i < r && term != 0; ++i) term *= h(lambda[i] - i + sigma[i], b[i]);
    det += term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return det;
}

// Lehmer code.
inline std::vector<int> code(const Word& w) {
  std::vector<int> c(w.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) c[i] += w[j] < w[i];
  return c;
}

}  // namespace oracle
