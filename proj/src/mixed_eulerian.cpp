#include "permutahedral/mixed_eulerian.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "permutahedral/poly.hpp"

namespace permutahedral {

namespace {

int validate(const WeakComposition& c) {
  const int n = static_cast<int>(c.size());
  if (n < 1) throw std::invalid_argument("empty composition");
  int total = 0;
  for (int ci : c) {
    if (ci < 0) throw std::invalid_argument("negative part in composition");
    total += ci;
  }
  if (total != n - 1) throw std::invalid_argument("composition must have n parts summing to n-1");
  return n;
}

// Expansion of y^c into monomials with integer coefficients.
std::map<Exponent, mpz_class> y_expansion(const WeakComposition& c) {
  const int n = static_cast<int>(c.size());
  std::map<Exponent, mpz_class> current{{Exponent(n, 0), 1}};
  for (int i = 1; i <= n; ++i) {
    for (int k = 0; k < c[i - 1]; ++k) {
      std::map<Exponent, mpz_class> next;
      for (const auto& [e, coeff] : current) {
        for (int v = 0; v < i; ++v) {
          Exponent f = e;
          ++f[v];
          next[f] += coeff;
        }
      }
      current = std::move(next);
    }
  }
  return current;
}

mpz_class mixed_eulerian_uncached(const WeakComposition& c) {
  mpz_class total = 0;
  for (const auto& [e, coeff] : y_expansion(c)) total += coeff * ds_monomial(e);
  return total;
}

bool is_terminal(const WeakComposition& c) {
  return c.back() == 0 && std::all_of(c.begin(), c.end() - 1, [](int x) { return x == 1; });
}

// Neighbours under one coin move from position i (1-based, i <= n-1, c_i >= 2).
std::pair<WeakComposition, WeakComposition> coin_moves(const WeakComposition& c, int i) {
  const int n = static_cast<int>(c.size());
  WeakComposition left = c;
  WeakComposition right = c;
  --left[i - 1];
  --right[i - 1];
  ++left[i == 1 ? n - 1 : i - 2];
  ++right[i];
  return {left, right};
}

std::map<WeakComposition, mpq_class> solve_petrov(const std::vector<WeakComposition>& seeds) {
  const int n = static_cast<int>(seeds.front().size());
  std::set<WeakComposition> closure(seeds.begin(), seeds.end());
  std::vector<WeakComposition> stack(seeds.begin(), seeds.end());
  while (!stack.empty()) {
    WeakComposition c = std::move(stack.back());
    stack.pop_back();
    if (c.back() > 0) continue;
    for (int i = 1; i <= n - 1; ++i) {
      if (c[i - 1] < 2) continue;
      auto [l, r] = coin_moves(c, i);
      for (auto& x : {l, r})
        if (closure.insert(x).second) stack.push_back(x);
    }
  }

  std::map<WeakComposition, mpq_class> known;
  std::map<WeakComposition, int> index;
  std::vector<WeakComposition> unknowns;
  for (const auto& c : closure) {
    if (c.back() > 0) known[c] = 0;
    else if (is_terminal(c)) known[c] = mpq_class(factorial(n - 1));
    else {
      index[c] = static_cast<int>(unknowns.size());
      unknowns.push_back(c);
    }
  }

  // One equation per unknown, using its smallest robbable position:
  // 2 A_c - A_left - A_right = 0, known values moved to the right-hand side.
  const int m = static_cast<int>(unknowns.size());
  std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(m + 1, 0));
  for (int row = 0; row < m; ++row) {
    const auto& c = unknowns[row];
    int i = 1;
    while (c[i - 1] < 2) ++i;
    a[row][row] += 2;
    auto [l, r] = coin_moves(c, i);
    for (const auto& x : {l, r}) {
      if (auto it = index.find(x); it != index.end()) a[row][it->second] -= 1;
      else a[row][m] += known.at(x);
    }
  }
  for (int col = 0; col < m; ++col) {
    int pivot = col;
    while (pivot < m && a[pivot][col] == 0) ++pivot;
    if (pivot == m) throw std::logic_error("singular coin-move system");
    std::swap(a[pivot], a[col]);
    mpq_class inv = 1 / a[col][col];
    for (int k = col; k <= m; ++k) a[col][k] *= inv;
    for (int row = 0; row < m; ++row) {
      if (row == col || a[row][col] == 0) continue;
      mpq_class factor = a[row][col];
      for (int k = col; k <= m; ++k)
        if (a[col][k] != 0) a[row][k] -= factor * a[col][k];
    }
  }
  for (int row = 0; row < m; ++row) known[unknowns[row]] = a[row][m];
  return known;
}

}  // namespace

mpz_class mixed_eulerian(const WeakComposition& c) {
  validate(c);
  if (c.back() > 0) return 0;
  static std::mutex mutex;
  static std::map<WeakComposition, mpz_class> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(c); it != memo.end()) return it->second;
  }
  mpz_class value = mixed_eulerian_uncached(c);
  std::lock_guard lock(mutex);
  memo.emplace(c, value);
  return value;
}

mpz_class mixed_eulerian_petrov(const WeakComposition& c) {
  validate(c);
  auto table = solve_petrov({c});
  const mpq_class& v = table.at(c);
  if (v.get_den() != 1) throw std::logic_error("non-integral coin-move solution");
  return v.get_num();
}

std::vector<WeakComposition> weak_compositions(int n) {
  std::vector<WeakComposition> out;
  WeakComposition c(n, 0);
  std::function<void(int, int)> rec = [&](int i, int remaining) {
    if (i == n - 1) {
      c[i] = remaining;
      out.push_back(c);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      c[i] = v;
      rec(i + 1, remaining - v);
    }
  };
  rec(0, n - 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::map<WeakComposition, mpq_class> petrov_table(int n) { return solve_petrov(weak_compositions(n)); }

mpq_class cyclic_class_sum(const WeakComposition& c) {
  const int n = validate(c);
  mpq_class total = 0;
  WeakComposition r = c;
  for (int k = 0; k < n; ++k) {
    total += mpq_class(mixed_eulerian(r));
    std::rotate(r.begin(), r.begin() + 1, r.end());
  }
  return total / mpq_class(factorial(n - 1));
}

namespace {

int validate_strong(const std::vector<int>& a) {
  if (a.empty()) throw std::invalid_argument("empty strong composition");
  int total = 0;
  for (int x : a) {
    if (x <= 0) throw std::invalid_argument("strong composition needs positive parts");
    total += x;
  }
  return total + 1;
}

}  // namespace

std::vector<mpz_class> connected_gf(const std::vector<int>& a) {
  const int n = validate_strong(a);
  const int p = static_cast<int>(a.size());
  std::vector<mpz_class> coeffs;
  for (int m = 0; m <= n - p - 1; ++m) {
    WeakComposition c(n, 0);
    for (int i = 0; i < p; ++i) c[m + i] = a[i];
    coeffs.push_back(mixed_eulerian(c));
  }
  return coeffs;
}

std::vector<mpz_class> connected_gf_series(const std::vector<int>& a) {
  const int n = validate_strong(a);
  const int p = static_cast<int>(a.size());
  std::vector<mpz_class> series(n + 1);
  for (int j = 0; j <= n; ++j) {
    mpz_class term = 1;
    for (int i = 1; i <= p; ++i) {
      mpz_class base = i + j;
      mpz_class power;
      mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(a[i - 1]));
      term *= power;
    }
    series[j] = term;
  }
  std::vector<mpz_class> numerator(n + 1, 0);
  for (int k = 0; k <= n; ++k)
    for (int j = 0; j <= k; ++j) {
      mpz_class t = series[j] * binomial(n, k - j);
      if ((k - j) % 2) numerator[k] -= t;
      else numerator[k] += t;
    }
  while (!numerator.empty() && numerator.back() == 0) numerator.pop_back();
  return numerator;
}

mpz_class eulerian_number_tally(int m, int k) {
  mpz_class count = 0;
  for (const auto& w : all_permutations(m))
    if (static_cast<int>(descents(w).size()) == k) ++count;
  return count;
}

std::string mixed_eulerian_csv(int n) {
  std::ostringstream out;
  out << "composition,value\n";
  for (const auto& c : weak_compositions(n)) {
    if (c.back() != 0) continue;
    out << '"';
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
    out << "\"," << mixed_eulerian(c).get_str() << '\n';
  }
  return out.str();
}

}  // namespace permutahedral
