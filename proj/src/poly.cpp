#include "permutahedral/poly.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace permutahedral {

bool GradedLexGreater::operator()(const Exponent& a, const Exponent& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

SparsePoly SparsePoly::constant(int nvars, const mpq_class& c) {
  SparsePoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

SparsePoly SparsePoly::variable(int nvars, int i) {
  if (i < 1 || i > nvars) throw std::invalid_argument("variable index out of range");
  Exponent e(nvars, 0);
  e[i - 1] = 1;
  return monomial(e);
}

SparsePoly SparsePoly::monomial(const Exponent& e, const mpq_class& c) {
  SparsePoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

void SparsePoly::add_term(const Exponent& e, const mpq_class& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpq_class SparsePoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

int SparsePoly::degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

bool SparsePoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) {
    return std::accumulate(t.first.begin(), t.first.end(), 0) == d;
  });
}

bool SparsePoly::is_constant() const { return degree() <= 0; }

SparsePoly SparsePoly::with_nvars(int m) const {
  SparsePoly p(m);
  for (const auto& [e, c] : terms_) {
    Exponent f(m, 0);
    for (int i = 0; i < nvars_; ++i) {
      if (i < m) f[i] = e[i];
      else if (e[i] != 0) throw std::invalid_argument("cannot drop a variable that occurs");
    }
    p.add_term(f, c);
  }
  return p;
}

SparsePoly SparsePoly::swap_variables(int i) const {
  if (i < 1 || i >= nvars_) throw std::invalid_argument("swap index out of range");
  SparsePoly p(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    std::swap(f[i - 1], f[i]);
    p.terms_.emplace(std::move(f), c);
  }
  return p;
}

SparsePoly SparsePoly::permute_variables(const Permutation& sigma) const {
  if (sigma.support_size() > nvars_) throw std::invalid_argument("permutation moves absent variables");
  SparsePoly p(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent f(nvars_, 0);
    for (int i = 1; i <= nvars_; ++i) f[sigma(i) - 1] = e[i - 1];
    p.terms_.emplace(std::move(f), c);
  }
  return p;
}

mpq_class SparsePoly::evaluate(std::span<const mpq_class> point) const {
  if (static_cast<int>(point.size()) < nvars_) throw std::invalid_argument("evaluation point too short");
  mpq_class total = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class term = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    total += term;
  }
  return total;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
  if (other.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
  if (other.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
  SparsePoly p(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  }
  return p;
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
  return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

std::string SparsePoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) out += mag.get_str();
    else if (mag == 1) out += mono;
    else out += mag.get_str() + "*" + mono;
  }
  return out;
}

SparsePoly divided_difference(int i, const SparsePoly& f) {
  SparsePoly numerator = f - f.swap_variables(i);
  return divide_by_difference(numerator, i, i + 1);
}

SparsePoly divide_by_difference(const SparsePoly& f, int i, int j) {
  const int m = f.nvars();
  if (i < 1 || j < 1 || i > m || j > m || i == j) throw std::invalid_argument("bad divisor indices");
  // Long division by x_i - x_j, eliminating x_i: each step replaces c*x^e with
  // x_i^{-1} c*x^e * x_j, lowering the x_i-degree of that term by one.
  SparsePoly remainder = f;
  SparsePoly quotient(m);
  while (!remainder.is_zero()) {
    auto it = std::max_element(remainder.terms().begin(), remainder.terms().end(),
                               [i](const auto& a, const auto& b) { return a.first[i - 1] < b.first[i - 1]; });
    if (it->first[i - 1] == 0) throw std::logic_error("inexact division by x_i - x_j");
    Exponent q = it->first;
    mpq_class c = it->second;
    --q[i - 1];
    quotient.add_term(q, c);
    Exponent shifted = q;
    ++shifted[j - 1];
    remainder.add_term(it->first, -c);
    remainder.add_term(shifted, c);
  }
  return quotient;
}

SparsePoly schubert(const Permutation& w, int n) {
  if (w.support_size() > n) throw std::invalid_argument("permutation does not fit in n");
  // Climb from w to w_o by ascents; then descend with divided differences.
  std::vector<int> path;
  Permutation v = w.resized(n);
  for (;;) {
    int ascent = 0;
    for (int i = 1; i < n; ++i)
      if (v(i) < v(i + 1)) {
        ascent = i;
        break;
      }
    if (ascent == 0) break;
    path.push_back(ascent);
    v = v.times_simple(ascent);
  }
  Exponent staircase(n, 0);
  for (int i = 0; i < n; ++i) staircase[i] = n - 1 - i;
  SparsePoly p = SparsePoly::monomial(staircase);
  for (auto it = path.rbegin(); it != path.rend(); ++it) p = divided_difference(*it, p);
  return p;
}

namespace {

// prod_{i<j, j>i+1} (x_i - x_j) in n variables; cached per n.
const SparsePoly& non_adjacent_vandermonde(int n) {
  static std::mutex mutex;
  static std::unordered_map<int, SparsePoly> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  SparsePoly p = SparsePoly::constant(n, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j) p = p * (SparsePoly::variable(n, i) - SparsePoly::variable(n, j));
  return cache.emplace(n, std::move(p)).first->second;
}

int inversion_parity_ascending(const Exponent& a) {
  int parity = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] < a[j]) parity ^= 1;
  return parity;
}

}  // namespace

SparsePoly divided_symmetrization(const SparsePoly& f, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  SparsePoly fn = f.with_nvars(n);
  if (n == 1) return fn;
  // Over the common denominator Vandermonde = prod_{i<j}(x_i - x_j), each summand
  // sigma.(f/D) becomes sign(sigma) sigma.(f * P) / Vandermonde with P the
  // non-adjacent part of the Vandermonde. The numerator is the antisymmetrization
  // of g = f * P, collected by the decreasing rearrangement mu of each exponent.
  SparsePoly g = fn * non_adjacent_vandermonde(n);
  std::map<Exponent, mpq_class> by_mu;
  for (const auto& [e, c] : g.terms()) {
    Exponent mu = e;
    std::sort(mu.rbegin(), mu.rend());
    if (std::adjacent_find(mu.begin(), mu.end()) != mu.end()) continue;
    mpq_class signed_c = inversion_parity_ascending(e) ? mpq_class(-c) : c;
    by_mu[mu] += signed_c;
  }
  SparsePoly numerator(n);
  Exponent delta(n);
  for (int i = 0; i < n; ++i) delta[i] = n - 1 - i;
  SparsePoly result(n);
  bool only_delta = true;
  for (const auto& [mu, c] : by_mu) {
    if (c == 0) continue;
    if (mu == delta) {
      result.add_term(Exponent(n, 0), c);
      continue;
    }
    only_delta = false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      Exponent e(n);
      for (int i = 0; i < n; ++i) e[perm[i]] = mu[i];
      int parity = inversion_parity_ascending(e);
      numerator.add_term(e, parity ? mpq_class(-c) : c);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  if (only_delta) return result;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) numerator = divide_by_difference(numerator, i, j);
  return result + numerator;
}

namespace {

mpz_class cached_beta(int n, std::uint32_t mask) {
  static std::mutex mutex;
  static std::map<std::pair<int, std::uint32_t>, mpz_class> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({n, mask}); it != cache.end()) return it->second;
  }
  IndexSet s;
  for (int k = 1; k < n; ++k)
    if (mask & (1u << (k - 1))) s.push_back(k);
  mpz_class b = beta(n, s);
  std::lock_guard lock(mutex);
  cache.emplace(std::make_pair(n, mask), b);
  return b;
}

}  // namespace

mpz_class ds_monomial(const WeakComposition& c) {
  const int n = static_cast<int>(c.size());
  if (n < 1) throw std::invalid_argument("empty composition");
  if (n > 32) throw std::invalid_argument("composition too long");
  int total = 0;
  for (int ci : c) {
    if (ci < 0) throw std::invalid_argument("negative part");
    total += ci;
  }
  if (total != n - 1) throw std::invalid_argument("monomial degree must be n-1");
  std::uint32_t mask = 0;
  int partial = 0;
  int size = 0;
  for (int k = 1; k < n; ++k) {
    partial += c[k - 1];
    if (partial < k) {
      mask |= 1u << (k - 1);
      ++size;
    }
  }
  mpz_class b = cached_beta(n, mask);
  return size % 2 ? mpz_class(-b) : b;
}

mpq_class ds_scalar(const SparsePoly& f, int n) {
  SparsePoly fn = f.with_nvars(n);
  mpq_class total = 0;
  for (const auto& [e, c] : fn.terms()) {
    int d = std::accumulate(e.begin(), e.end(), 0);
    if (d < n - 1) continue;
    if (d > n - 1) throw std::invalid_argument("scalar divided symmetrization needs degree <= n-1");
    total += c * ds_monomial(e);
  }
  return total;
}

mpz_class macdonald_sum(const Permutation& w, int shift) {
  std::unordered_map<Permutation, mpz_class, PermutationHash> memo;
  // Products commute, so peeling the last letter d of each reduced word gives
  // F(v) = sum_{d in Des(v)} (d + shift) F(v s_d).
  std::function<mpz_class(const Permutation&)> rec = [&](const Permutation& v) -> mpz_class {
    if (auto it = memo.find(v); it != memo.end()) return it->second;
    IndexSet d = descents(v);
    mpz_class total = d.empty() ? 1 : 0;
    for (int i : d) total += (i + shift) * rec(v.times_simple(i));
    memo.emplace(v, total);
    return total;
  };
  return rec(w);
}

mpz_class principal_specialization(const Permutation& w) {
  mpz_class s = macdonald_sum(w, 0);
  mpz_class l = factorial(length(w));
  if (s % l != 0) throw std::logic_error("Macdonald sum not divisible by l!");
  return s / l;
}

mpz_class nu_shifted(const Permutation& u, int m) {
  if (m < 0) throw std::invalid_argument("shift must be nonnegative");
  mpz_class s = macdonald_sum(u, m);
  mpz_class l = factorial(length(u));
  if (s % l != 0) throw std::logic_error("shifted Macdonald sum not divisible by l!");
  return s / l;
}

SparsePoly y_power(const WeakComposition& c) {
  const int n = static_cast<int>(c.size());
  SparsePoly p = SparsePoly::constant(n, 1);
  SparsePoly y(n);
  for (int i = 1; i <= n; ++i) {
    y += SparsePoly::variable(n, i);
    for (int k = 0; k < c[i - 1]; ++k) p = p * y;
  }
  return p;
}

}  // namespace permutahedral
