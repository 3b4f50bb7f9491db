#include "permutahedral/perm.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace permutahedral {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<char> seen(word_.size() + 1, 0);
  for (int v : word_) {
    if (v < 1 || v > size() || seen[v]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(size()));
    }
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> w;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty permutation");
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t comma = text.find(',', start);
      std::string_view tok = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
      if (tok.empty()) throw std::invalid_argument("empty entry in permutation");
      int v = 0;
      for (char ch : tok) {
        if (ch < '0' || ch > '9') throw std::invalid_argument("bad character in permutation");
        v = v * 10 + (ch - '0');
      }
      w.push_back(v);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw std::invalid_argument("bad character in permutation");
      w.push_back(ch - '0');
    }
  }
  return Permutation(std::move(w));
}

Permutation Permutation::resized(int n) const {
  int m = support_size();
  if (n < m) throw std::invalid_argument("cannot shrink below support size");
  std::vector<int> w(word_.begin(), word_.begin() + m);
  for (int i = m + 1; i <= n; ++i) w.push_back(i);
  Permutation p;
  p.word_ = std::move(w);
  return p;
}

int Permutation::support_size() const {
  int m = size();
  while (m > 0 && word_[m - 1] == m) --m;
  return m;
}

Permutation Permutation::normalized() const { return resized(std::max(1, support_size())); }

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (int i = 0; i < size(); ++i) inv[word_[i] - 1] = i + 1;
  Permutation p;
  p.word_ = std::move(inv);
  return p;
}

Permutation Permutation::times_simple(int i) const {
  int n = std::max(size(), i + 1);
  Permutation p = resized(n);
  std::swap(p.word_[i - 1], p.word_[i]);
  return p;
}

Permutation Permutation::operator*(const Permutation& other) const {
  int n = std::max(size(), other.size());
  std::vector<int> w(n);
  for (int i = 1; i <= n; ++i) w[i - 1] = (*this)(other(i));
  Permutation p;
  p.word_ = std::move(w);
  return p;
}

std::string Permutation::str() const {
  std::string out;
  bool commas = size() > 9;
  for (int i = 0; i < size(); ++i) {
    if (commas && i > 0) out += ',';
    out += std::to_string(word_[i]);
  }
  return out;
}

bool operator==(const Permutation& a, const Permutation& b) {
  int m = a.support_size();
  if (m != b.support_size()) return false;
  return std::equal(a.word_.begin(), a.word_.begin() + m, b.word_.begin());
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  int n = std::max(a.size(), b.size());
  for (int i = 1; i <= n; ++i) {
    if (auto c = a(i) <=> b(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t PermutationHash::operator()(const Permutation& w) const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  int m = w.support_size();
  for (int i = 0; i < m; ++i) h = (h ^ static_cast<std::size_t>(w.word()[i])) * 0x100000001b3ULL;
  return h;
}

WeakComposition code(const Permutation& w) {
  const int n = w.size();
  WeakComposition c(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w.word()[j] < w.word()[i]) ++c[i];
  return c;
}

Permutation from_code(const WeakComposition& c) {
  const int n = static_cast<int>(c.size());
  std::vector<int> available(n);
  std::iota(available.begin(), available.end(), 1);
  std::vector<int> w;
  w.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (c[i] < 0 || c[i] > n - 1 - i) {
      throw std::invalid_argument("code entry c_" + std::to_string(i + 1) + " out of range");
    }
    w.push_back(available[c[i]]);
    available.erase(available.begin() + c[i]);
  }
  return Permutation(std::move(w));
}

int length(const Permutation& w) {
  auto c = code(w);
  return std::accumulate(c.begin(), c.end(), 0);
}

IndexSet descents(const Permutation& w) {
  IndexSet d;
  for (int i = 1; i < w.size(); ++i)
    if (w(i) > w(i + 1)) d.push_back(i);
  return d;
}

std::vector<int> shape(const Permutation& w) {
  std::vector<int> lambda;
  for (int ci : code(w))
    if (ci > 0) lambda.push_back(ci);
  std::sort(lambda.rbegin(), lambda.rend());
  return lambda;
}

bool avoids(const Permutation& w, const Permutation& p) {
  const int n = w.size();
  const int k = p.size();
  if (k > n) return true;
  if (k == 0) return false;
  std::vector<int> pos(k);
  // Depth-first search over increasing position tuples, pruning on relative order.
  std::function<bool(int, int)> found = [&](int depth, int start) -> bool {
    if (depth == k) return true;
    for (int i = start; i <= n - (k - depth - 1); ++i) {
      bool ok = true;
      for (int r = 0; r < depth && ok; ++r) {
        bool pattern_less = p(r + 1) < p(depth + 1);
        bool word_less = w(pos[r]) < w(i);
        ok = pattern_less == word_less;
      }
      if (!ok) continue;
      pos[depth] = i;
      if (found(depth + 1, i + 1)) return true;
    }
    return false;
  };
  return !found(0, 1);
}

bool is_vexillary(const Permutation& w) { return avoids(w, Permutation({2, 1, 4, 3})); }

bool is_dominant(const Permutation& w) {
  auto c = code(w);
  return std::is_sorted(c.rbegin(), c.rend());
}

bool is_grassmannian(const Permutation& w) { return descents(w).size() == 1; }

namespace {

using WordMemo = std::unordered_map<Permutation, std::vector<ReducedWord>, PermutationHash>;

const std::vector<ReducedWord>& reduced_words_rec(const Permutation& w, WordMemo& memo) {
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  std::vector<ReducedWord> out;
  IndexSet d = descents(w);
  if (d.empty()) {
    out.push_back({});
  } else {
    for (int i : d) {
      for (const auto& r : reduced_words_rec(w.times_simple(i), memo)) {
        ReducedWord word = r;
        word.push_back(i);
        out.push_back(std::move(word));
      }
    }
  }
  return memo.emplace(w, std::move(out)).first->second;
}

}  // namespace

std::vector<ReducedWord> reduced_words(const Permutation& w) {
  WordMemo memo;
  std::vector<ReducedWord> out = reduced_words_rec(w, memo);
  std::sort(out.begin(), out.end());
  return out;
}

ReducedWord any_reduced_word(const Permutation& w) {
  // Peel the largest right descent each time; reversing gives the word.
  ReducedWord rev;
  Permutation v = w;
  for (;;) {
    IndexSet d = descents(v);
    if (d.empty()) break;
    rev.push_back(d.back());
    v = v.times_simple(d.back());
  }
  return ReducedWord(rev.rbegin(), rev.rend());
}

mpz_class reduced_word_count(const Permutation& w) {
  std::unordered_map<Permutation, mpz_class, PermutationHash> memo;
  std::function<mpz_class(const Permutation&)> count = [&](const Permutation& v) -> mpz_class {
    if (auto it = memo.find(v); it != memo.end()) return it->second;
    IndexSet d = descents(v);
    mpz_class total = d.empty() ? 1 : 0;
    for (int i : d) total += count(v.times_simple(i));
    memo.emplace(v, total);
    return total;
  };
  return count(w);
}

Permutation word_product(const ReducedWord& letters, int n) {
  Permutation w = Permutation::identity(n);
  for (int i : letters) w = w.times_simple(i);
  return w;
}

WeakComposition letter_content(const ReducedWord& word, int n) {
  WeakComposition c(n, 0);
  for (int i : word) {
    if (i < 1 || i > n) throw std::invalid_argument("letter out of range");
    ++c[i - 1];
  }
  return c;
}

Permutation concat(const Permutation& u, const Permutation& v) {
  std::vector<int> w = u.word();
  for (int x : v.word()) w.push_back(x + u.size());
  return Permutation(std::move(w));
}

Permutation shift_embed(const Permutation& u, int left, int right) {
  return concat(concat(Permutation::identity(left), u), Permutation::identity(right));
}

std::vector<Permutation> block_factorization(const Permutation& w) {
  std::vector<Permutation> blocks;
  int start = 0;
  int running_max = 0;
  for (int i = 1; i <= w.size(); ++i) {
    running_max = std::max(running_max, w(i));
    if (running_max == i) {
      std::vector<int> b;
      for (int j = start + 1; j <= i; ++j) b.push_back(w(j) - start);
      blocks.emplace_back(std::move(b));
      start = i;
    }
  }
  return blocks;
}

bool is_indecomposable(const Permutation& w) { return block_factorization(w).size() == 1; }

bool is_quasiindecomposable(const Permutation& w) {
  int nontrivial = 0;
  for (const auto& b : block_factorization(w))
    if (b.size() > 1) ++nontrivial;
  return nontrivial == 1;
}

std::vector<Permutation> cyclic_shifts(const Permutation& w) {
  auto blocks = block_factorization(w);
  const std::size_t k = blocks.size();
  std::vector<Permutation> shifts;
  for (std::size_t i = 0; i < k; ++i) {
    Permutation s;
    for (std::size_t j = 0; j < k; ++j) s = concat(s, blocks[(i + j) % k]);
    shifts.push_back(std::move(s));
  }
  return shifts;
}

bool is_lukasiewicz_composition(const WeakComposition& c) {
  int partial = 0;
  for (std::size_t k = 1; k < c.size(); ++k) {
    partial += c[k - 1];
    if (partial < static_cast<int>(k)) return false;
  }
  return true;
}

bool is_lukasiewicz(const Permutation& w) {
  if (length(w) != w.size() - 1) return false;
  return is_lukasiewicz_composition(code(w));
}

WeakComposition abar(const Permutation& w) {
  auto c = code(w);
  const int n = w.size();
  WeakComposition a(n, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j)
      if (c[j - 1] > i - j) ++a[i - 1];
  return a;
}

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

mpz_class binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

mpz_class catalan(int n) { return binomial(2 * n, n) / (n + 1); }

mpz_class beta(int n, const IndexSet& descent_set) {
  for (int s : descent_set)
    if (s < 1 || s >= n) throw std::invalid_argument("descent index out of range");
  const int k = static_cast<int>(descent_set.size());
  if (k > 30) throw std::invalid_argument("descent set too large");
  mpz_class total = 0;
  const mpz_class n_fact = factorial(n);
  // Inclusion-exclusion: beta(S) = sum_{T subset S} (-1)^{|S-T|} alpha(T), where
  // alpha(T) counts permutations with descent set contained in T.
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    mpz_class term = n_fact;
    int prev = 0;
    int size = 0;
    for (int b = 0; b < k; ++b) {
      if (mask & (1u << b)) {
        term /= factorial(descent_set[b] - prev);
        prev = descent_set[b];
        ++size;
      }
    }
    term /= factorial(n - prev);
    if ((k - size) % 2) total -= term;
    else total += term;
  }
  return total;
}

bool is_coxeter(const Permutation& w) {
  const Permutation v = w.normalized();
  const int n = v.size();
  if (n < 2) return false;
  return length(v) == n - 1 && is_indecomposable(v);
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<Permutation> permutations_of_length(int n, int len) {
  std::vector<Permutation> out;
  WeakComposition c(n, 0);
  std::function<void(int, int)> rec = [&](int i, int remaining) {
    if (i == n) {
      if (remaining == 0) out.push_back(from_code(c));
      return;
    }
    int cap = std::min(remaining, n - 1 - i);
    for (int v = 0; v <= cap; ++v) {
      c[i] = v;
      rec(i + 1, remaining - v);
    }
    c[i] = 0;
  };
  rec(0, len);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> s_prime(int n) { return permutations_of_length(n, n - 1); }

}  // namespace permutahedral
