#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace permutahedral {

/// Sequence of nonnegative integers (codes, letter contents, antidiagonal weights).
using WeakComposition = std::vector<int>;

/// Letters i_1 ... i_l of a word in the simple transpositions s_i.
using ReducedWord = std::vector<int>;

/// Subset of [n-1], stored sorted.
using IndexSet = std::vector<int>;

/// A permutation in one-line notation.
///
/// The word may carry trailing fixed points; two permutations compare equal
/// when they agree after those are stripped, so w and its image under
/// S_n -> S_{n+1} are the same element. Operations that depend on an ambient
/// size (descents, block factorization, pattern containment) use size().
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  static Permutation longest(int n);
  /// "53124768" for n <= 9, "10,3,1,..." otherwise. Commas are always accepted.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }

  /// w(i) for 1-based i; positions beyond size() are fixed.
  int operator()(int i) const { return i <= size() ? word_[i - 1] : i; }

  /// Same element with ambient size n (pads fixed points, or strips them).
  Permutation resized(int n) const;
  /// Strip trailing fixed points (the identity keeps one entry).
  Permutation normalized() const;
  /// Smallest n such that the permutation lives in S_n.
  int support_size() const;

  Permutation inverse() const;
  /// Right multiplication by s_i: swaps the entries in positions i and i+1.
  Permutation times_simple(int i) const;
  /// Composition (u * v)(i) = u(v(i)).
  Permutation operator*(const Permutation& other) const;

  std::string str() const;

  friend bool operator==(const Permutation& a, const Permutation& b);
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);

 private:
  std::vector<int> word_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& w) const;
};

WeakComposition code(const Permutation& w);
Permutation from_code(const WeakComposition& c);

int length(const Permutation& w);
IndexSet descents(const Permutation& w);
std::vector<int> shape(const Permutation& w);

/// True iff no subsequence of w is order-isomorphic to p. Uses the ambient
/// sizes of both words as given.
bool avoids(const Permutation& w, const Permutation& p);

bool is_vexillary(const Permutation& w);
bool is_dominant(const Permutation& w);
/// Exactly one descent.
bool is_grassmannian(const Permutation& w);

/// All reduced words, sorted lexicographically.
std::vector<ReducedWord> reduced_words(const Permutation& w);
/// One reduced word (lexicographically smallest).
ReducedWord any_reduced_word(const Permutation& w);
/// |Red(w)| by memoized recursion on right descents.
mpz_class reduced_word_count(const Permutation& w);
/// s_{i_1} ... s_{i_l} applied to the identity of S_n.
Permutation word_product(const ReducedWord& letters, int n);

WeakComposition letter_content(const ReducedWord& word, int n);

/// u x v: v shifted by |u| and appended to u.
Permutation concat(const Permutation& u, const Permutation& v);
/// 1^left x u x 1^right.
Permutation shift_embed(const Permutation& u, int left, int right = 0);

std::vector<Permutation> block_factorization(const Permutation& w);
bool is_indecomposable(const Permutation& w);
bool is_quasiindecomposable(const Permutation& w);
std::vector<Permutation> cyclic_shifts(const Permutation& w);

bool is_lukasiewicz_composition(const WeakComposition& c);
bool is_lukasiewicz(const Permutation& w);

WeakComposition abar(const Permutation& w);

/// Number of permutations of S_n with descent set exactly S.
mpz_class beta(int n, const IndexSet& descent_set);

/// Product of all s_1..s_{n-1}, each once.
bool is_coxeter(const Permutation& w);

std::vector<Permutation> all_permutations(int n);
/// S'_n = { w in S_n : l(w) = n-1 }, in lexicographic one-line order.
std::vector<Permutation> permutations_of_length(int n, int len);
std::vector<Permutation> s_prime(int n);

mpz_class factorial(int n);
mpz_class binomial(int n, int k);
mpz_class catalan(int n);

}  // namespace permutahedral
