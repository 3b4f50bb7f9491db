#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "permutahedral/perm.hpp"

namespace permutahedral {

using Exponent = std::vector<int>;

/// Higher total degree first, then lexicographically larger exponent first.
struct GradedLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Multivariate polynomial in x_1..x_m with exact rational coefficients.
/// Exponent vectors always have length nvars(); zero coefficients are never stored.
class SparsePoly {
 public:
  using Terms = std::map<Exponent, mpq_class, GradedLexGreater>;

  explicit SparsePoly(int nvars = 0) : nvars_(nvars) {}

  static SparsePoly constant(int nvars, const mpq_class& c);
  /// x_i, 1-based.
  static SparsePoly variable(int nvars, int i);
  static SparsePoly monomial(const Exponent& e, const mpq_class& c = 1);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponent& e, const mpq_class& c);
  mpq_class coefficient(const Exponent& e) const;
  /// -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  bool is_constant() const;

  /// Same polynomial viewed in m variables; dropping a variable requires it to be absent.
  SparsePoly with_nvars(int m) const;

  /// s_i . f: exchanges x_i and x_{i+1}.
  SparsePoly swap_variables(int i) const;
  /// sigma . f, i.e. x_i -> x_{sigma(i)}.
  SparsePoly permute_variables(const Permutation& sigma) const;

  mpq_class evaluate(std::span<const mpq_class> point) const;

  SparsePoly& operator+=(const SparsePoly& other);
  SparsePoly& operator-=(const SparsePoly& other);
  SparsePoly& operator*=(const mpq_class& c);

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(SparsePoly a, const mpq_class& c) { return a *= c; }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b);

  /// "x1^2*x2 + x1^2*x3", "1/2*x1 - x2", "0".
  std::string str() const;

 private:
  int nvars_;
  Terms terms_;
};

/// (f - s_i f) / (x_i - x_{i+1}).
SparsePoly divided_difference(int i, const SparsePoly& f);

/// Exact quotient f / (x_i - x_j); throws std::logic_error on a nonzero remainder.
SparsePoly divide_by_difference(const SparsePoly& f, int i, int j);

/// Schubert polynomial of w in n variables, by divided differences from
/// x_1^{n-1} x_2^{n-2} ... x_{n-1}.
SparsePoly schubert(const Permutation& w, int n);
inline SparsePoly schubert(const Permutation& w) { return schubert(w, w.size()); }

/// sum_{sigma in S_n} sigma . ( f / prod_i (x_i - x_{i+1}) ), as an exact polynomial.
SparsePoly divided_symmetrization(const SparsePoly& f, int n);

/// Divided symmetrization of x^c for c with n parts summing to n-1:
/// (-1)^{|S_c|} beta_n(S_c), S_c = { k : c_1 + ... + c_k < k }.
mpz_class ds_monomial(const WeakComposition& c);

/// Divided symmetrization of a polynomial whose terms all have degree n-1,
/// evaluated monomial by monomial with ds_monomial.
mpq_class ds_scalar(const SparsePoly& f, int n);

/// sum over Red(w) of prod_k (i_k + shift).
mpz_class macdonald_sum(const Permutation& w, int shift = 0);

/// nu_w = Schubert polynomial of w at (1, 1, ...), via Macdonald's reduced word identity.
mpz_class principal_specialization(const Permutation& w);

/// nu_u(m) = nu of 1^m x u, via the shifted Macdonald sum.
mpz_class nu_shifted(const Permutation& u, int m);

/// Monomial x^c in c.size() variables.
inline SparsePoly monomial_of(const WeakComposition& c) { return SparsePoly::monomial(c); }

/// prod_i (x_1 + ... + x_i)^{c_i} in c.size() variables.
SparsePoly y_power(const WeakComposition& c);

}  // namespace permutahedral
