#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <gmpxx.h>

#include "permutahedral/perm.hpp"

namespace permutahedral {

/// Element of the commutative algebra on u_1..u_{n-1} with relations
/// 2u_i^2 = u_i u_{i-1} + u_i u_{i+1} (u_0 = u_n = 0), written in the basis of
/// squarefree monomials u_I. Bit k-1 of a key marks k in I.
class KElement {
 public:
  using Subset = std::uint32_t;

  explicit KElement(int n);
  static KElement one(int n);
  static KElement basis(int n, const IndexSet& subset);

  int n() const { return n_; }
  const std::map<Subset, mpq_class>& coefficients() const { return coeffs_; }
  mpq_class coefficient(const IndexSet& subset) const;

  void add(Subset key, const mpq_class& c);
  KElement& operator+=(const KElement& other);
  friend bool operator==(const KElement& a, const KElement& b) = default;

  std::string str() const;

 private:
  int n_;
  std::map<Subset, mpq_class> coeffs_;
};

/// u_i * e in the squarefree basis.
KElement multiply_by_generator(const KElement& e, int i);

/// u_1^{c_1} ... u_{n-1}^{c_{n-1}} in the squarefree basis (c has n-1 or n parts, c_n = 0).
KElement reduce_word_monomial(const WeakComposition& c, int n);

/// Coefficient of u_{[n-1]}.
mpq_class integral(const KElement& e);

/// Top coefficient of sum_{i in Red(w)} u_{i_1} ... u_{i_{n-1}} for w in S'_n.
mpz_class aw_klyachko(const Permutation& w);

}  // namespace permutahedral
