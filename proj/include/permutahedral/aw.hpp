#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "permutahedral/perm.hpp"

namespace permutahedral {

enum class Method { ds, mixed, klyachko, special, automatic };

std::string to_string(Method m);
/// "ds", "mixed", "klyachko", "special", "auto".
Method parse_method(std::string_view name);

/// Thrown by Method::special when no combinatorial interpretation covers w.
class NotApplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AwResult {
  mpz_class value;
  Method method;
  /// Class used by the special branch ("coxeter", "lukasiewicz", ...), else the method name.
  std::string detail;
  double seconds = 0;
};

/// a_w for w in S'_n with n = w.size().
AwResult aw(const Permutation& w, Method method = Method::automatic);
inline mpz_class aw_value(const Permutation& w, Method method = Method::automatic) { return aw(w, method).value; }

/// sum over Red(w) of A_{c(i)} / (n-1)!.
mpz_class aw_mixed(const Permutation& w);
/// Divided symmetrization of the Schubert polynomial.
mpz_class aw_ds(const Permutation& w);

/// First applicable class in the order coxeter, dominant, 213-avoiding, lukasiewicz,
/// lukasiewicz-conjugate, grassmannian, vexillary.
std::optional<std::pair<std::string, mpz_class>> special_aw(const Permutation& w);
/// Every applicable class with its value.
std::vector<std::pair<std::string, mpz_class>> special_interpretations(const Permutation& w);

struct TauEntry {
  Permutation w;
  AwResult result;
};

/// All of S'_n in lexicographic order of w. Output is independent of the thread count.
std::vector<TauEntry> tau_expansion(int n, Method method = Method::automatic, int threads = 1);

/// a_w = a_{w^{-1}} = a_{w_o w w_o}.
bool check_symmetries(const Permutation& w, Method method = Method::automatic);

/// Sum of a over the cyclic shifts of w.
mpz_class cyclic_sum(const Permutation& w, Method method = Method::automatic);

/// n such that l(u) = n - 1; the ambient size of the shifted copies of u.
int hvector_size(const Permutation& u);
/// a_{1^m x u x 1^{n-p-1-m}}, m = 0..n-p-1, from nu_u(j) by the binomial transform.
std::vector<mpz_class> h_vector(const Permutation& u);
/// Same coefficients, each computed as a_w of the shifted permutation.
std::vector<mpz_class> h_vector_direct(const Permutation& u, Method method = Method::automatic);

/// i in I_w iff s_i occurs before s_{i+1} in a reduced word of the Coxeter element w.
IndexSet coxeter_index_set(const Permutation& w);
Permutation coxeter_from_set(int n, const IndexSet& I);
mpz_class coxeter_aw(const Permutation& w);

/// |SYT(lambda, m-1)| for w Grassmannian with descent m and shape lambda.
mpz_class grassmannian_aw(const Permutation& w);

}  // namespace permutahedral
