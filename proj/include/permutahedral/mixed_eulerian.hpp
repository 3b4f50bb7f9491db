#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "permutahedral/perm.hpp"

namespace permutahedral {

/// A_c = <y^c>_n with y_i = x_1 + ... + x_i, for c with n parts summing to n-1.
/// Returns 0 when the last part is positive. Values are memoized process-wide.
mpz_class mixed_eulerian(const WeakComposition& c);

/// Same number obtained by solving the coin-moving linear relations
///   2 A_c = A_{c - e_i + e_{i-1}} + A_{c - e_i + e_{i+1}}   (c_i >= 2, i <= n-1, index 0 = n)
/// with A = 0 when c_n > 0 and A_{(1,...,1,0)} = (n-1)!, over the set of
/// compositions reachable from c.
mpz_class mixed_eulerian_petrov(const WeakComposition& c);

/// Petrov solution for every composition of W_n at once.
std::map<WeakComposition, mpq_class> petrov_table(int n);

/// All c with n parts summing to n-1 (last part unrestricted), lexicographic.
std::vector<WeakComposition> weak_compositions(int n);

/// sum over cyclic rotations c' of c of A_{c'} / (n-1)!.
mpq_class cyclic_class_sum(const WeakComposition& c);

/// Coefficients of sum_{m=0}^{n-p-1} A_{0^m a 0^{n-p-m}} t^m for a strong composition a of n-1.
std::vector<mpz_class> connected_gf(const std::vector<int>& a);

/// Numerator of sum_j (1+j)^{a_1} ... (p+j)^{a_p} t^j over (1-t)^n, from the
/// first n+1 series coefficients. Trailing zeros are trimmed.
std::vector<mpz_class> connected_gf_series(const std::vector<int>& a);

/// Number of permutations of S_m with exactly k descents, by direct tally.
mpz_class eulerian_number_tally(int m, int k);

/// "composition,value" lines for every c in W_n with c_n = 0.
std::string mixed_eulerian_csv(int n);

}  // namespace permutahedral
